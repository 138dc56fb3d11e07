"""Rainbow spanning arborescences in unions of spanning arborescences.

Exact search, the constructive special-case solvers, the 3DM hardness
gadget, instance generators and a verification harness.

>>> from rainbow_arb import validate_instance, find_rainbow
>>> inst = validate_instance([(1, 1, 2), (1, 2, 3), (2, 1, 3), (2, 3, 2)], n=3, k=2)
>>> sorted(find_rainbow(inst).arcs)
[ColoredArc(color=1, tail=1, head=2), ColoredArc(color=2, tail=1, head=3)]
"""

from .certificate import CertificateCheck, RainbowCertificate, check_certificate
from .errors import BudgetExhausted, PreconditionFailed, RainbowError
from .exact import SearchConfig, SearchStats, count_rainbow_spanning, enumerate_arborescences, find_rainbow
from .gadget import GadgetLayout, ThreeDMInstance, build_gadget, decode_matching, encode_matching
from .generators import GenSpec, enumerate_instances, generate, random_arborescence
from .instance import (
    Arborescence,
    ColoredArc,
    ColoredInstance,
    RhoProfile,
    ShapeReport,
    classify_shape,
    rho_profile,
    validate_instance,
)
from .solvers import *  # noqa: F401,F403
from .solvers import __all__ as _solver_names

__version__ = "0.1.0"

__all__ = [
    "Arborescence", "BudgetExhausted", "CertificateCheck", "ColoredArc", "ColoredInstance",
    "GadgetLayout", "GenSpec", "PreconditionFailed", "RainbowCertificate", "RainbowError",
    "RhoProfile", "SearchConfig", "SearchStats", "ShapeReport", "ThreeDMInstance",
    "build_gadget", "check_certificate", "classify_shape", "count_rainbow_spanning",
    "decode_matching", "encode_matching", "enumerate_arborescences", "enumerate_instances",
    "find_rainbow", "generate", "random_arborescence", "rho_profile", "validate_instance",
    *_solver_names,
]
