import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import brute_rainbow_of_size, brute_rainbow_spanning, instances, is_arborescence, make
from rainbow_arb.certificate import check_certificate
from rainbow_arb.errors import BudgetExhausted, TooLarge
from rainbow_arb.exact import SearchConfig, SearchStats, count_rainbow_spanning, enumerate_arborescences, find_rainbow
from rainbow_arb.instance import ColoredArc, ColoredInstance


def test_count_on_two_color_example():
    # A_1 = 1->2->3, A_2 = {1->3, 3->2}: only {(1:1->2), (2:1->3)} works
    inst = make(3, [(1, 2), (2, 3)], [(1, 3), (3, 2)])
    assert count_rainbow_spanning(inst) == 1
    cert = find_rainbow(inst)
    assert sorted(cert.arcs) == [ColoredArc(1, 1, 2), ColoredArc(2, 1, 3)]


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_arborescence_count_matches_cayley(n):
    # n^(n-2) labeled trees times n root choices
    arbs = list(enumerate_arborescences(n))
    assert len(arbs) == n ** (n - 1)
    assert len({a.parents for a in arbs}) == len(arbs)
    for a in arbs:
        assert is_arborescence([(0, a.parents[v], v) for v in range(1, n + 1) if v != a.root], range(1, n + 1))


def test_enumeration_size_limit():
    with pytest.raises(TooLarge):
        enumerate_arborescences(6)


def test_root_dichotomy():
    # colors 1 and 2 both point into 1 from different sides; only root 2 or 3 can work
    inst = make(3, [(2, 1), (2, 3)], [(3, 1), (3, 2)])
    roots = {({1, 2, 3} - {a.head for a in s}).pop() for s in brute_rainbow_spanning(inst)}
    for r in range(1, 4):
        got = find_rainbow(inst, SearchConfig(required_root=r))
        assert (got is not None) == (r in roots)
        if got is not None:
            assert got.root == r and check_certificate(inst, got, require_root=r)


def test_node_budget_raises_not_none():
    inst = make(5, *[[(1, 2), (2, 3), (3, 4), (4, 5)]] * 4)
    with pytest.raises(BudgetExhausted) as exc:
        find_rainbow(inst, SearchConfig(node_budget=1))
    assert exc.value.kind == "nodes"


def test_counting_respects_budget():
    inst = make(6, *[[(1, 2), (1, 3), (1, 4), (1, 5), (1, 6)]] * 5)
    with pytest.raises(BudgetExhausted):
        count_rainbow_spanning(inst, node_budget=3)


def test_stats_accumulate():
    stats = SearchStats()
    find_rainbow(make(3, [(1, 2), (2, 3)], [(1, 3), (3, 2)]), stats=stats)
    assert stats.nodes > 0


@settings(max_examples=200, deadline=None)
@given(instances(2, 5))
def test_existence_matches_brute_force(inst):
    sols = brute_rainbow_spanning(inst)
    cert = find_rainbow(inst)
    assert (cert is not None) == bool(sols)
    if cert is not None:
        assert frozenset(cert.arcs) in sols


@settings(max_examples=100, deadline=None)
@given(instances(2, 5, k=lambda n: n))
def test_count_matches_brute_force(inst):
    assert count_rainbow_spanning(inst) == len(brute_rainbow_spanning(inst))


@settings(max_examples=100, deadline=None)
@given(instances(3, 5), st.data())
def test_target_size(inst, data):
    size = data.draw(st.integers(1, inst.n - 1))
    cert = find_rainbow(inst, SearchConfig(target_size=size))
    assert (cert is not None) == brute_rainbow_of_size(inst, size)
    if cert is not None:
        assert check_certificate(inst, cert, require_spanning=False, size=size)


@settings(max_examples=100, deadline=None)
@given(instances(2, 4), st.data())
def test_required_root_matches_brute(inst, data):
    r = data.draw(st.integers(1, inst.n))
    want = any(
        not any(a.head == r for a in s) for s in brute_rainbow_spanning(inst)
    )
    cert = find_rainbow(inst, SearchConfig(required_root=r))
    assert (cert is not None) == want


def test_all_three_vertex_two_color_instances_have_a_rainbow():
    arbs = list(enumerate_arborescences(3))
    for a, b in itertools.product(arbs, repeat=2):
        inst = ColoredInstance(3, (a, b))
        assert find_rainbow(inst) is not None
