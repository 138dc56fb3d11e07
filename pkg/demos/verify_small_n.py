"""Check every 3-vertex and 4-vertex instance for a rainbow spanning arborescence.

    python3 demos/verify_small_n.py
"""

from rainbow_arb.harness import verify_campaign

for n in (3, 4):
    s = verify_campaign(n, n - 1, "exhaustive")
    print(f"n={n} k={n - 1}: {s['found']}/{s['total']} instances have one, {s['none']} do not")

s = verify_campaign(7, 6, "sample", samples=500, seed=1)
print(f"n=7 sample of {s['total']}: found={s['found']} none={s['none']} search nodes={s['nodes']}")
