"""
How many workers?
=================

With at least twice as many workers as tasks an explicit rotation always
works.  Below that, binary search over the decision.
"""

import random

from periodic_roster import Instance, closed_formula_plan, is_balanced, is_feasible, min_workers, load_fixture

rng = random.Random(0)
L = 168  # hours
tasks = []
for _ in range(4):
    end = rng.randint(1, L)
    tasks.append((rng.randint(max(end - 48, -L + 1), end - 1), end))
inst = Instance.from_intervals(L, tasks, workers=8)
plan = closed_formula_plan(inst)
print("rotation plan ok:", bool(is_feasible(inst, plan)), is_balanced(inst, plan))

for name in ("E1", "E2"):
    probes = []
    q = min_workers(load_fixture(name), probes)
    print(name, "needs", q, "workers; probes", probes)
