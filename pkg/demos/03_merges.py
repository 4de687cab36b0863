"""
A merge, step by step
=====================

Start from a first week whose permutation is two fixed points and swap the
two workers' remaining work at a moment when neither is mid-task.
"""

from periodic_roster import augment, find_merge, apply_merge, label_permutation, load_fixture
from periodic_roster.coloring import first_week_from_mapping

padded = augment(load_fixture("E2"))
print("dummy task:", padded.fictitious_ids, "length", padded.epsilon)
inst = padded.augmented

# worker 1 keeps t1, worker 2 keeps the dummy t3 and does t2
loops = first_week_from_mapping(2, {1: 1, 3: 2, 2: 2}, {1: 1, 3: 2})
print("before:", label_permutation(inst, loops).cycles())

cand = find_merge(inst, loops)
print(f"merge boundary tasks {cand.pair} at time {cand.base_time} of week one")
merged = apply_merge(inst, loops, cand)
print("after:", label_permutation(inst, merged).cycles())
