"""
Feasibility and the first-week coloring
=======================================

A task repeats every week on an integer grid.  Tasks starting at or before
the week boundary spill into the next week.
"""

from periodic_roster import Instance, boundary_tasks, build_interval_graph, color_first_week, max_overlap_depth

# t1 runs from Sunday evening into Monday, t2 mid-week
inst = Instance.from_intervals(10, [(-3, 4), (2, 9)], workers=2)
print("boundary tasks:", sorted(boundary_tasks(inst)))
print("deepest overlap:", max_overlap_depth(inst))

# one slot per task, plus the next occurrence of each boundary task
for slot in build_interval_graph(inst):
    print(slot)

coloring = color_first_week(inst)
print("greedy first week:", dict(coloring.color))

# a single worker cannot do both
print("one worker:", color_first_week(inst.with_workers(1)))
