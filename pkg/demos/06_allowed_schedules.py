"""
When only some weekly schedules are allowed
===========================================

Two workers, a 12 hour night shift across the week boundary and three 18
hour shifts, at most 36 hours per worker per week.  Handing the night shift
over would give both workers 6 of its hours in the same week, and the 54
remaining hours cannot then be split without someone passing 36.  So one
worker keeps the night shift forever: a feasible roster exists, a balanced
one does not.  Drop the hour limit and balance comes back.
"""

from periodic_roster import augment, decide_balanced_basic, decide_balanced_extended, find_decomposition, load_fixture
from periodic_roster.model import schedule_duration

inst = load_fixture("night_shift")
print(len(inst.schedules), "allowed schedules, longest", max(schedule_duration(inst, s) for s in inst.schedules), "h")
print("feasible:", find_decomposition(augment(inst).augmented) is not None)

d = decide_balanced_extended(inst)
print("balanced:", d.status, "components", d.components)
print("without the limit:", decide_balanced_basic(inst.with_schedules(None)).status)
