"""
Deciding balance and building a period-q plan
=============================================

Pad the instance with short dummy tasks so every worker holds exactly one
boundary task.  Each first week then induces a permutation of boundary tasks
("who does what next week").  Merges join its cycles; one cycle means balance.
"""

from periodic_roster import decide_balanced_basic, load_fixture, solve_basic
from periodic_roster.render import render_ascii

for name in ("E1", "E2"):
    inst = load_fixture(name)
    decision = decide_balanced_basic(inst)
    print(name, decision.status, "cycles:", decision.cycles, "merges:", len(decision.merges))

# E1: whoever does t1 must keep doing it, the Monday overlap forbids a handover
# E2: the two workers swap every week
decision, plan = solve_basic(load_fixture("E2"))
print("period", plan.period)
for (task, week), worker in sorted(plan.table.items(), key=lambda kv: kv[0][::-1]):
    print(f"  week {week}: t{task} -> worker {worker}")

print(render_ascii(load_fixture("E2"), plan, periods=2))
