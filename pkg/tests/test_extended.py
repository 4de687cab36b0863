import math
import random

import pytest

from periodic_roster import (
    Instance,
    InputError,
    Schedule,
    all_non_overlapping_schedules,
    as_basic_extended,
    decide_balanced_basic,
    decide_balanced_extended,
    is_balanced,
    is_feasible,
    solve_basic,
    solve_extended,
)
from periodic_roster.assignment import WeekDecomposition
from periodic_roster.extended import build_periodic_plan_extended, chain_labels
from periodic_roster.model import schedule_duration
from periodic_roster.oracle import oracle_decide_extended

from families import random_instance


def test_basic_as_extended(E1, E2):
    assert decide_balanced_extended(as_basic_extended(E2)).yes
    d = decide_balanced_extended(as_basic_extended(E1))
    assert d.status == "no" and d.components == [[1], [3]]


def test_e2_plan(E2):
    inst = as_basic_extended(E2)
    d, plan = solve_extended(inst)
    assert plan.period % 2 == 0 and plan.period <= 8
    assert is_feasible(inst, plan) and is_balanced(inst, plan)
    assert d.to_json()["period_bound"] == 8


def test_night_shift(night_shift):
    d = decide_balanced_extended(night_shift)
    assert d.status == "no"
    assert len(night_shift.schedules) == 19
    assert all(schedule_duration(night_shift, s) <= 36 for s in night_shift.schedules)
    assert decide_balanced_basic(night_shift.with_schedules(None)).yes


def test_single_q_cycle_label_gives_period_q():
    inst = Instance.from_intervals(10, [(-3, 2), (-1, 4)], 2).with_schedules(
        [Schedule(frozenset({1}), 2), Schedule(frozenset({2}), 1)]
    )
    d, plan = solve_extended(inst)
    assert d.yes and len(d.labels) == 1
    assert plan.period == 2
    _, basic = solve_basic(inst.with_schedules(None))
    assert plan == basic


def test_chain_labels_constant_identity():
    inst = Instance.from_intervals(10, [(-3, 2), (-1, 4)], 2)
    ident = WeekDecomposition((Schedule(frozenset({1}), 1), Schedule(frozenset({2}), 2)))
    plan = chain_labels(inst, [ident, ident])
    assert plan.table == {(1, 1): 1, (2, 1): 2, (1, 2): 1, (2, 2): 2}


def test_infeasible_and_invalid():
    inst = Instance.from_intervals(10, [(-3, 2), (3, 4)], 2).with_schedules([])
    assert decide_balanced_extended(inst).status == "infeasible"
    with pytest.raises(InputError):
        decide_balanced_extended(inst.with_schedules(None))
    with pytest.raises(ValueError):
        build_periodic_plan_extended(inst)
    too_many = Instance.from_intervals(10, [(-3, 2), (-1, 4)], 1).with_schedules([])
    assert decide_balanced_extended(too_many).status == "infeasible"


def test_extended_matches_basic_with_full_sets():
    rng = random.Random(4)
    for _ in range(200):
        inst = random_instance(rng, L=8, max_n=3, qs=(1, 2, 3))
        ext = as_basic_extended(inst)
        assert decide_balanced_extended(ext).yes == decide_balanced_basic(inst).yes


def test_random_subsets_against_oracle():
    rng = random.Random(12)
    q = 2
    for _ in range(300):
        inst = random_instance(rng, L=8, max_n=3, qs=(q,))
        full = all_non_overlapping_schedules(inst)
        S = rng.sample(full, rng.randint(0, min(10, len(full))))
        ext = inst.with_schedules(S)
        d, plan = solve_extended(ext)
        assert d.yes == oracle_decide_extended(ext)
        if plan is not None:
            assert plan.period <= q * q * math.factorial(q)
            assert is_feasible(ext, plan) and is_balanced(ext, plan)
