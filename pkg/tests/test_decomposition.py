import random
from itertools import combinations_with_replacement

from periodic_roster import (
    Instance,
    Schedule,
    all_non_overlapping_schedules,
    as_basic_extended,
    augment,
    boundary_tasks,
    build_universal_set,
    find_decomposition,
    find_decomposition_with_pair,
    label_permutation,
)
from periodic_roster.assignment import WeekDecomposition, check_decomposition

from families import random_instance


def parts(dec):
    return sorted((tuple(sorted(p.finishing)), p.starting) for p in dec.parts)


def all_decompositions(inst):
    out = []
    for combo in combinations_with_replacement(inst.schedules, inst.workers):
        dec = WeekDecomposition(combo)
        try:
            check_decomposition(inst, dec)
        except AssertionError:
            continue
        out.append(dec)
    return out


def test_e2_full_schedule_set(E2):
    inst = augment(as_basic_extended(E2)).augmented
    dec = find_decomposition(inst)
    assert [p[0] for p in parts(dec)] == [(1,), (2, 3)]


def test_uncoverable_task(E2):
    inst = augment(as_basic_extended(E2)).augmented
    no_t2 = inst.with_schedules([s for s in inst.schedules if 2 not in s.finishing])
    assert find_decomposition(no_t2) is None


def test_exact_partition_selected():
    inst = Instance.from_intervals(10, [(-3, 2), (-1, 4)], 2)
    S = [Schedule(frozenset({1}), 2), Schedule(frozenset({2}), 1)]
    dec = find_decomposition(inst.with_schedules(S))
    assert parts(dec) == [((1,), 2), ((2,), 1)]


def test_pair_searches(E2):
    inst = augment(as_basic_extended(E2)).augmented
    loop = find_decomposition_with_pair(inst, 1, 1)
    assert dict(label_permutation(inst, loop).mapping)[1] == 1
    swap = find_decomposition_with_pair(inst, 1, 3)
    assert dict(label_permutation(inst, swap).mapping) == {1: 3, 3: 1}


def test_night_shift_first_task_is_pinned(night_shift):
    inst = augment(night_shift).augmented
    assert find_decomposition(inst) is not None
    assert find_decomposition_with_pair(inst, 1, 5) is None
    assert find_decomposition_with_pair(inst, 1, 1) is not None


def test_pair_infeasible_in_s():
    inst = Instance.from_intervals(10, [(-3, 2), (-1, 4)], 2)
    S = [Schedule(frozenset({1}), 1), Schedule(frozenset({2}), 2)]
    assert find_decomposition_with_pair(inst.with_schedules(S), 1, 2) is None


def test_universal_set_small_cases(E2):
    one = augment(as_basic_extended(Instance.from_intervals(10, [(-3, 2), (4, 6)], 1))).augmented
    assert len(build_universal_set(one)) <= 1
    inst = augment(as_basic_extended(E2)).augmented
    perms = {tuple(sorted(label_permutation(inst, d).mapping.items())) for d in build_universal_set(inst)}
    assert perms == {((1, 1), (3, 3)), ((1, 3), (3, 1))}


def test_universal_set_is_universal():
    rng = random.Random(7)
    checked = 0
    for _ in range(200):
        base = random_instance(rng, L=8, max_n=3, qs=(2, 3))
        if len(boundary_tasks(base)) > base.workers:
            continue
        full = all_non_overlapping_schedules(base)
        S = rng.sample(full, rng.randint(1, len(full)))
        inst = augment(base.with_schedules(S)).augmented
        every = all_decompositions(inst)
        labels = build_universal_set(inst)
        assert (find_decomposition(inst) is None) == (not every)
        realized = {(i, j) for d in labels for i, j in label_permutation(inst, d).mapping.items()}
        needed = {(i, j) for d in every for i, j in label_permutation(inst, d).mapping.items()}
        assert realized == needed
        assert len(labels) <= inst.workers ** 2
        checked += bool(every)
    assert checked > 20
