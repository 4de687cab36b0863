"""One test per acceptance criterion; each records a PASS/FAIL line printed at the end of the run."""
import math
import random
import time
from itertools import permutations

import pytest

from periodic_roster import (
    Instance,
    all_non_overlapping_schedules,
    apply_merge,
    augment,
    balance_profile,
    boundary_tasks,
    closed_formula_plan,
    color_first_week,
    decide_balanced_basic,
    decide_balanced_extended,
    decide_feasible,
    find_decomposition,
    is_balanced,
    is_feasible,
    label_permutation,
    lift_component,
    min_workers,
    periodic_color_sequence,
    saturate_merges,
    simulate_random_colors,
    solve_basic,
    solve_extended,
    visit_frequencies,
)
from periodic_roster.digraph import cycle_count
from periodic_roster.oracle import oracle_decide_basic, oracle_decide_extended
from periodic_roster.merge import MergeStep

from families import all_intervals, criterion_family, exhaustive_task_sets, random_colored_graph, random_family


@pytest.fixture(scope="module")
def family():
    return criterion_family() + random_family(500)


@pytest.fixture(scope="module")
def decisions(family):
    return [decide_balanced_basic(inst) for inst in family]


def test_criterion_1_decision_equivalence(family, record_criterion):
    t0 = time.perf_counter()
    mismatches = [inst for inst in family if decide_balanced_basic(inst).yes != oracle_decide_basic(inst)]
    elapsed = time.perf_counter() - t0
    ok = not mismatches and elapsed < 300 and len(family) == 1100
    record_criterion(1, "basic decision agrees with oracle", ok,
                     f"({len(family) - len(mismatches)}/{len(family)} agree, {elapsed:.1f}s)")
    assert ok, mismatches[:3]


def test_criterion_2_period_q_plans(family, decisions, record_criterion):
    yes = bad = 0
    for inst, d in zip(family, decisions):
        if not d.yes:
            continue
        yes += 1
        _, plan = solve_basic(inst)
        counts = set(balance_profile(inst, plan).counts.values())
        if not (plan.period == inst.workers and is_feasible(inst, plan) and is_balanced(inst, plan) and counts == {1}):
            bad += 1
    ok = bad == 0 and yes > 0
    record_criterion(2, "period-q plans feasible, counts exactly 1", ok, f"({yes} yes instances, {bad} bad)")
    assert ok


def test_criterion_3_merge_ledger(family, record_criterion):
    runs = merges = bad = 0
    for inst in family:
        if len(boundary_tasks(inst)) > inst.workers or not decide_feasible(inst):
            continue
        padded = augment(inst).augmented
        start = color_first_week(padded)
        ledger: list[MergeStep] = []
        saturate_merges(padded, start, ledger)
        runs += 1
        merges += len(ledger)
        # replay with independent cycle counts
        col = start
        for step in ledger:
            before = cycle_count(label_permutation(padded, col))
            col = apply_merge(padded, col, step.candidate)
            if cycle_count(label_permutation(padded, col)) != before - 1:
                bad += 1
        if len(ledger) > inst.workers:
            bad += 1
    ok = bad == 0 and runs > 0
    record_criterion(3, "every merge removes exactly one cycle, at most q merges", ok,
                     f"({runs} runs, {merges} merges, {bad} violations)")
    assert ok


def test_criterion_4_closed_formula(record_criterion):
    rng = random.Random(404)
    t0 = time.perf_counter()
    checked = bad = 0
    for n in range(1, 6):
        for q in range(2 * n, 13):
            for _ in range(50):
                L = rng.choice([8, 10, 24, 168])
                iv = all_intervals(L) if L <= 24 else None
                if iv is None:
                    ivs = []
                    for _ in range(n):
                        e = rng.randint(1, L)
                        ivs.append((rng.randint(max(e - L, -L + 1), e - 1), e))
                else:
                    ivs = [rng.choice(iv) for _ in range(n)]
                inst = Instance.from_intervals(L, ivs, q)
                plan = closed_formula_plan(inst)
                checked += 1
                wraps = all(plan.worker(i, r + q) == plan.worker(i, r) for i in inst.task_ids for r in range(1, q + 1))
                if not (is_feasible(inst, plan) and is_balanced(inst, plan) and wraps):
                    bad += 1
    elapsed = time.perf_counter() - t0
    ok = bad == 0 and elapsed < 30
    record_criterion(4, "closed formula plans feasible and balanced", ok,
                     f"({checked} instances, {bad} bad, {elapsed:.1f}s)")
    assert ok


def _components_by_enumeration(g) -> int:
    """Components of the full lifted graph, by union-find over all bijections."""
    parent = {eta: eta for eta in permutations(range(g.n_vertices))}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for eta in parent:
        for p in g.perms:
            a, b = find(eta), find(tuple(p[v] for v in eta))
            if a != b:
                parent[a] = b
    return len({find(x) for x in parent})


def test_criterion_5_pebble_law(record_criterion):
    rng = random.Random(505)
    bad = 0
    for _ in range(100):
        g = random_colored_graph(rng, 5, 3)
        kappa = _components_by_enumeration(g)
        seq = periodic_color_sequence(g)
        counts = visit_frequencies(g, seq)
        target = math.factorial(g.n_vertices - 1) // kappa
        assert math.factorial(g.n_vertices - 1) % kappa == 0
        ok_counts = (counts == target).all()
        ok_period = seq.period <= g.n_arcs * math.factorial(g.n_vertices - 1)
        ok_kappa = lift_component(g).n_components == kappa
        if not (ok_counts and ok_period and ok_kappa):
            bad += 1
    ok = bad == 0
    record_criterion(5, "per-pebble per-arc visits equal (|V|-1)!/kappa", ok, f"(100 graphs, {bad} bad)")
    assert ok


def test_criterion_6_extended_micro(record_criterion):
    rng = random.Random(606)
    t0 = time.perf_counter()
    total = yes = bad = 0
    max_period = 0
    for ts in exhaustive_task_sets(40, max_n=3):
        base = Instance.from_intervals(8, ts, 2)
        full = all_non_overlapping_schedules(base)
        for _ in range(4):
            S = rng.sample(full, rng.randint(0, min(10, len(full))))
            inst = base.with_schedules(S)
            total += 1
            d, plan = solve_extended(inst)
            if d.yes != oracle_decide_extended(inst):
                bad += 1
            if plan is not None:
                yes += 1
                max_period = max(max_period, plan.period)
                if not (plan.period <= 8 and is_feasible(inst, plan) and is_balanced(inst, plan)):
                    bad += 1
    elapsed = time.perf_counter() - t0
    ok = bad == 0 and yes > 0 and elapsed < 600
    record_criterion(6, "extended decision agrees with oracle, period <= q^2 q!", ok,
                     f"({total} instances, {yes} yes, max period {max_period}, {bad} bad, {elapsed:.1f}s)")
    assert ok


def test_criterion_7_night_shift_gap(night_shift, record_criterion):
    feasible = find_decomposition(augment(night_shift).augmented) is not None
    extended = decide_balanced_extended(night_shift).status
    basic = decide_balanced_basic(night_shift.with_schedules(None)).status
    ok = feasible and extended == "no" and basic == "yes"
    record_criterion(7, "schedule constraints break balance", ok,
                     f"(feasible={feasible}, extended={extended}, basic={basic})")
    assert ok


def test_criterion_8_monte_carlo(P1, record_criterion):
    rng = random.Random(808)
    # a single color makes the sequence deterministic, so sampling needs two or more
    graphs = [P1] + [random_colored_graph(rng, 5, 3, min_vertices=2, min_colors=2) for _ in range(10)]
    N = 100_000
    tol = 5 / math.sqrt(N)
    worst = 0.0
    bad = 0
    for k, g in enumerate(graphs):
        big = simulate_random_colors(g, N, seed=1000 + k)
        small = simulate_random_colors(g, 1000, seed=1000 + k)
        worst = max(worst, big.max_deviation)
        if not (big.max_deviation < tol and big.max_deviation < small.max_deviation):
            bad += 1
    ok = bad == 0
    record_criterion(8, "random colors give frequencies near 1/|A|", ok,
                     f"(max deviation {worst:.5f} < {tol:.5f}, {bad} bad)")
    assert ok


def test_criterion_9_min_workers(record_criterion):
    bad = 0
    sets = exhaustive_task_sets(50)
    for ts in sets:
        inst = Instance.from_intervals(8, ts, 1)
        probes: list = []
        q = min_workers(inst, probes)
        truth = next(k for k in range(1, 2 * inst.n + 1)
                     if oracle_decide_basic(inst.with_workers(k), max_tasks=2 * inst.n + 1, max_workers=2 * inst.n))
        consistent = all(ans == (w >= q) for w, ans in probes)
        probes_true = all(oracle_decide_basic(inst.with_workers(w), max_tasks=2 * inst.n + 1,
                                              max_workers=2 * inst.n) == ans for w, ans in probes)
        if q != truth or not consistent or not probes_true:
            bad += 1
    ok = bad == 0
    record_criterion(9, "min_workers matches oracle, probes monotone", ok, f"({len(sets)} task sets, {bad} bad)")
    assert ok
