"""Balanced assignments for the basic version.

Starting from any first-week coloring of the padded instance, merges are
applied while possible.  A merge picks a time ``t`` in the first week and two
workers owning boundary tasks on distinct cycles of the label permutation,
then exchanges everything the two workers do after ``t``.  Each merge joins
two cycles.  A balanced assignment exists iff the process ends on a single
cycle, and that coloring then yields a period-``q`` plan directly.

Times are handled in base coordinates: the first occurrence of a task is
``[start, end)`` and a merge time lies in ``(0, L]``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .assignment import PeriodicAssignment, is_balanced, is_feasible
from .augmentation import AugmentedInstance, augment, restrict_plan
from .coloring import (
    FirstWeekColoring,
    Infeasible,
    color_first_week,
    is_proper,
    slot_interval,
)
from .digraph import LabelPermutation, cycle_count, label_permutation
from .model import InputError, Instance, boundary_tasks, max_overlap_depth


@dataclass(frozen=True)
class MergeCandidate:
    time: int
    """Merge time in week-two coordinates (first occurrences end in ``(L, 2L]``)."""
    pair: tuple[int, int]
    units_per_week: int

    @property
    def base_time(self) -> int:
        return self.time - self.units_per_week


@dataclass(frozen=True)
class MergeStep:
    candidate: MergeCandidate
    cycles_before: int
    cycles_after: int


@dataclass
class Decision:
    """Outcome of a balancedness decision.

    ``status`` is ``"yes"``, ``"no"`` or ``"infeasible"``.  A yes carries the
    witness coloring of the padded instance and its Hamiltonian cycle; a no
    carries the cycle partition that survived saturation.
    """

    status: str
    augmented: Optional[AugmentedInstance] = None
    coloring: Optional[FirstWeekColoring] = None
    cycles: list[list[int]] = field(default_factory=list)
    merges: list[MergeStep] = field(default_factory=list)
    witness_point: Optional[int] = None
    witness_depth: Optional[int] = None

    @property
    def yes(self) -> bool:
        return self.status == "yes"

    def to_json(self) -> dict:
        out: dict = {"status": self.status}
        if self.status == "yes":
            out["hamiltonian_cycle"] = self.cycles[0]
            out["coloring"] = [
                {"task": t, "shifted": sh, "worker": w}
                for (t, sh), w in sorted(self.coloring.color.items())
            ]
            out["merges"] = len(self.merges)
        elif self.status == "no":
            out["cycle_partition"] = self.cycles
            out["merges"] = len(self.merges)
        else:
            out["point"] = self.witness_point
            out["depth"] = self.witness_depth
        if self.augmented is not None:
            out["fictitious_tasks"] = list(self.augmented.fictitious_ids)
        return out


def _not_inside(instance: Instance, coloring: FirstWeekColoring, worker: int, t: int) -> bool:
    # a slot ending at t or starting at t does not straddle t
    for key in coloring.slots_of(worker):
        s, e = slot_interval(instance, key)
        if s < t < e:
            return False
    return True


def find_merge(instance: Instance, coloring: FirstWeekColoring) -> Optional[MergeCandidate]:
    """First mergeable (time, pair) in ascending time, then ascending pair order."""
    U = sorted(boundary_tasks(instance))
    if len(U) != instance.workers:
        raise ValueError("merges need exactly one boundary task per worker")
    perm = label_permutation(instance, coloring)
    cycle_of = {v: k for k, cyc in enumerate(perm.cycles()) for v in cyc}
    if max(cycle_of.values(), default=0) == 0:
        return None
    L = instance.units_per_week
    times = sorted({t.end for t in instance.tasks})
    for t in times:
        ok = {i: _not_inside(instance, coloring, coloring.base(i), t) for i in U}
        for a, i1 in enumerate(U):
            if not ok[i1]:
                continue
            for i2 in U[a + 1:]:
                if ok[i2] and cycle_of[i1] != cycle_of[i2]:
                    return MergeCandidate(t + L, (i1, i2), L)
    return None


def apply_merge(instance: Instance, coloring: FirstWeekColoring, candidate: MergeCandidate) -> FirstWeekColoring:
    """Swap the two workers' slots that end after the merge time."""
    t = candidate.base_time
    i1, i2 = candidate.pair
    a, b = coloring.base(i1), coloring.base(i2)
    assert _not_inside(instance, coloring, a, t) and _not_inside(instance, coloring, b, t)
    before = cycle_count(label_permutation(instance, coloring))
    color = dict(coloring.color)
    for key, w in coloring.color.items():
        if w in (a, b) and slot_interval(instance, key)[1] > t:
            color[key] = b if w == a else a
    merged = FirstWeekColoring(coloring.workers, color)
    assert is_proper(instance, merged), "merge broke properness"
    after = cycle_count(label_permutation(instance, merged))
    assert after == before - 1, f"merge took {before} cycles to {after}"
    return merged


def saturate_merges(instance: Instance, coloring: FirstWeekColoring,
                    ledger: Optional[list[MergeStep]] = None) -> FirstWeekColoring:
    """Merge until no candidate is left; at most ``q`` rounds."""
    for _ in range(instance.workers + 1):
        cand = find_merge(instance, coloring)
        if cand is None:
            return coloring
        before = cycle_count(label_permutation(instance, coloring))
        coloring = apply_merge(instance, coloring, cand)
        if ledger is not None:
            ledger.append(MergeStep(cand, before, before - 1))
    raise AssertionError("more merges than workers")


def decide_balanced_basic(instance: Instance) -> Decision:
    if instance.is_extended:
        instance = instance.with_schedules(None)
    if len(boundary_tasks(instance)) > instance.workers:
        depth = max_overlap_depth(instance)
        return Decision("infeasible", witness_point=0, witness_depth=depth)
    aug = augment(instance)
    inst = aug.augmented
    first = color_first_week(inst)
    if isinstance(first, Infeasible):
        return Decision("infeasible", aug, witness_point=first.point, witness_depth=first.depth)
    merges: list[MergeStep] = []
    final = saturate_merges(inst, first, merges)
    cycles = label_permutation(inst, final).cycles()
    status = "yes" if len(cycles) == 1 else "no"
    return Decision(status, aug, final, cycles, merges)


def worker_rotation(instance: Instance, coloring: FirstWeekColoring) -> dict[int, int]:
    """Worker map ``w -> w'``: whoever does worker ``w``'s week next time."""
    U = sorted(boundary_tasks(instance))
    inverse_base = {coloring.base(i): i for i in U}
    return {w: coloring.shifted(inverse_base[w]) for w in range(1, instance.workers + 1)}


def build_period_q_plan(instance: Instance, hamiltonian: FirstWeekColoring,
                        aug: Optional[AugmentedInstance] = None) -> PeriodicAssignment:
    """Period-``q`` plan by rotating the witness week along the worker cycle.

    ``instance`` is the padded instance the coloring belongs to; when ``aug``
    is given the plan is restricted back to the real tasks.
    """
    q = instance.workers
    perm = label_permutation(instance, hamiltonian)
    if cycle_count(perm) != 1:
        raise ValueError("coloring does not label a Hamiltonian cycle")
    tau = worker_rotation(instance, hamiltonian)
    table = {}
    for i in instance.task_ids:
        w = hamiltonian.base(i)
        for r in range(1, q + 1):
            table[(i, r)] = w
            w = tau[w]
    plan = PeriodicAssignment(q, table)
    assert is_feasible(instance, plan)
    assert is_balanced(instance, plan)
    if aug is not None:
        plan = restrict_plan(aug, plan)
        assert is_feasible(aug.base, plan) and is_balanced(aug.base, plan)
    return plan.canonical()


def solve_basic(instance: Instance) -> tuple[Decision, Optional[PeriodicAssignment]]:
    decision = decide_balanced_basic(instance)
    if not decision.yes:
        return decision, None
    plan = build_period_q_plan(decision.augmented.augmented, decision.coloring, decision.augmented)
    return decision, plan


def closed_formula_plan(instance: Instance) -> PeriodicAssignment:
    """Explicit period-``q`` plan for ``q >= 2n``: task ``i`` in week ``r`` goes to ``r mod q + 2 - 2i`` (mod ``q``)."""
    n, q = instance.n, instance.workers
    if q < 2 * n:
        raise InputError(f"closed formula needs q >= 2n (q={q}, n={n})")
    table = {}
    for i in instance.task_ids:
        for r in range(1, q + 1):
            v = r % q + 2 - 2 * i
            table[(i, r)] = v if v > 0 else v + q
    plan = PeriodicAssignment(q, table)
    assert is_feasible(instance, plan) and is_balanced(instance, plan)
    return plan


def min_workers(instance: Instance, probes: Optional[list[tuple[int, bool]]] = None) -> int:
    """Fewest workers admitting a balanced feasible assignment (binary search).

    The worker count of ``instance`` is ignored.  ``probes`` collects the
    ``(q, answer)`` pairs evaluated.
    """
    base = instance.with_schedules(None)
    lo = max(1, max_overlap_depth(base))
    hi = max(lo, 2 * base.n)

    def ok(q: int) -> bool:
        ans = decide_balanced_basic(base.with_workers(q)).yes
        if probes is not None:
            probes.append((q, ans))
        return ans

    while lo < hi:
        mid = (lo + hi) // 2
        if ok(mid):
            hi = mid
        else:
            lo = mid + 1
    return lo
