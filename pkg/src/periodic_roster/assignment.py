"""Periodic assignments and their feasibility / balance checks."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Mapping, Optional

from .model import (
    InputError,
    Instance,
    Schedule,
    boundary_tasks,
    overlaps,
    schedule_is_non_overlapping,
)


@dataclass(frozen=True)
class PeriodicAssignment:
    """Worker of every (task, week) pair for weeks ``1..period``; repeats forever."""

    period: int
    table: Mapping[tuple[int, int], int]

    def worker(self, task: int, week: int) -> int:
        return self.table[(task, (week - 1) % self.period + 1)]

    @property
    def tasks(self) -> list[int]:
        return sorted({i for i, _ in self.table})

    def restricted(self, task_ids) -> "PeriodicAssignment":
        keep = set(task_ids)
        return PeriodicAssignment(self.period, {k: v for k, v in self.table.items() if k[0] in keep})

    def canonical(self) -> "PeriodicAssignment":
        """Relabel workers by order of first appearance (week, then task id)."""
        relabel: dict[int, int] = {}
        for r in range(1, self.period + 1):
            for i in self.tasks:
                w = self.table[(i, r)]
                if w not in relabel:
                    relabel[w] = len(relabel) + 1
        return PeriodicAssignment(self.period, {k: relabel[v] for k, v in sorted(self.table.items())})


@dataclass(frozen=True)
class WeekDecomposition:
    """The ``q`` schedules of one week, part ``k`` being the week of worker ``k + 1``."""

    parts: tuple[Schedule, ...]

    def key(self) -> tuple:
        # workers are interchangeable: compare as a multiset of parts
        return tuple(sorted(p.key() for p in self.parts))


@dataclass(frozen=True)
class BalanceProfile:
    period: int
    counts: Mapping[tuple[int, int], int]


@dataclass(frozen=True)
class FeasibilityResult:
    feasible: bool
    violation: Optional[str] = None

    def __bool__(self) -> bool:
        return self.feasible


def check_well_formed(instance: Instance, plan: PeriodicAssignment) -> None:
    if plan.period < 1:
        raise InputError("period must be positive")
    for i in instance.task_ids:
        for r in range(1, plan.period + 1):
            w = plan.table.get((i, r))
            if w is None:
                raise InputError(f"plan has no worker for task {i}, week {r}")
            if not 1 <= w <= instance.workers:
                raise InputError(f"worker {w} out of range for task {i}, week {r}")
    extra = {i for i, _ in plan.table} - set(instance.task_ids)
    if extra:
        raise InputError(f"plan mentions unknown tasks {sorted(extra)}")


def is_feasible(instance: Instance, plan: PeriodicAssignment) -> FeasibilityResult:
    """Non-overlap over one period plus the wrap to the next week.

    Occurrences two or more weeks apart never intersect, so checking weeks
    ``r`` against ``r`` and ``r + 1`` for ``r`` in ``1..h`` covers everything.
    For extended instances every induced schedule must also belong to the
    instance's schedule set.
    """
    check_well_formed(instance, plan)
    ids = instance.task_ids
    h = plan.period
    for r in range(1, h + 1):
        for a, i in enumerate(ids):
            occ_i = instance.occurrence(i, r)
            w = plan.worker(i, r)
            for i2 in ids[a + 1:]:
                if plan.worker(i2, r) == w and overlaps(occ_i, instance.occurrence(i2, r)):
                    return FeasibilityResult(False, f"({i},{r}) and ({i2},{r}) share worker {w}")
            for i2 in ids:
                if i2 == i:
                    continue
                if plan.worker(i2, r + 1) == w and overlaps(occ_i, instance.occurrence(i2, r + 1)):
                    return FeasibilityResult(False, f"({i},{r}) and ({i2},{r + 1}) share worker {w}")
    if instance.is_extended:
        allowed = set(instance.schedules)
        for r in range(1, h + 1):
            for j in range(1, instance.workers + 1):
                sch = induced_schedules(instance, plan, r, j)
                if sch not in allowed:
                    return FeasibilityResult(False, f"worker {j}, week {r}: {sch!r} not an allowed schedule")
    return FeasibilityResult(True)


def induced_schedules(instance: Instance, plan: PeriodicAssignment, week: int, worker: int) -> Schedule:
    """Schedule worked by ``worker`` during ``week``."""
    if week < 1:
        raise InputError("weeks are numbered from 1")
    finishing = frozenset(i for i in instance.task_ids if plan.worker(i, week) == worker)
    carried = [i for i in sorted(boundary_tasks(instance)) if plan.worker(i, week + 1) == worker]
    if len(carried) > 1:
        raise InputError(f"worker {worker} carries {carried} out of week {week}: plan is infeasible")
    return Schedule(finishing, carried[0] if carried else None)


def balance_profile(instance: Instance, plan: PeriodicAssignment) -> BalanceProfile:
    counts = Counter()
    for i in instance.task_ids:
        for j in range(1, instance.workers + 1):
            counts[(i, j)] = 0
        for r in range(1, plan.period + 1):
            counts[(i, plan.worker(i, r))] += 1
    return BalanceProfile(plan.period, dict(counts))


def is_balanced(instance: Instance, plan: PeriodicAssignment) -> bool:
    q, h = instance.workers, plan.period
    if h % q:
        return False
    return all(c == h // q for c in balance_profile(instance, plan).counts.values())


def check_decomposition(instance: Instance, dec: WeekDecomposition) -> None:
    """Raise ``AssertionError`` unless ``dec`` is a valid week decomposition."""
    assert len(dec.parts) == instance.workers, "decomposition must have one part per worker"
    finishing = Counter(i for p in dec.parts for i in p.finishing)
    assert finishing == Counter(instance.task_ids), "finishing sets must partition the tasks"
    starting = Counter(p.starting for p in dec.parts if p.starting is not None)
    assert starting == Counter(boundary_tasks(instance)), "carried tasks must cover the boundary set once"
    for p in dec.parts:
        assert schedule_is_non_overlapping(instance, p), f"{p!r} overlaps"
    if instance.is_extended:
        allowed = set(instance.schedules)
        assert all(p in allowed for p in dec.parts), "part outside the schedule set"


def decomposition_from_week(instance: Instance, plan: PeriodicAssignment, week: int) -> WeekDecomposition:
    dec = WeekDecomposition(tuple(
        induced_schedules(instance, plan, week, j) for j in range(1, instance.workers + 1)
    ))
    check_decomposition(instance, dec)
    return dec
