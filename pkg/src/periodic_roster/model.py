"""Instances of the weekly periodic assignment problem.

All times live on an integer grid with ``units_per_week`` units per week.  A
task is the half-open interval ``[start, end)``; its ``r``-th occurrence
occupies ``[start + r*L, end + r*L)`` where ``L = units_per_week``.  Tasks
with ``start <= 0`` straddle the week boundary and form the boundary set.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Optional


class InputError(ValueError):
    """Raised on malformed user input (unknown ids, bad plans, ...)."""


class InfeasibleInstanceError(ValueError):
    """Raised when an operation needs a feasible instance and did not get one."""


@dataclass(frozen=True)
class Task:
    id: int
    start: int
    end: int

    @property
    def duration(self) -> int:
        return self.end - self.start

    def occurrence(self, r: int, units_per_week: int) -> tuple[int, int]:
        """Interval of the ``r``-th occurrence."""
        return self.start + r * units_per_week, self.end + r * units_per_week


@dataclass(frozen=True)
class Schedule:
    """One worker's week: tasks finishing in the week plus an optional carried task."""

    finishing: frozenset[int]
    starting: Optional[int] = None

    @classmethod
    def of(cls, finishing: Iterable[int] = (), starting: Optional[int] = None) -> "Schedule":
        return cls(frozenset(finishing), starting)

    def key(self) -> tuple[tuple[int, ...], int]:
        # None sorts first
        return tuple(sorted(self.finishing)), (0 if self.starting is None else self.starting)

    def __repr__(self) -> str:
        w = "-" if self.starting is None else str(self.starting)
        return f"Schedule({sorted(self.finishing)}, {w})"


@dataclass(frozen=True)
class Violation:
    entity: str
    message: str

    def __str__(self) -> str:
        return f"{self.entity}: {self.message}"


def overlaps(a: tuple[int, int], b: tuple[int, int]) -> bool:
    """Half-open interval intersection test."""
    return a[0] < b[1] and b[0] < a[1]


@dataclass(frozen=True)
class Instance:
    units_per_week: int
    tasks: tuple[Task, ...]
    workers: int
    schedules: Optional[tuple[Schedule, ...]] = None
    _by_id: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "tasks", tuple(self.tasks))
        if self.schedules is not None:
            object.__setattr__(self, "schedules", tuple(self.schedules))
        object.__setattr__(self, "_by_id", {t.id: t for t in self.tasks})

    @classmethod
    def from_intervals(
        cls,
        units_per_week: int,
        intervals: Iterable[tuple[int, int]],
        workers: int,
        schedules: Optional[Iterable[Schedule]] = None,
    ) -> "Instance":
        tasks = tuple(Task(k, s, e) for k, (s, e) in enumerate(intervals, start=1))
        return cls(units_per_week, tasks, workers, None if schedules is None else tuple(schedules))

    @property
    def n(self) -> int:
        return len(self.tasks)

    @property
    def is_extended(self) -> bool:
        return self.schedules is not None

    @property
    def task_ids(self) -> list[int]:
        return sorted(self._by_id)

    def task(self, task_id: int) -> Task:
        try:
            return self._by_id[task_id]
        except KeyError:
            raise InputError(f"unknown task id {task_id}") from None

    def with_workers(self, workers: int) -> "Instance":
        return Instance(self.units_per_week, self.tasks, workers, self.schedules)

    def with_schedules(self, schedules: Optional[Iterable[Schedule]]) -> "Instance":
        return Instance(
            self.units_per_week, self.tasks, self.workers,
            None if schedules is None else tuple(schedules),
        )

    def occurrence(self, task_id: int, r: int) -> tuple[int, int]:
        return self.task(task_id).occurrence(r, self.units_per_week)


def validate(instance: Instance) -> list[Violation]:
    """Every violated invariant of ``instance``; an empty list means valid."""
    report: list[Violation] = []
    L = instance.units_per_week
    if not isinstance(L, int) or L < 1:
        report.append(Violation("grid", "units_per_week must be a positive integer"))
        return report
    if not isinstance(instance.workers, int) or instance.workers < 1:
        report.append(Violation("instance", "workers must be a positive integer"))

    seen: set[int] = set()
    for t in instance.tasks:
        ent = f"task {t.id}"
        if t.id in seen:
            report.append(Violation(ent, "duplicate id"))
        seen.add(t.id)
        if not (0 < t.end <= L):
            report.append(Violation(ent, "end must lie in (0,L]"))
        if not (-L < t.start < L):
            report.append(Violation(ent, "start must lie in (-L,L)"))
        if t.end - t.start < 1:
            report.append(Violation(ent, "duration must be positive"))
        if t.end - t.start > L:
            report.append(Violation(ent, "duration must not exceed one week"))
    if seen != set(range(1, len(instance.tasks) + 1)):
        report.append(Violation("instance", "task ids must be exactly 1..n"))

    if instance.schedules is not None and not report:
        boundary = boundary_tasks(instance)
        for k, sch in enumerate(instance.schedules):
            ent = f"schedule {k}"
            unknown = [i for i in sch.finishing if i not in seen]
            if sch.starting is not None and sch.starting not in seen:
                unknown.append(sch.starting)
            if unknown:
                report.append(Violation(ent, f"unknown task ids {sorted(unknown)}"))
                continue
            if sch.starting is not None and sch.starting not in boundary:
                report.append(Violation(ent, f"starting task {sch.starting} is not a boundary task"))
            elif not schedule_is_non_overlapping(instance, sch):
                report.append(Violation(ent, "schedule is overlapping"))
    return report


def boundary_tasks(instance: Instance) -> frozenset[int]:
    """Ids of the tasks starting at or before the week boundary."""
    return frozenset(t.id for t in instance.tasks if t.start <= 0)


def max_overlap_depth(instance: Instance) -> int:
    """Largest number of task occurrences covering a single time point."""
    L = instance.units_per_week
    events: list[tuple[int, int]] = []
    for t in instance.tasks:
        for r in (0, 1, 2):
            s, e = t.occurrence(r, L)
            events.append((s, 1))
            events.append((e, -1))
    # ends sort before starts at equal coordinates: half-open intervals
    events.sort()
    depth = best = 0
    for _, delta in events:
        depth += delta
        best = max(best, depth)
    return best


def schedule_is_non_overlapping(instance: Instance, schedule: Schedule) -> bool:
    """Pairwise disjointness of the finishing tasks and of the carried task's next occurrence."""
    L = instance.units_per_week
    base = [instance.occurrence(i, 0) for i in sorted(schedule.finishing)]
    if schedule.starting is not None:
        carried = instance.task(schedule.starting).occurrence(1, L)
        if any(overlaps(b, carried) for b in base):
            return False
    return not any(overlaps(a, b) for a, b in combinations(base, 2))


def schedule_duration(instance: Instance, schedule: Schedule) -> int:
    """Work time falling inside the week ``(0, L]`` (base coordinates)."""
    total = 0
    for i in schedule.finishing:
        t = instance.task(i)
        total += t.end - max(t.start, 0)
    if schedule.starting is not None:
        total += -instance.task(schedule.starting).start
    return total


def all_non_overlapping_schedules(instance: Instance) -> list[Schedule]:
    """Every valid schedule of ``instance``: the schedule set of the basic version."""
    ids = instance.task_ids
    L = instance.units_per_week
    base = {i: instance.occurrence(i, 0) for i in ids}
    boundary = sorted(boundary_tasks(instance))
    result: list[Schedule] = []

    def extend(chosen: list[int], pos: int) -> None:
        for w in [None, *boundary]:
            if w is not None:
                carried = instance.task(w).occurrence(1, L)
                if any(overlaps(base[i], carried) for i in chosen):
                    continue
            result.append(Schedule(frozenset(chosen), w))
        for k in range(pos, len(ids)):
            i = ids[k]
            if all(not overlaps(base[i], base[j]) for j in chosen):
                chosen.append(i)
                extend(chosen, k + 1)
                chosen.pop()

    extend([], 0)
    result.sort(key=Schedule.key)
    return result


def as_basic_extended(instance: Instance) -> Instance:
    """The same instance with the full non-overlapping schedule set attached."""
    return instance.with_schedules(all_non_overlapping_schedules(instance.with_schedules(None)))
