"""Padding an instance with fictitious boundary tasks until ``|U| = q``.

Each fictitious task is ``[0, eps)`` where ``eps`` is the earliest point at
which anything other than a boundary task can start.  Fictitious tasks are
numbered ``n+1 .. n'`` after the real ones.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .assignment import PeriodicAssignment
from .coloring import FirstWeekColoring
from .model import (
    InfeasibleInstanceError,
    Instance,
    Schedule,
    Task,
    boundary_tasks,
    overlaps,
    schedule_is_non_overlapping,
)


@dataclass(frozen=True)
class AugmentedInstance:
    base: Instance
    augmented: Instance
    fictitious_ids: tuple[int, ...]
    epsilon: int

    @property
    def real_ids(self) -> list[int]:
        return self.base.task_ids


def fictitious_length(instance: Instance) -> int:
    L = instance.units_per_week
    boundary = boundary_tasks(instance)
    candidates = [t.start for t in instance.tasks if t.id not in boundary]
    candidates += [t.start + L for t in instance.tasks if t.id in boundary]
    # no tasks at all: any length up to a week works
    return min(candidates, default=L)


def _lift_schedules(instance: Instance, fictitious: tuple[int, ...]) -> list[Schedule]:
    boundary = boundary_tasks(instance)
    lifted: list[Schedule] = []
    seen = set()
    for sch in instance.schedules:
        if sch.finishing & boundary:
            finishing_options = [sch.finishing]
        else:
            finishing_options = [sch.finishing | {i} for i in fictitious]
        starting_options = [sch.starting] if sch.starting is not None else list(fictitious)
        for fin, start in product(finishing_options, starting_options):
            new = Schedule(frozenset(fin), start)
            if new.key() not in seen:
                seen.add(new.key())
                lifted.append(new)
    return lifted


def augment(instance: Instance) -> AugmentedInstance:
    q = instance.workers
    u = len(boundary_tasks(instance))
    if u > q:
        raise InfeasibleInstanceError(
            f"{u} tasks cover the week boundary but there are only {q} workers"
        )
    n = instance.n
    if u == q:
        return AugmentedInstance(instance, instance, (), 0)

    eps = fictitious_length(instance)
    assert eps >= 1, "fictitious tasks must have positive length"
    fictitious = tuple(range(n + 1, n + q - u + 1))
    tasks = instance.tasks + tuple(Task(i, 0, eps) for i in fictitious)
    schedules = None
    aug = Instance(instance.units_per_week, tasks, q)
    if instance.is_extended:
        schedules = _lift_schedules(instance, fictitious)
        for sch in schedules:
            assert schedule_is_non_overlapping(aug, sch), f"lifted schedule {sch!r} overlaps"
        aug = aug.with_schedules(schedules)
    assert len(boundary_tasks(aug)) == q
    return AugmentedInstance(instance, aug, fictitious, eps)


def restrict_plan(aug: AugmentedInstance, plan: PeriodicAssignment) -> PeriodicAssignment:
    """Drop the fictitious rows."""
    return plan.restricted(aug.real_ids)


def extend_first_week(aug: AugmentedInstance, coloring: FirstWeekColoring) -> FirstWeekColoring:
    """Place fictitious slots on the workers idle at each week boundary (ascending ids)."""
    if not aug.fictitious_ids:
        return coloring
    inst = aug.augmented
    q = inst.workers
    boundary = boundary_tasks(aug.base)
    color = dict(coloring.color)
    for shifted in (False, True):
        holders = {coloring.color[(i, shifted)] for i in boundary}
        idle = [w for w in range(1, q + 1) if w not in holders]
        assert len(idle) == len(aug.fictitious_ids), "idle workers must match fictitious tasks"
        for i, w in zip(aug.fictitious_ids, idle):
            fict = inst.occurrence(i, 1 if shifted else 0)
            for (task, sh), owner in coloring.color.items():
                if owner == w:
                    assert not overlaps(fict, inst.occurrence(task, 1 if sh else 0))
            color[(i, shifted)] = w
    return FirstWeekColoring(q, color)
