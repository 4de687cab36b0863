"""Exact-cover search for week decompositions over an explicit schedule set.

Slots: one finishing slot per task and one carried slot per boundary task.
A decomposition picks ``q`` schedules (repetition allowed) filling every slot
exactly once.  Plain backtracking with conflict pruning is plenty at the
sizes involved; a dancing-links column structure could replace
``_candidates`` if schedule sets grow to thousands.
"""
from __future__ import annotations

from typing import Optional

from .assignment import WeekDecomposition, check_decomposition
from .model import Instance, Schedule, boundary_tasks


def _search(instance: Instance, forced: Optional[tuple[int, int]] = None) -> Optional[WeekDecomposition]:
    if instance.schedules is None:
        raise ValueError("decomposition search needs an explicit schedule set")
    q = instance.workers
    tasks = instance.task_ids
    boundary = sorted(boundary_tasks(instance))
    schedules = list(dict.fromkeys(instance.schedules))
    if forced is not None:
        i, i2 = forced
        schedules = [s for s in schedules if i not in s.finishing or s.starting == i2]

    by_task: dict[int, list[Schedule]] = {i: [] for i in tasks}
    for s in schedules:
        for i in s.finishing:
            by_task[i].append(s)
    carriers = {w: [s for s in schedules if not s.finishing and s.starting == w] for w in boundary}
    idle = Schedule(frozenset(), None)
    idle_ok = idle in set(schedules)

    chosen: list[Schedule] = []
    done_t: set[int] = set()
    done_w: set[int] = set()

    def fits(s: Schedule) -> bool:
        if s.finishing & done_t:
            return False
        return s.starting is None or s.starting not in done_w

    def push(s: Schedule) -> None:
        chosen.append(s)
        done_t.update(s.finishing)
        if s.starting is not None:
            done_w.add(s.starting)

    def pop() -> None:
        s = chosen.pop()
        done_t.difference_update(s.finishing)
        if s.starting is not None:
            done_w.discard(s.starting)

    def rec() -> bool:
        left = q - len(chosen)
        if left < 0:
            return False
        open_t = next((i for i in tasks if i not in done_t), None)
        if open_t is not None:
            if left == 0:
                return False
            for s in by_task[open_t]:
                if fits(s):
                    push(s)
                    if rec():
                        return True
                    pop()
            return False
        open_w = [w for w in boundary if w not in done_w]
        if len(open_w) > left:
            return False
        if open_w:
            for s in carriers[open_w[0]]:
                push(s)
                if rec():
                    return True
                pop()
            return False
        if left and not idle_ok:
            return False
        chosen.extend([idle] * left)
        return True

    if not rec():
        return None
    dec = WeekDecomposition(tuple(chosen))
    check_decomposition(instance, dec)
    return dec


def find_decomposition(instance: Instance) -> Optional[WeekDecomposition]:
    """Some week decomposition of ``instance``, or ``None`` if there is none."""
    return _search(instance)


def find_decomposition_with_pair(instance: Instance, task: int, carried: int) -> Optional[WeekDecomposition]:
    """A decomposition whose part finishing ``task`` carries ``carried`` into the next week."""
    U = boundary_tasks(instance)
    if task not in U or carried not in U:
        raise ValueError("both tasks must be boundary tasks")
    return _search(instance, (task, carried))


def build_universal_set(instance: Instance) -> list[WeekDecomposition]:
    """One decomposition per realizable boundary transition (at most ``q**2``)."""
    U = sorted(boundary_tasks(instance))
    labels: list[WeekDecomposition] = []
    seen = set()
    for i in U:
        for i2 in U:
            dec = find_decomposition_with_pair(instance, i, i2)
            if dec is not None and dec.key() not in seen:
                seen.add(dec.key())
                labels.append(dec)
    return labels
