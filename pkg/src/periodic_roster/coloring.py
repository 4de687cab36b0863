"""First-week colorings of the interval graph of a broad first week.

The broad first week holds one slot per task, ``[start, end)``, plus a
``shifted`` slot ``[start + L, end + L)`` for each boundary task (its next
occurrence).  Colors are workers ``1..q``.  A proper coloring is exactly the
first week of some feasible assignment.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, NamedTuple, Optional

from .model import Instance, boundary_tasks, max_overlap_depth


class Slot(NamedTuple):
    task: int
    shifted: bool
    start: int
    end: int

    @property
    def key(self) -> tuple[int, bool]:
        return self.task, self.shifted


@dataclass(frozen=True)
class FirstWeekColoring:
    """Worker of every slot, keyed by ``(task, shifted)``."""

    workers: int
    color: Mapping[tuple[int, bool], int]

    def base(self, task: int) -> int:
        return self.color[(task, False)]

    def shifted(self, task: int) -> int:
        return self.color[(task, True)]

    def slots_of(self, worker: int) -> list[tuple[int, bool]]:
        return sorted(k for k, w in self.color.items() if w == worker)


@dataclass(frozen=True)
class Infeasible:
    """No proper coloring: ``point`` is covered by ``depth > q`` slots."""

    point: int
    depth: int

    def __bool__(self) -> bool:
        return False


def build_interval_graph(instance: Instance) -> list[Slot]:
    L = instance.units_per_week
    slots = [Slot(t.id, False, t.start, t.end) for t in instance.tasks]
    boundary = boundary_tasks(instance)
    slots += [Slot(t.id, True, t.start + L, t.end + L) for t in instance.tasks if t.id in boundary]
    slots.sort(key=lambda s: (s.start, s.end, s.task, s.shifted))
    return slots


def color_first_week(instance: Instance) -> FirstWeekColoring | Infeasible:
    """Greedy sweep: each slot, by increasing start, takes the lowest free worker.

    On interval graphs this uses exactly as many colors as the largest clique,
    so failure certifies that no ``q``-coloring exists.
    """
    q = instance.workers
    busy_until: dict[int, int] = {}
    color: dict[tuple[int, bool], int] = {}
    for slot in build_interval_graph(instance):
        free = [w for w in range(1, q + 1) if busy_until.get(w, slot.start) <= slot.start]
        if not free:
            active = 1 + sum(1 for end in busy_until.values() if end > slot.start)
            return Infeasible(slot.start, active)
        w = free[0]
        color[slot.key] = w
        busy_until[w] = slot.end
    return FirstWeekColoring(q, color)


def is_proper(instance: Instance, coloring: FirstWeekColoring) -> bool:
    slots = build_interval_graph(instance)
    if {s.key for s in slots} != set(coloring.color):
        return False
    if any(not 1 <= w <= coloring.workers for w in coloring.color.values()):
        return False
    for a, s in enumerate(slots):
        for t in slots[a + 1:]:
            if t.start >= s.end:
                break
            if coloring.color[s.key] == coloring.color[t.key]:
                return False
    return True


def decide_feasible(instance: Instance) -> bool:
    """Basic version: a feasible assignment exists iff no point is covered more than ``q`` times."""
    return max_overlap_depth(instance) <= instance.workers


def slot_interval(instance: Instance, key: tuple[int, bool]) -> tuple[int, int]:
    task, shifted = key
    t = instance.task(task)
    off = instance.units_per_week if shifted else 0
    return t.start + off, t.end + off


def coloring_to_json(coloring: FirstWeekColoring) -> dict:
    return {
        "workers": coloring.workers,
        "slots": [
            {"task": task, "shifted": shifted, "worker": w}
            for (task, shifted), w in sorted(coloring.color.items())
        ],
    }


def coloring_from_json(data: dict) -> FirstWeekColoring:
    return FirstWeekColoring(
        data["workers"],
        {(s["task"], bool(s["shifted"])): s["worker"] for s in data["slots"]},
    )


def first_week_from_mapping(workers: int, base: Mapping[int, int],
                            shifted: Optional[Mapping[int, int]] = None) -> FirstWeekColoring:
    """Convenience constructor from two ``task -> worker`` maps."""
    color = {(i, False): w for i, w in base.items()}
    color.update({(i, True): w for i, w in (shifted or {}).items()})
    return FirstWeekColoring(workers, color)
