"""Brute-force ground truth for very small instances.

Nothing here shares code paths with the solvers beyond the data model:

* ``oracle_decide_basic`` enumerates every first-week coloring of the padded
  instance and tests connectivity of the transition graph they induce.
* ``oracle_decide_extended`` enumerates whole week assignments and searches
  closed walks of length ``<= q**2 * q!`` whose worker counts are balanced.

Guardrails keep the enumerations small; ``ROSTER_ORACLE_CAP`` (test use)
overrides them as ``"tasks:workers[:schedules]"``.
"""
from __future__ import annotations

import math
import os
from itertools import product
from typing import Optional

from .assignment import PeriodicAssignment
from .augmentation import augment
from .coloring import FirstWeekColoring, build_interval_graph
from .model import Instance, boundary_tasks, overlaps, schedule_is_non_overlapping


class GuardrailExceeded(ValueError):
    pass


def _caps(max_tasks: Optional[int], max_workers: Optional[int], max_schedules: Optional[int] = None,
          defaults: tuple[int, int, int] = (8, 4, 10)) -> tuple[int, int, int]:
    env = os.environ.get("ROSTER_ORACLE_CAP")
    caps = list(defaults)
    if env:
        for k, part in enumerate(env.split(":")[:3]):
            caps[k] = int(part)
    if max_tasks is not None:
        caps[0] = max_tasks
    if max_workers is not None:
        caps[1] = max_workers
    if max_schedules is not None:
        caps[2] = max_schedules
    return caps[0], caps[1], caps[2]


def enumerate_first_week_colorings(instance: Instance, max_tasks: Optional[int] = None,
                                   max_workers: Optional[int] = None) -> list[FirstWeekColoring]:
    """All proper ``q``-colorings of the broad first week, one per worker-renaming class.

    Workers are numbered by first appearance in slot order, which picks the
    lexicographically smallest member of each class.
    """
    cap_n, cap_q, _ = _caps(max_tasks, max_workers)
    q = instance.workers
    if instance.n > cap_n or q > cap_q:
        raise GuardrailExceeded(f"oracle limited to n <= {cap_n}, q <= {cap_q}")
    slots = build_interval_graph(instance)
    conflicts = [
        [b for b in range(a) if overlaps((slots[a].start, slots[a].end), (slots[b].start, slots[b].end))]
        for a in range(len(slots))
    ]
    out: list[FirstWeekColoring] = []
    colors = [0] * len(slots)

    def rec(a: int, used: int) -> None:
        if a == len(slots):
            out.append(FirstWeekColoring(q, {s.key: c for s, c in zip(slots, colors)}))
            return
        taken = {colors[b] for b in conflicts[a]}
        for c in range(1, min(used + 1, q) + 1):
            if c not in taken:
                colors[a] = c
                rec(a + 1, max(used, c))

    rec(0, 0)
    return out


def _connected(vertices: list[int], arcs: set[tuple[int, int]]) -> bool:
    adj = {v: set() for v in vertices}
    for a, b in arcs:
        adj[a].add(b)
        adj[b].add(a)
    seen = {vertices[0]}
    stack = [vertices[0]]
    while stack:
        for w in adj[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == len(vertices)


def oracle_decide_basic(instance: Instance, max_tasks: Optional[int] = None,
                        max_workers: Optional[int] = None) -> bool:
    inst = instance.with_schedules(None)
    q = inst.workers
    if len(boundary_tasks(inst)) > q:
        return False
    padded = augment(inst).augmented
    colorings = enumerate_first_week_colorings(padded, max_tasks, max_workers)
    if not colorings:
        return False
    U = sorted(boundary_tasks(padded))
    arcs = set()
    for col in colorings:
        for i in U:
            for i2 in U:
                if col.color[(i, False)] == col.color[(i2, True)]:
                    arcs.add((i, i2))
    return _connected(U, arcs)


def _week_states(instance: Instance) -> list[tuple[int, ...]]:
    """Week assignments (worker of each task) with no clash inside the week."""
    ids = instance.task_ids
    occ = [instance.occurrence(i, 0) for i in ids]
    states = []
    for combo in product(range(1, instance.workers + 1), repeat=len(ids)):
        if all(not (combo[a] == combo[b] and overlaps(occ[a], occ[b]))
               for a in range(len(ids)) for b in range(a)):
            states.append(combo)
    return states


def _transition_ok(instance: Instance, allowed, a: tuple[int, ...], b: tuple[int, ...],
                   boundary: list[int]) -> bool:
    ids = instance.task_ids
    pos = {i: k for k, i in enumerate(ids)}
    for j in range(1, instance.workers + 1):
        carried = [i for i in boundary if b[pos[i]] == j]
        if len(carried) > 1:
            return False
        finishing = frozenset(i for i in ids if a[pos[i]] == j)
        W = carried[0] if carried else None
        L = instance.units_per_week
        # the carried task's next occurrence against this week's tasks
        if W is not None and any(
            overlaps(instance.occurrence(i, 0), instance.task(W).occurrence(1, L)) for i in finishing
        ):
            return False
        if allowed is not None:
            from .model import Schedule
            if Schedule(finishing, W) not in allowed:
                return False
    return True


def oracle_decide_extended(instance: Instance, max_tasks: Optional[int] = None,
                           max_workers: Optional[int] = None, max_schedules: Optional[int] = None,
                           witness: Optional[list] = None) -> bool:
    """Exhaustive search for a balanced periodic plan with period ``<= q**2 q!``.

    Plans are closed walks over week assignments; a transition ``A -> B`` is
    allowed when every worker's induced schedule (its tasks in ``A`` plus the
    boundary task it holds in ``B``) is allowed.  Without a schedule set only
    non-overlap is required, which makes this a brute-force check of the
    basic version too.
    """
    cap_n, cap_q, cap_s = _caps(max_tasks, max_workers, max_schedules, defaults=(3, 2, 10))
    q = instance.workers
    allowed = None if instance.schedules is None else set(instance.schedules)
    if instance.n > cap_n or q > cap_q or (allowed is not None and len(allowed) > cap_s):
        raise GuardrailExceeded(f"extended oracle limited to n <= {cap_n}, q <= {cap_q}, |S| <= {cap_s}")
    if allowed is not None:
        assert all(schedule_is_non_overlapping(instance, s) for s in allowed)
    h_max = q * q * math.factorial(q)
    boundary = sorted(boundary_tasks(instance))
    states = _week_states(instance)
    succ = {a: [b for b in states if _transition_ok(instance, allowed, a, b, boundary)] for a in states}
    n = instance.n

    def counts_after(cnt: tuple[int, ...], state: tuple[int, ...]) -> tuple[int, ...]:
        c = list(cnt)
        for k, w in enumerate(state):
            c[k * q + (w - 1)] += 1
        return tuple(c)

    zero = tuple([0] * (n * q))
    for start in states:
        # frontier: (current state, counts including current week) -> predecessor
        layer = {(start, counts_after(zero, start)): None}
        history = [layer]
        for length in range(1, h_max + 1):
            if length % q == 0:
                target = tuple([length // q] * (n * q))
                for (cur, cnt) in layer:
                    if cnt == target and start in succ[cur]:
                        if witness is not None:
                            witness.extend(_rebuild(history, (cur, cnt)))
                        return True
            if length == h_max:
                break
            nxt = {}
            for (cur, cnt) in layer:
                for b in succ[cur]:
                    c2 = counts_after(cnt, b)
                    if max(c2, default=0) > h_max // q:
                        continue
                    nxt.setdefault((b, c2), (cur, cnt))
            layer = nxt
            history.append(layer)
            if not layer:
                break
    return False


def _rebuild(history, node) -> list[tuple[int, ...]]:
    path = [node[0]]
    for layer in reversed(history[1:]):
        node = layer[node]
        path.append(node[0])
    return path[::-1]


def witness_plan(instance: Instance, path: list[tuple[int, ...]]) -> PeriodicAssignment:
    ids = instance.task_ids
    return PeriodicAssignment(len(path), {(i, r + 1): s[k] for r, s in enumerate(path) for k, i in enumerate(ids)})


def unrolled_verify(instance: Instance, plan: PeriodicAssignment, weeks: int) -> dict[tuple[int, int], int]:
    """Counts of ``{r <= weeks : worker j does task i in week r}`` by literal unrolling."""
    if weeks < 1:
        raise ValueError("weeks must be positive")
    counts = {(i, j): 0 for i in instance.task_ids for j in range(1, instance.workers + 1)}
    for r in range(1, weeks + 1):
        for i in instance.task_ids:
            counts[(i, plan.table[(i, (r - 1) % plan.period + 1)])] += 1
    return counts


def oracle_min_workers(instance: Instance, q_max: int, **caps) -> Optional[int]:
    """Smallest ``q <= q_max`` the basic oracle accepts, scanning upward."""
    for q in range(1, q_max + 1):
        if oracle_decide_basic(instance.with_workers(q), **caps):
            return q
    return None
