"""Balanced assignments under an explicit set of allowed weekly schedules.

The padded instance's universal label set (one decomposition per realizable
boundary transition) defines the transition digraph.  A balanced assignment
exists iff that digraph is connected.  When it is, each label becomes a
color of a pebble system on the boundary tasks; a balanced periodic color
sequence, chained week after week with worker relabelings, is the plan.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional

from .assignment import PeriodicAssignment, WeekDecomposition, is_balanced, is_feasible
from .augmentation import AugmentedInstance, augment, restrict_plan
from .decomposition import build_universal_set, find_decomposition
from .digraph import LabeledDigraph, build_digraph, is_weakly_connected, weak_components
from .model import InputError, Instance, boundary_tasks, validate
from .pebbles import ColoredEulerianGraph, periodic_color_sequence


@dataclass
class ExtendedDecision:
    status: str
    augmented: Optional[AugmentedInstance] = None
    labels: list[WeekDecomposition] = field(default_factory=list)
    digraph: Optional[LabeledDigraph] = None
    components: list[list[int]] = field(default_factory=list)
    period: Optional[int] = None

    @property
    def yes(self) -> bool:
        return self.status == "yes"

    def to_json(self) -> dict:
        out: dict = {"status": self.status, "labels": len(self.labels)}
        if self.status == "no":
            out["components"] = self.components
        if self.period is not None:
            q = self.augmented.base.workers
            out["period"] = self.period
            out["period_bound"] = q * q * math.factorial(q)
        if self.augmented is not None:
            out["fictitious_tasks"] = list(self.augmented.fictitious_ids)
        return out


def _require_valid(instance: Instance) -> None:
    if not instance.is_extended:
        raise InputError("instance has no schedule set")
    problems = validate(instance)
    if problems:
        raise InputError("; ".join(map(str, problems)))


def decide_balanced_extended(instance: Instance) -> ExtendedDecision:
    _require_valid(instance)
    if len(boundary_tasks(instance)) > instance.workers:
        return ExtendedDecision("infeasible")
    aug = augment(instance)
    if find_decomposition(aug.augmented) is None:
        return ExtendedDecision("infeasible", aug)
    labels = build_universal_set(aug.augmented)
    d = build_digraph(aug.augmented, labels)
    comps = weak_components(d)
    status = "yes" if is_weakly_connected(d) else "no"
    return ExtendedDecision(status, aug, labels, d, comps)


def _week_maps(inst: Instance, dec: WeekDecomposition) -> tuple[dict[int, int], dict[int, int]]:
    """Worker of each task this week, and worker carrying each boundary task into the next."""
    this_week = {i: k + 1 for k, p in enumerate(dec.parts) for i in p.finishing}
    next_week = {p.starting: k + 1 for k, p in enumerate(dec.parts) if p.starting is not None}
    return this_week, next_week


def chain_labels(inst: Instance, sequence: list[WeekDecomposition]) -> PeriodicAssignment:
    """Glue one decomposition per week with worker relabelings ``pi_r``.

    ``pi_1`` is the identity and ``pi_{r+1} = pi_r o next_r o this_{r+1}^-1`` on
    the boundary tasks, so whoever carries a boundary task out of week ``r``
    performs it in week ``r + 1``.  The sequence is treated as cyclic.
    """
    q = inst.workers
    U = sorted(boundary_tasks(inst))
    maps = [_week_maps(inst, d) for d in sequence]
    pi = {w: w for w in range(1, q + 1)}
    table = {}
    h = len(sequence)
    for r in range(h):
        this_week, next_week = maps[r]
        for i in inst.task_ids:
            table[(i, r + 1)] = pi[this_week[i]]
        following, _ = maps[(r + 1) % h]
        inv_following = {following[i]: i for i in U}
        pi = {w: pi[next_week[inv_following[w]]] for w in range(1, q + 1)}
    assert pi == {w: w for w in range(1, q + 1)}, "relabeling did not close up over the period"
    return PeriodicAssignment(h, table)


def build_periodic_plan_extended(instance: Instance,
                                 decision: Optional[ExtendedDecision] = None) -> PeriodicAssignment:
    if decision is None:
        decision = decide_balanced_extended(instance)
    if not decision.yes:
        raise ValueError(f"no balanced assignment exists (status {decision.status})")
    aug = decision.augmented
    inst = aug.augmented
    q = inst.workers
    U = sorted(boundary_tasks(inst))
    index = {v: k for k, v in enumerate(U)}
    perms = []
    for dec in decision.labels:
        mapping = {}
        for p in dec.parts:
            (i,) = p.finishing & set(U)
            mapping[index[i]] = index[p.starting]
        perms.append([mapping[k] for k in range(q)])
    graph = ColoredEulerianGraph.from_perms(q, perms)
    seq = periodic_color_sequence(graph, vertex_cap=max(q, 8))
    plan = chain_labels(inst, [decision.labels[c] for c in seq.colors])
    assert plan.period <= len(decision.labels) * math.factorial(q) <= q * q * math.factorial(q)
    assert is_feasible(inst, plan), "chained plan is infeasible"
    assert is_balanced(inst, plan), "chained plan is unbalanced"
    plan = restrict_plan(aug, plan)
    assert is_feasible(instance, plan) and is_balanced(instance, plan)
    decision.period = plan.period
    return plan.canonical()


def solve_extended(instance: Instance) -> tuple[ExtendedDecision, Optional[PeriodicAssignment]]:
    decision = decide_balanced_extended(instance)
    if not decision.yes:
        return decision, None
    return decision, build_periodic_plan_extended(instance, decision)
