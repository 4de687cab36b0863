"""Labeled transition multigraph on the boundary tasks.

Each label (a first-week coloring or a week decomposition) contributes one
arc ``i -> i'`` per boundary task: the worker doing ``i`` this week does
``i'`` across the next boundary.  Arcs of a label form a cycle cover.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Hashable, Mapping, Sequence, Union

from .assignment import WeekDecomposition
from .coloring import FirstWeekColoring
from .model import Instance, boundary_tasks

Label = Union[FirstWeekColoring, WeekDecomposition]


@dataclass(frozen=True)
class LabelPermutation:
    label: Hashable
    mapping: Mapping[int, int]

    def cycles(self) -> list[list[int]]:
        """Cycles, each starting at its smallest vertex, sorted by that vertex."""
        seen: set[int] = set()
        out = []
        for v in sorted(self.mapping):
            if v in seen:
                continue
            cyc = []
            while v not in seen:
                seen.add(v)
                cyc.append(v)
                v = self.mapping[v]
            out.append(cyc)
        return out


@dataclass(frozen=True)
class LabeledDigraph:
    vertices: tuple[int, ...]
    arcs: tuple[tuple[int, int, Hashable], ...]
    labels: Mapping[Hashable, Label]


def label_permutation(instance: Instance, week: Label, label: Hashable = None) -> LabelPermutation:
    U = sorted(boundary_tasks(instance))
    if len(U) != instance.workers:
        raise ValueError("label permutations need exactly one boundary task per worker")
    if isinstance(week, FirstWeekColoring):
        owner_next = {week.shifted(i): i for i in U}
        mapping = {i: owner_next[week.base(i)] for i in U}
    else:
        mapping = {}
        for part in week.parts:
            here = sorted(part.finishing & set(U))
            if len(here) != 1 or part.starting is None:
                raise ValueError(f"part {part!r} must hold exactly one boundary task and carry one")
            mapping[here[0]] = part.starting
    if sorted(mapping.values()) != U or sorted(mapping) != U:
        raise ValueError("label does not induce a bijection on the boundary tasks")
    return LabelPermutation(label, mapping)


def cycle_count(p: LabelPermutation) -> int:
    return len(p.cycles())


def build_digraph(instance: Instance, labels: Sequence[Label]) -> LabeledDigraph:
    if not labels:
        raise ValueError("at least one label is required")
    U = tuple(sorted(boundary_tasks(instance)))
    arcs = []
    table = {}
    for k, lab in enumerate(labels):
        perm = label_permutation(instance, lab, k)
        table[k] = lab
        arcs.extend((i, perm.mapping[i], k) for i in U)
    d = LabeledDigraph(U, tuple(arcs), table)
    _check_cycle_cover(d)
    return d


def _check_cycle_cover(d: LabeledDigraph) -> None:
    for k in d.labels:
        tails = sorted(a for a, _, lab in d.arcs if lab == k)
        heads = sorted(b for _, b, lab in d.arcs if lab == k)
        assert tails == heads == list(d.vertices), f"label {k} is not a cycle cover"
    assert len(d.arcs) == len(d.vertices) * len(d.labels)


def _reach(vertices, adjacency, start) -> set:
    seen = {start}
    stack = [start]
    while stack:
        v = stack.pop()
        for w in adjacency.get(v, ()):
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return seen


def is_weakly_connected(d: LabeledDigraph) -> bool:
    if not d.vertices:
        raise ValueError("empty digraph")
    adj: dict[int, set[int]] = {}
    for a, b, _ in d.arcs:
        adj.setdefault(a, set()).add(b)
        adj.setdefault(b, set()).add(a)
    connected = len(_reach(d.vertices, adj, d.vertices[0])) == len(d.vertices)
    if connected:
        # cycle covers balance degrees, so weak connectivity means Eulerian
        assert is_strongly_connected(d)
    return connected


def is_strongly_connected(d: LabeledDigraph) -> bool:
    fwd: dict[int, set[int]] = {}
    bwd: dict[int, set[int]] = {}
    for a, b, _ in d.arcs:
        fwd.setdefault(a, set()).add(b)
        bwd.setdefault(b, set()).add(a)
    v0 = d.vertices[0]
    n = len(d.vertices)
    return len(_reach(d.vertices, fwd, v0)) == n and len(_reach(d.vertices, bwd, v0)) == n


def weak_components(d: LabeledDigraph) -> list[list[int]]:
    adj: dict[int, set[int]] = {}
    for a, b, _ in d.arcs:
        adj.setdefault(a, set()).add(b)
        adj.setdefault(b, set()).add(a)
    seen: set[int] = set()
    comps = []
    for v in d.vertices:
        if v not in seen:
            comp = _reach(d.vertices, adj, v)
            seen |= comp
            comps.append(sorted(comp))
    return comps


def to_dot(d: LabeledDigraph) -> str:
    lines = ["digraph transitions {"]
    lines += [f"  {v};" for v in d.vertices]
    lines += [f'  {a} -> {b} [label="{lab}"];' for a, b, lab in d.arcs]
    lines.append("}")
    return "\n".join(lines) + "\n"
