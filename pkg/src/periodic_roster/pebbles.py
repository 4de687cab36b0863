"""Pebbles on an arc-colored Eulerian digraph.

Every color is a permutation of the vertices (a cycle cover).  One pebble sits
on each vertex; a color moves every pebble along the arc of that color
leaving its vertex.  Pebble configurations are bijections ``pebble -> vertex``
stored as tuples ``eta`` with ``eta[j]`` the vertex of pebble ``j``; vertices,
pebbles and colors are 0-based internally.

The lifted graph has one vertex per configuration and an arc
``eta -> sigma_c o eta`` per color.  The component of a seed configuration is
its orbit under the group generated by the colors, so its size divides
``|V|!``.  An Eulerian circuit of that component, read as a color sequence,
makes every pebble traverse every arc equally often.
"""
from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

DEFAULT_VERTEX_CAP = 8

# NumPy's PCG64 through default_rng; seeds map one-to-one to streams.
RNG_NAME = "numpy.random.PCG64"

Config = tuple[int, ...]


class LiftTooLarge(ValueError):
    pass


@dataclass(frozen=True)
class ColoredEulerianGraph:
    n_vertices: int
    names: tuple[str, ...]
    perms: tuple[tuple[int, ...], ...]

    @classmethod
    def from_perms(cls, n_vertices: int, perms: Sequence[Sequence[int]],
                   names: Optional[Sequence[str]] = None) -> "ColoredEulerianGraph":
        perms = tuple(tuple(p) for p in perms)
        if names is None:
            names = tuple(f"c{k}" for k in range(len(perms)))
        return cls(n_vertices, tuple(names), perms)

    @property
    def n_colors(self) -> int:
        return len(self.perms)

    @property
    def n_arcs(self) -> int:
        return self.n_vertices * self.n_colors

    def arc_index(self, color: int, tail: int) -> int:
        return color * self.n_vertices + tail

    def arcs(self) -> list[tuple[int, int, int]]:
        """``(tail, head, color)`` in arc-index order."""
        return [(v, p[v], c) for c, p in enumerate(self.perms) for v in range(self.n_vertices)]


@dataclass(frozen=True)
class GraphReport:
    errors: tuple[str, ...]
    warnings: tuple[str, ...]

    @property
    def valid(self) -> bool:
        return not self.errors


@dataclass(frozen=True)
class LiftedComponent:
    graph: ColoredEulerianGraph
    seed: Config
    vertices: tuple[Config, ...]

    @property
    def size(self) -> int:
        return len(self.vertices)

    @property
    def n_components(self) -> int:
        """Number of components of the whole lifted graph (all share this size)."""
        return math.factorial(self.graph.n_vertices) // self.size

    def successor(self, eta: Config, color: int) -> Config:
        p = self.graph.perms[color]
        return tuple(p[v] for v in eta)


@dataclass(frozen=True)
class ColorSequence:
    colors: tuple[int, ...]

    @property
    def period(self) -> int:
        return len(self.colors)


def _strongly_connected(g: ColoredEulerianGraph) -> bool:
    if g.n_vertices == 0:
        return True
    seen = {0}
    stack = [0]
    while stack:
        v = stack.pop()
        for p in g.perms:
            if p[v] not in seen:
                seen.add(p[v])
                stack.append(p[v])
    # permutation arcs: forward reachability of everything implies strong connectivity
    return len(seen) == g.n_vertices


def validate_colored_graph(g: ColoredEulerianGraph) -> GraphReport:
    errors, warnings = [], []
    if g.n_vertices < 0:
        errors.append("negative vertex count")
    if len(g.names) != len(g.perms):
        errors.append("one name per color required")
    for name, p in zip(g.names, g.perms):
        if len(p) != g.n_vertices:
            errors.append(f"color {name!r}: expected {g.n_vertices} images, got {len(p)}")
        elif sorted(p) != list(range(g.n_vertices)):
            errors.append(f"color {name!r} is not a permutation of the vertices")
    if not g.perms and g.n_vertices:
        warnings.append("no colors")
    if not errors and g.perms and not _strongly_connected(g):
        warnings.append("graph is not connected")
    return GraphReport(tuple(errors), tuple(warnings))


def lift_component(g: ColoredEulerianGraph, seed: Optional[Config] = None,
                   vertex_cap: int = DEFAULT_VERTEX_CAP) -> LiftedComponent:
    """Breadth-first closure of ``seed`` under all colors."""
    report = validate_colored_graph(g)
    if not report.valid:
        raise ValueError("; ".join(report.errors))
    if g.n_vertices > vertex_cap:
        raise LiftTooLarge(f"{g.n_vertices} vertices exceed the cap of {vertex_cap}")
    if seed is None:
        seed = tuple(range(g.n_vertices))
    seed = tuple(seed)
    if sorted(seed) != list(range(g.n_vertices)):
        raise ValueError("seed must be a bijection onto the vertices")
    order = [seed]
    seen = {seed}
    queue = deque([seed])
    while queue:
        eta = queue.popleft()
        for p in g.perms:
            nxt = tuple(p[v] for v in eta)
            if nxt not in seen:
                seen.add(nxt)
                order.append(nxt)
                queue.append(nxt)
    comp = LiftedComponent(g, seed, tuple(order))
    assert math.factorial(g.n_vertices) % comp.size == 0
    return comp


def eulerian_circuit(k: LiftedComponent) -> list[tuple[Config, int, Config]]:
    """Closed walk from the seed using every lifted arc once (Hierholzer).

    Every lifted vertex has in- and out-degree equal to the number of colors,
    so the component is Eulerian.  Unused out-arcs are taken in color order.
    """
    n_colors = k.graph.n_colors
    if n_colors == 0:
        return []
    next_color = {eta: 0 for eta in k.vertices}
    stack: list[tuple[Config, Optional[int]]] = [(k.seed, None)]
    circuit: list[tuple[Config, Optional[int]]] = []
    while stack:
        eta, _ = stack[-1]
        c = next_color[eta]
        if c < n_colors:
            next_color[eta] = c + 1
            stack.append((k.successor(eta, c), c))
        else:
            circuit.append(stack.pop())
    circuit.reverse()
    arcs = []
    for (tail, _), (head, color) in zip(circuit, circuit[1:]):
        arcs.append((tail, color, head))
    assert len(arcs) == k.size * n_colors
    assert arcs[0][0] == k.seed and arcs[-1][2] == k.seed
    return arcs


def periodic_color_sequence(g: ColoredEulerianGraph, seed: Optional[Config] = None,
                            vertex_cap: int = DEFAULT_VERTEX_CAP) -> ColorSequence:
    comp = lift_component(g, seed, vertex_cap)
    seq = ColorSequence(tuple(c for _, c, _ in eulerian_circuit(comp)))
    if g.n_vertices:
        assert seq.period <= g.n_arcs * math.factorial(g.n_vertices - 1)
    return seq


def visit_frequencies(g: ColoredEulerianGraph, seq: ColorSequence,
                      start: Optional[Config] = None, periods: int = 1) -> np.ndarray:
    """Exact arc-visit counts, shape ``(pebbles, arcs)``, over ``periods`` repetitions."""
    V = g.n_vertices
    pos = list(range(V)) if start is None else list(start)
    counts = np.zeros((V, g.n_arcs), dtype=np.int64)
    for _ in range(periods):
        for c in seq.colors:
            p = g.perms[c]
            for j in range(V):
                counts[j, g.arc_index(c, pos[j])] += 1
                pos[j] = p[pos[j]]
            assert len(set(pos)) == V, "pebbles collided"
    return counts


def pebble_walks(g: ColoredEulerianGraph, seq: ColorSequence,
                 start: Optional[Config] = None, periods: int = 1) -> list[list[int]]:
    """Vertex sequence of each pebble, initial position included."""
    pos = list(range(g.n_vertices)) if start is None else list(start)
    walks = [[v] for v in pos]
    for _ in range(periods):
        for c in seq.colors:
            p = g.perms[c]
            for j, w in enumerate(walks):
                w.append(p[w[-1]])
    return walks


@dataclass(frozen=True)
class MonteCarloResult:
    steps: int
    seed: int
    frequencies: np.ndarray
    max_deviation: float


def simulate_random_colors(g: ColoredEulerianGraph, steps: int, seed: int) -> MonteCarloResult:
    """Move all pebbles along ``steps`` uniform random colors; report arc frequencies."""
    if steps < 1:
        raise ValueError("steps must be positive")
    if not g.perms:
        raise ValueError("graph has no colors")
    V = g.n_vertices
    rng = np.random.default_rng(seed)
    draws = rng.integers(0, g.n_colors, size=steps)
    perms = np.asarray(g.perms, dtype=np.int64)
    pos = np.arange(V)
    arc_ids = np.empty((steps, V), dtype=np.int64)
    for t, c in enumerate(draws):
        arc_ids[t] = c * V + pos
        pos = perms[c][pos]
    counts = np.zeros((V, g.n_arcs), dtype=np.int64)
    for j in range(V):
        counts[j] = np.bincount(arc_ids[:, j], minlength=g.n_arcs)
    freq = counts / steps
    dev = float(np.max(np.abs(freq - 1.0 / g.n_arcs)))
    return MonteCarloResult(steps, seed, freq, dev)


def graph_from_json(data: dict) -> ColoredEulerianGraph:
    n = data["vertices"]
    names = [c["name"] for c in data["colors"]]
    perms = [[v - 1 for v in c["perm"]] for c in data["colors"]]
    return ColoredEulerianGraph.from_perms(n, perms, names)


def graph_to_json(g: ColoredEulerianGraph) -> dict:
    return {
        "vertices": g.n_vertices,
        "colors": [{"name": n, "perm": [v + 1 for v in p]} for n, p in zip(g.names, g.perms)],
    }
