"""Instance families shared by the unit and acceptance tests."""
from __future__ import annotations

import math
import random
from itertools import combinations_with_replacement, islice

from periodic_roster.model import Instance

GRID = 8


def all_intervals(L: int = GRID) -> list[tuple[int, int]]:
    return [(s, e) for e in range(1, L + 1) for s in range(e - L, e) if -L < s]


def exhaustive_task_sets(per_size: int = 50, L: int = GRID, max_n: int = 4) -> list[tuple[tuple[int, int], ...]]:
    """``per_size`` multisets of intervals for each ``n = 1..max_n``, evenly strided through
    the full lexicographic enumeration (all of them when there are few enough)."""
    iv = all_intervals(L)
    out = []
    for n in range(1, max_n + 1):
        total = math.comb(len(iv) + n - 1, n)
        step = max(1, total // per_size)
        picked = list(islice(combinations_with_replacement(iv, n), 0, None, step))[:per_size]
        out.extend(picked)
    return out


def criterion_family(L: int = GRID) -> list[Instance]:
    """200 task sets x q in {1,2,3}: 600 instances."""
    return [Instance.from_intervals(L, ts, q) for ts in exhaustive_task_sets(50, L) for q in (1, 2, 3)]


def random_instance(rng: random.Random, L: int = GRID, max_n: int = 4, qs=(1, 2, 3)) -> Instance:
    iv = all_intervals(L)
    n = rng.randint(1, max_n)
    return Instance.from_intervals(L, [rng.choice(iv) for _ in range(n)], rng.choice(qs))


def random_family(count: int = 500, seed: int = 20240601, L: int = GRID) -> list[Instance]:
    rng = random.Random(seed)
    return [random_instance(rng, L) for _ in range(count)]


def random_colored_graph(rng: random.Random, max_vertices: int = 5, max_colors: int = 3,
                         min_vertices: int = 1, min_colors: int = 1):
    """Random connected colored Eulerian graph: every color a vertex permutation."""
    from periodic_roster.pebbles import ColoredEulerianGraph, validate_colored_graph

    while True:
        V = rng.randint(min_vertices, max_vertices)
        C = rng.randint(min_colors, max_colors)
        perms = []
        for _ in range(C):
            p = list(range(V))
            rng.shuffle(p)
            perms.append(p)
        g = ColoredEulerianGraph.from_perms(V, perms)
        if "graph is not connected" not in validate_colored_graph(g).warnings:
            return g
