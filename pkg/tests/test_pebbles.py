import math
from itertools import permutations

import numpy as np
import pytest

from periodic_roster import (
    ColoredEulerianGraph,
    lift_component,
    periodic_color_sequence,
    simulate_random_colors,
    visit_frequencies,
)
from periodic_roster.io import graph_to_json
from periodic_roster.pebbles import (
    ColorSequence,
    LiftTooLarge,
    eulerian_circuit,
    graph_from_json,
    pebble_walks,
    validate_colored_graph,
)

from families import random_colored_graph


def test_p1_valid(P1):
    rep = validate_colored_graph(P1)
    assert rep.valid and rep.warnings == ()
    assert P1.perms == ((0, 1), (1, 0))


def test_invalid_and_warnings():
    assert not validate_colored_graph(ColoredEulerianGraph.from_perms(2, [[0, 0]])).valid
    assert not validate_colored_graph(ColoredEulerianGraph.from_perms(2, [[0]])).valid
    rep = validate_colored_graph(ColoredEulerianGraph.from_perms(3, []))
    assert rep.valid and "no colors" in rep.warnings
    rep = validate_colored_graph(ColoredEulerianGraph.from_perms(2, [[0, 1]]))
    assert "graph is not connected" in rep.warnings


def test_component_sizes(P1):
    assert lift_component(P1).size == 2
    assert lift_component(ColoredEulerianGraph.from_perms(3, [[0, 1, 2], [0, 1, 2]])).size == 1
    assert lift_component(ColoredEulerianGraph.from_perms(3, [[1, 2, 0]])).size == 3


def test_circuits(P1):
    arcs = eulerian_circuit(lift_component(P1))
    assert len(arcs) == 4
    comp = lift_component(P1)
    expected = sorted((eta, c, comp.successor(eta, c)) for eta in comp.vertices for c in range(2))
    assert sorted(arcs) == expected
    loops = lift_component(ColoredEulerianGraph.from_perms(2, [[0, 1]] * 3))
    assert len(eulerian_circuit(loops)) == 3


def test_p1_sequence_and_visits(P1):
    seq = periodic_color_sequence(P1)
    assert seq.period == 4 and sorted(seq.colors) == [0, 0, 1, 1]
    counts = visit_frequencies(P1, seq)
    assert (counts == 1).all()
    assert (visit_frequencies(P1, seq, periods=0) == 0).all()
    assert (visit_frequencies(P1, seq, periods=3) == 3 * counts).all()
    assert periodic_color_sequence(ColoredEulerianGraph.from_perms(2, [[0, 1]] * 2)).period == 2


def test_pebble_walks(P1):
    seq = ColorSequence((1, 0))
    assert pebble_walks(P1, seq) == [[0, 1, 1], [1, 0, 0]]


def test_vertex_cap():
    g = ColoredEulerianGraph.from_perms(9, [list(range(9))])
    with pytest.raises(LiftTooLarge):
        lift_component(g)
    assert lift_component(g, vertex_cap=9).size == 1


def test_seed_must_be_bijection(P1):
    with pytest.raises(ValueError):
        lift_component(P1, seed=(0, 0))


def test_kappa_matches_enumeration():
    import random
    rng = random.Random(1)
    for _ in range(30):
        g = random_colored_graph(rng, 4, 3)
        comp = lift_component(g)
        # count components of the whole lifted graph by brute force
        seen, comps = set(), 0
        for eta in permutations(range(g.n_vertices)):
            if eta not in seen:
                comps += 1
                seen |= set(lift_component(g, eta).vertices)
        assert comp.n_components == comps


def test_simulation(P1):
    res = simulate_random_colors(P1, 100_000, seed=0)
    assert res.max_deviation < 0.02
    assert res.frequencies.shape == (2, 4)
    assert np.allclose(res.frequencies.sum(axis=1), 1.0)
    one = ColoredEulerianGraph.from_perms(2, [[1, 0]])
    r1 = simulate_random_colors(one, 1, seed=3)
    assert r1.frequencies[0, one.arc_index(0, 0)] == 1.0
    trivial = simulate_random_colors(ColoredEulerianGraph.from_perms(1, [[0]]), 50, seed=1)
    assert trivial.max_deviation == 0.0
    again = simulate_random_colors(P1, 1000, seed=5)
    assert np.array_equal(again.frequencies, simulate_random_colors(P1, 1000, seed=5).frequencies)
    with pytest.raises(ValueError):
        simulate_random_colors(P1, 0, seed=1)


def test_graph_json(P1):
    assert graph_from_json(graph_to_json(P1)) == P1
    assert graph_to_json(P1)["colors"][1]["perm"] == [2, 1]


def test_period_bound_random():
    import random
    rng = random.Random(2)
    for _ in range(20):
        g = random_colored_graph(rng, 5, 3)
        seq = periodic_color_sequence(g)
        assert seq.period <= g.n_arcs * math.factorial(g.n_vertices - 1)
