"""
Pebbles on a colored graph
==========================

Each color permutes the vertices.  Moving every pebble along a color at each
step, an Eulerian circuit of the configuration graph gives a periodic color
sequence in which every pebble uses every arc equally often.  Random colors
reach the same frequencies only in the limit.
"""

import math

import numpy as np

from periodic_roster import ColoredEulerianGraph, lift_component, periodic_color_sequence, simulate_random_colors, visit_frequencies

g = ColoredEulerianGraph.from_perms(3, [[1, 2, 0], [1, 0, 2]], names=["rot", "swap"])
comp = lift_component(g)
print("configurations reached:", comp.size, "of", math.factorial(3))

seq = periodic_color_sequence(g)
print("period", seq.period, [g.names[c] for c in seq.colors])
counts = visit_frequencies(g, seq)
print("visits per pebble and arc:", np.unique(counts))

for steps in (10**3, 10**4, 10**5):
    res = simulate_random_colors(g, steps, seed=7)
    print(f"N={steps:>6}: max deviation {res.max_deviation:.4f}")
