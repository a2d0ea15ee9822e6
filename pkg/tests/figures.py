"""Mountain-range grids for Whitehead doubles of the (-13,3) torus knot.

Rows run from the top (maximal tb) downwards, each listed by ascending
rotation. Letters stand for values the caption fixes per ``m``.
"""

from __future__ import annotations

EVEN_ABOVE = [  # m >= -78 even, max tb = -77 - m
    [8],
    [4, 4],
    [4, 2, 4],
    [4, 2, 2, 4],
    [4, 2, 1, 2, 4],
    [4, 2, 1, 1, 2, 4],
]

ODD_ABOVE = [  # m >= -78 odd, max tb = -81 - m, two peaks at rot +-1
    [4, 4],
    [4, 4, 4],
    [4, 2, 2, 4],
    [4, 2, 2, 2, 4],
    [4, 2, 1, 1, 2, 4],
    [4, 2, 1, 1, 1, 2, 4],
]

ODD_BELOW = [  # m < -78 odd, max tb = -3
    ["a"],
    ["b", "b"],
    ["b", "b", "b"],
    ["b", 1, 1, "b"],
    ["b", 1, 1, 1, "b"],
]

M_MINUS_80 = [  # max tb = 1
    [12],
    [6, 6],
    [6, 2, 6],
    [6, 2, 2, 6],
    [6, 2, 1, 2, 6],
    [6, 2, 1, 1, 2, 6],
]


def fill(grid, **values):
    return [[values.get(c, c) if isinstance(c, str) else c for c in row] for row in grid]


def rows_of(rng, n):
    return [rng.row(t) for t in range(rng.max_tb, rng.max_tb - n, -1)]
