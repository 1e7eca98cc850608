"""Small library of named complexes and ideals used in tests, the CLI and
the benchmarks. Facet lists are 1-based; the ten-vertex Hachimori complex is
labelled 0..9 in the literature and shifted by one here."""
from __future__ import annotations

from .ideal import MonomialIdeal
from .simplicial import RP2_FACETS, SimplicialComplex, complex_of_dual_sr

# two triangles glued along an edge, plus one more: a shellable strip
STRIP = [[1, 2, 3], [2, 3, 4], [3, 4, 5]]
TWO_EDGES = [[1, 2], [3, 4]]
FOUR_CYCLE = [[1, 2], [1, 3], [2, 4], [3, 4]]

DUNCE_HAT_DUAL = [
    "x3*x5*x6*x7*x8", "x3*x4*x5*x6*x8", "x3*x4*x5*x6*x7", "x2*x5*x6*x7*x8",
    "x2*x4*x6*x7*x8", "x2*x4*x5*x7*x8", "x2*x3*x4*x7*x8", "x2*x3*x4*x5*x6",
    "x1*x4*x6*x7*x8", "x1*x4*x5*x6*x8", "x1*x4*x5*x6*x7", "x1*x3*x6*x7*x8",
    "x1*x2*x5*x6*x7", "x1*x2*x4*x5*x8", "x1*x2*x3*x7*x8", "x1*x2*x3*x5*x7",
    "x1*x2*x3*x4*x5",
]

# non-square-free constructible ideal in 8 variables and its split
NONSQFREE = [
    "x1*x2*x5*x6*x7*x8", "x2*x3*x5*x6*x7*x8", "x2^2*x3*x5*x6*x7", "x2^2*x3*x4*x6*x7",
    "x1*x2^2*x3*x6*x7", "x2*x3*x4*x5*x7*x8", "x2^2*x3*x4*x7*x8", "x1*x2*x3*x4*x7*x8",
    "x1^2*x3*x4*x7*x8", "x1^2*x3*x4*x5*x8", "x1*x3*x4*x6*x7*x8", "x1*x4*x5*x6*x7*x8",
    "x1^2*x4*x5*x6*x8", "x1^2*x2*x4*x5*x8", "x1*x2^2*x5*x6*x8", "x1*x2^2*x3*x6*x8",
    "x1^2*x2^2*x3*x6", "x1^2*x2^2*x5*x6", "x1^2*x2*x5*x6*x7", "x1^2*x2*x4*x5*x7",
    "x1^2*x2^2*x4*x5",
]
NONSQFREE_I1 = NONSQFREE[:14]
NONSQFREE_I2 = NONSQFREE[14:]
NONSQFREE_CAP = [
    "x1*x2^2*x5*x6*x7*x8", "x1^2*x2*x5*x6*x7*x8", "x1^2*x2*x4*x5*x7*x8",
    "x1^2*x2^2*x4*x5*x8", "x1*x2^2*x3*x6*x7*x8", "x1^2*x2^2*x3*x6*x7",
]

ZIEGLER_1 = [[1, 2, 3, 4], [1, 2, 4, 9], [1, 4, 8, 9], [1, 5, 8, 9], [1, 4, 5, 8], [1, 2, 6, 9],
             [1, 5, 6, 9], [1, 2, 5, 6], [2, 5, 6, 10], [2, 6, 7, 10], [1, 2, 5, 10], [1, 2, 3, 10],
             [2, 3, 7, 10], [2, 3, 6, 7]]
ZIEGLER_2 = [[1, 3, 4, 7], [1, 4, 5, 7], [4, 5, 7, 8], [3, 4, 7, 8], [2, 3, 4, 8], [2, 3, 6, 8],
             [3, 6, 7, 8]]

# Hachimori's constructible non-shellable complex, vertices 0..9 shifted to 1..10
_H1 = [[0, 3, 9], [2, 3, 9], [2, 8, 9], [2, 3, 8], [0, 3, 8], [0, 7, 8], [0, 3, 7], [2, 3, 7],
       [2, 6, 7], [5, 6, 7], [5, 7, 8], [4, 5, 8], [4, 8, 9], [0, 4, 9]]
_H2 = [[0, 1, 4], [1, 2, 4], [2, 4, 5], [1, 2, 5], [0, 1, 5], [0, 5, 6], [0, 1, 6], [1, 2, 6]]
HACHIMORI_1 = [[v + 1 for v in f] for f in _H1]
HACHIMORI_2 = [[v + 1 for v in f] for f in _H2]


def ideal(strs, n) -> MonomialIdeal:
    return MonomialIdeal.parse(strs, n)


def complex(name: str) -> SimplicialComplex:
    table = {
        "strip": (5, STRIP),
        "two-edges": (4, TWO_EDGES),
        "four-cycle": (4, FOUR_CYCLE),
        "rp2": (6, RP2_FACETS),
        "ziegler": (10, ZIEGLER_1 + ZIEGLER_2),
        "ziegler-1": (10, ZIEGLER_1),
        "ziegler-2": (10, ZIEGLER_2),
        "hachimori": (10, HACHIMORI_1 + HACHIMORI_2),
        "hachimori-1": (10, HACHIMORI_1),
        "hachimori-2": (10, HACHIMORI_2),
    }
    if name == "dunce-hat":
        return complex_of_dual_sr(ideal(DUNCE_HAT_DUAL, 8))
    if name not in table:
        raise KeyError(name)
    n, fs = table[name]
    return SimplicialComplex.make(n, fs)


NAMES = ["strip", "two-edges", "four-cycle", "rp2", "ziegler", "ziegler-1", "ziegler-2",
         "hachimori", "hachimori-1", "hachimori-2", "dunce-hat"]


IDEALS = {
    "nonsqfree": (8, NONSQFREE),
    "nonsqfree-1": (8, NONSQFREE_I1),
    "nonsqfree-2": (8, NONSQFREE_I2),
    "nonsqfree-cap": (8, NONSQFREE_CAP),
    "dunce-hat-dual": (8, DUNCE_HAT_DUAL),
}


def named_ideal(name: str) -> MonomialIdeal:
    n, strs = IDEALS[name]
    return ideal(strs, n)
