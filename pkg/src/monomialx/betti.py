"""Brute-force Betti numbers, depth and Hilbert counts.

This is the trusted baseline everything else gets compared against, so it
shares no code with the closed-form side beyond monomial arithmetic.

Two methods:
  taylor  - the Taylor complex, one multidegree strand at a time. After
            tensoring with k only entries with lcm(sigma minus j) = lcm(sigma)
            survive, so beta_{i,b} is a rank computation inside the strand b.
  koszul  - beta_{i,b}(I) = dim H~_{i-1}(K^b), where K^b is the set of
            square-free F with x^b / x^F in I, over the lcm lattice.
Taylor is limited to few generators (2^r subsets); the second method scales
with the lcm lattice instead and is used for larger ideals.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations

from .bettitable import BettiTable
from .errors import BudgetError
from .homology import reduced_homology
from .ideal import MonomialIdeal, membership
from .kernels import rank
from .monomial import Monomial, count_monomials, iter_monomials_desc

TAYLOR_BUDGET = 16
DEFAULT_P = 32003


def field_name(char: int) -> str:
    return "QQ" if char == 0 else f"F_{char}"


@dataclass
class OracleBettiTable:
    char: int
    table: BettiTable
    multigraded: dict = field(default_factory=dict)  # (i, exps) -> beta
    method: str = "taylor"

    @property
    def projdim(self) -> int:
        return self.table.projdim

    @property
    def linear(self) -> bool:
        return self.table.is_linear()

    @property
    def field(self) -> str:
        return field_name(self.char)

    def to_json(self) -> dict:
        d = self.table.to_json()
        d.update({"field": self.field, "linear": self.linear, "method": self.method})
        return d


def _lcm_table(gens):
    r = len(gens)
    n = gens[0].n
    lcms = [None] * (1 << r)
    lcms[0] = (0,) * n
    for S in range(1, 1 << r):
        low = S & -S
        j = low.bit_length() - 1
        a = lcms[S ^ low]
        b = gens[j].exps
        lcms[S] = tuple(x if x > y else y for x, y in zip(a, b))
    return lcms


def taylor_betti(I: MonomialIdeal, char: int = 0, budget: int = TAYLOR_BUDGET,
                 pivot_seed=None) -> OracleBettiTable:
    gens = list(I.gens)
    r = len(gens)
    if r > budget:
        raise BudgetError(f"Taylor complex on {r} generators exceeds budget {budget}")
    lcms = _lcm_table(gens)
    strands = {}
    for S in range(1, 1 << r):
        strands.setdefault(lcms[S], []).append(S)
    rng = random.Random(pivot_seed) if pivot_seed is not None else None
    out = OracleBettiTable(char, BettiTable(), method="taylor")
    for b, subsets in strands.items():
        deg = sum(b)
        by_size = {}
        for S in subsets:
            by_size.setdefault(bin(S).count("1"), []).append(S)
        if rng is not None:
            for v in by_size.values():
                rng.shuffle(v)
        ranks = {}
        for size, cols in by_size.items():
            if size == 1:
                ranks[size] = 0
                continue
            rows = {S: k for k, S in enumerate(by_size.get(size - 1, []))}
            mat = []
            for S in cols:
                col = []
                pos = 0
                T = S
                while T:
                    low = T & -T
                    U = S ^ low
                    if lcms[U] == b:
                        col.append((rows[U], -1 if pos % 2 else 1))
                    pos += 1
                    T ^= low
                mat.append(col)
            ranks[size] = rank(mat, char)
        for size, cols in by_size.items():
            beta = len(cols) - ranks.get(size, 0) - ranks.get(size + 1, 0)
            if beta:
                i = size - 1
                out.table.add(i, deg, beta)
                out.multigraded[(i, b)] = beta
    return out


def lcm_lattice(I: MonomialIdeal) -> set:
    """All lcms of nonempty subsets of G(I), as exponent tuples."""
    seen = {g.exps for g in I.gens}
    frontier = list(seen)
    gens = [g.exps for g in I.gens]
    while frontier:
        new = []
        for a in frontier:
            for g in gens:
                c = tuple(x if x > y else y for x, y in zip(a, g))
                if c not in seen:
                    seen.add(c)
                    new.append(c)
        frontier = new
    return seen


def upper_koszul_betti(I: MonomialIdeal, char: int = 0) -> OracleBettiTable:
    out = OracleBettiTable(char, BettiTable(), method="koszul")
    for b in sorted(lcm_lattice(I)):
        supp = [t for t, e in enumerate(b) if e]
        faces = []
        for k in range(len(supp) + 1):
            for F in combinations(supp, k):
                e = list(b)
                for t in F:
                    e[t] -= 1
                if membership(I, Monomial(tuple(e))):
                    faces.append(frozenset(F))
        h = reduced_homology(faces, char)
        deg = sum(b)
        for k, v in h.items():
            if v:
                out.table.add(k + 1, deg, v)
                out.multigraded[(k + 1, b)] = v
    return out


def betti_numbers(I: MonomialIdeal, char: int = 0, method: str = "auto",
                  budget: int = TAYLOR_BUDGET, pivot_seed=None) -> OracleBettiTable:
    if method == "auto":
        method = "taylor" if len(I.gens) <= min(budget, 10) else "koszul"
    if method == "taylor":
        return taylor_betti(I, char, budget, pivot_seed)
    if method == "koszul":
        return upper_koszul_betti(I, char)
    raise ValueError(f"unknown method {method!r}")


def depth_and_projdim(I: MonomialIdeal, char: int = 0, method: str = "auto"):
    """(depth S/I, projdim S/I)."""
    pd = betti_numbers(I, char, method).projdim + 1
    return I.n - pd, pd


def hilbert_count(I: MonomialIdeal, k: int, guard: int = 10**7) -> int:
    if count_monomials(I.n, k) > guard:
        raise BudgetError(f"|M_{k}| too large to enumerate")
    return sum(1 for w in iter_monomials_desc(I.n, k) if membership(I, w))
