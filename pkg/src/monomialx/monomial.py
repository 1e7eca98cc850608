"""Monomials as exponent tuples, with the three term orders we need.

Variables are 1-based everywhere a user can see them. Internally the
exponent tuple is 0-based, so exps[0] is the exponent of x1.
"""
from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from math import comb
from typing import Iterable, Iterator

from .errors import DegreeError, DimensionError, InputError


class TermOrder(enum.Enum):
    LEX = "lex"              # x1 > x2 > ... > xn
    LEX_REVERSED = "revlex"  # xn > ... > x1 (lex with variables reversed)
    PREC = "prec"            # smaller x1-exponent first, ties broken by lex descending


@dataclass(frozen=True, order=False)
class Monomial:
    exps: tuple

    def __post_init__(self):
        if any(e < 0 for e in self.exps):
            raise InputError(f"negative exponent in {self.exps}")

    @classmethod
    def one(cls, n: int) -> "Monomial":
        return cls((0,) * n)

    @classmethod
    def var(cls, n: int, i: int) -> "Monomial":
        """x_i, 1-based."""
        if not 1 <= i <= n:
            raise DimensionError(f"x{i} outside 1..{n}")
        e = [0] * n
        e[i - 1] = 1
        return cls(tuple(e))

    @classmethod
    def from_support(cls, n: int, idx: Iterable[int]) -> "Monomial":
        """Square-free monomial x_F for a 1-based index set F."""
        e = [0] * n
        for i in idx:
            if not 1 <= i <= n:
                raise DimensionError(f"x{i} outside 1..{n}")
            e[i - 1] = 1
        return cls(tuple(e))

    @property
    def n(self) -> int:
        return len(self.exps)

    @property
    def degree(self) -> int:
        return sum(self.exps)

    def nu(self, i: int) -> int:
        """Exponent of x_i (1-based)."""
        return self.exps[i - 1]

    @property
    def supp(self) -> frozenset:
        return frozenset(i + 1 for i, e in enumerate(self.exps) if e)

    @property
    def max(self):
        for i in range(len(self.exps) - 1, -1, -1):
            if self.exps[i]:
                return i + 1
        return None

    @property
    def min(self):
        for i, e in enumerate(self.exps):
            if e:
                return i + 1
        return None

    def is_one(self) -> bool:
        return not any(self.exps)

    def is_squarefree(self) -> bool:
        return all(e <= 1 for e in self.exps)

    def _check(self, other: "Monomial"):
        if len(self.exps) != len(other.exps):
            raise DimensionError(f"variable count mismatch: {self.n} vs {other.n}")

    def __mul__(self, other: "Monomial") -> "Monomial":
        self._check(other)
        return Monomial(tuple(a + b for a, b in zip(self.exps, other.exps)))

    def divides(self, other: "Monomial") -> bool:
        self._check(other)
        return all(a <= b for a, b in zip(self.exps, other.exps))

    def __truediv__(self, other: "Monomial") -> "Monomial":
        self._check(other)
        e = tuple(a - b for a, b in zip(self.exps, other.exps))
        if any(x < 0 for x in e):
            raise InputError(f"{other} does not divide {self}")
        return Monomial(e)

    def lcm(self, other: "Monomial") -> "Monomial":
        self._check(other)
        return Monomial(tuple(max(a, b) for a, b in zip(self.exps, other.exps)))

    def gcd(self, other: "Monomial") -> "Monomial":
        self._check(other)
        return Monomial(tuple(min(a, b) for a, b in zip(self.exps, other.exps)))

    def colon(self, other: "Monomial") -> "Monomial":
        """u/gcd(u, v): generator of (u):(v)."""
        self._check(other)
        return Monomial(tuple(a - b if a > b else 0 for a, b in zip(self.exps, other.exps)))

    def times_var(self, i: int) -> "Monomial":
        e = list(self.exps)
        e[i - 1] += 1
        return Monomial(tuple(e))

    def div_var(self, i: int) -> "Monomial":
        e = list(self.exps)
        if e[i - 1] == 0:
            raise InputError(f"x{i} does not divide {self}")
        e[i - 1] -= 1
        return Monomial(tuple(e))

    def drop_first(self) -> "Monomial":
        """Forget x1 (caller guarantees it does not occur, or wants it gone)."""
        return Monomial(self.exps[1:])

    def __str__(self) -> str:
        return format_monomial(self)

    def __repr__(self) -> str:
        return f"Monomial({format_monomial(self)!r}, n={self.n})"


# ---- orders ---------------------------------------------------------------

def order_key(u: Monomial, order: TermOrder):
    """Sort key; larger key = larger in the order."""
    if order is TermOrder.LEX:
        return u.exps
    if order is TermOrder.LEX_REVERSED:
        return u.exps[::-1]
    if order is TermOrder.PREC:
        # a < b iff nu1(a) < nu1(b), or nu1 equal and a >lex b
        return (u.exps[0], tuple(-e for e in u.exps))
    raise ValueError(order)


def compare(a: Monomial, b: Monomial, order: TermOrder = TermOrder.LEX) -> int:
    """-1, 0 or 1."""
    a._check(b)
    if order is TermOrder.PREC and a.degree != b.degree:
        raise DegreeError("the prec order only compares monomials of equal degree")
    ka, kb = order_key(a, order), order_key(b, order)
    return (ka > kb) - (ka < kb)


def lex_gt(a: Monomial, b: Monomial) -> bool:
    return a.exps > b.exps


def sort_desc(mons: Iterable[Monomial], order: TermOrder = TermOrder.LEX) -> list:
    return sorted(mons, key=lambda m: order_key(m, order), reverse=True)


def sort_asc(mons: Iterable[Monomial], order: TermOrder = TermOrder.LEX) -> list:
    return sorted(mons, key=lambda m: order_key(m, order))


def support_stats(u: Monomial):
    """(degree, supp, max, min), max/min None for the constant."""
    return u.degree, set(u.supp), u.max, u.min


# ---- text form ------------------------------------------------------------

_FACTOR = re.compile(r"^x(\d+)(?:\^(\d+))?$")


def parse_monomial(text: str, n: int) -> Monomial:
    s = text.strip().replace(" ", "")
    if not s:
        raise InputError("empty monomial string")
    e = [0] * n
    if s == "1":
        return Monomial(tuple(e))
    for part in s.split("*"):
        m = _FACTOR.match(part)
        if not m:
            raise InputError(f"cannot parse factor {part!r} in {text!r}")
        i = int(m.group(1))
        p = int(m.group(2)) if m.group(2) else 1
        if not 1 <= i <= n:
            raise DimensionError(f"x{i} outside 1..{n} in {text!r}")
        e[i - 1] += p
    return Monomial(tuple(e))


def format_monomial(u: Monomial) -> str:
    parts = []
    for i, e in enumerate(u.exps):
        if e == 1:
            parts.append(f"x{i + 1}")
        elif e > 1:
            parts.append(f"x{i + 1}^{e}")
    return "*".join(parts) if parts else "1"


# ---- M_d ------------------------------------------------------------------

def count_monomials(n: int, d: int) -> int:
    return comb(n + d - 1, d)


def iter_monomials_desc(n: int, d: int) -> Iterator[Monomial]:
    """All of M_d in descending lex order."""
    def rec(i, left):
        if i == n - 1:
            yield (left,)
            return
        for a in range(left, -1, -1):
            for rest in rec(i + 1, left - a):
                yield (a,) + rest
    if n == 0:
        if d == 0:
            yield Monomial(())
        return
    for t in rec(0, d):
        yield Monomial(t)


def monomials_desc(n: int, d: int, guard: int = 10**6) -> list:
    if count_monomials(n, d) > guard:
        from .errors import BudgetError
        raise BudgetError(f"|M_{d}| in {n} variables exceeds {guard}")
    return list(iter_monomials_desc(n, d))


def monomials_upto(n: int, d: int) -> list:
    out = []
    for k in range(d + 1):
        out.extend(iter_monomials_desc(n, k))
    return out
