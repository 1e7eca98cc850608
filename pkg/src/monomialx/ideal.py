"""Monomial ideals kept in canonical form: minimal generators, descending lex."""
from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable

from .errors import DimensionError, EmptyIdealError, InputError
from .monomial import Monomial, format_monomial, parse_monomial


def _minimal(mons):
    # sort by degree so a divisor is always seen before its multiples
    out = []
    for m in sorted(set(mons), key=lambda u: (u.degree, u.exps)):
        if not any(g.divides(m) for g in out):
            out.append(m)
    return out


@dataclass(frozen=True)
class MonomialIdeal:
    n: int
    gens: tuple  # of Monomial, minimal, strictly descending lex

    @classmethod
    def make(cls, gens: Iterable[Monomial], n: int | None = None) -> "MonomialIdeal":
        return minimalize(gens, n)

    @classmethod
    def parse(cls, strs: Iterable[str], n: int) -> "MonomialIdeal":
        return minimalize([parse_monomial(s, n) for s in strs], n)

    def __len__(self):
        return len(self.gens)

    def __iter__(self):
        return iter(self.gens)

    def __contains__(self, w: Monomial) -> bool:
        return membership(self, w)

    def degrees(self) -> list:
        return [g.degree for g in self.gens]

    def is_equigenerated(self) -> bool:
        return len(set(self.degrees())) == 1

    @property
    def gen_degree(self):
        ds = set(self.degrees())
        return ds.pop() if len(ds) == 1 else None

    def is_squarefree(self) -> bool:
        return all(g.is_squarefree() for g in self.gens)

    def is_principal(self) -> bool:
        return len(self.gens) == 1

    def lcm(self) -> Monomial:
        out = Monomial.one(self.n)
        for g in self.gens:
            out = out.lcm(g)
        return out

    def strs(self) -> list:
        return [format_monomial(g) for g in self.gens]

    def to_json(self) -> dict:
        return {"n": self.n, "gens": self.strs()}

    def __str__(self):
        return "(" + ", ".join(self.strs()) + ")"


def minimalize(gens: Iterable[Monomial], n: int | None = None) -> MonomialIdeal:
    gens = list(gens)
    if not gens:
        raise EmptyIdealError("empty generator list")
    ns = {g.n for g in gens}
    if n is not None:
        ns.add(n)
    if len(ns) != 1:
        raise DimensionError(f"generators live in different rings: {sorted(ns)}")
    n = ns.pop()
    mins = _minimal(gens)
    if any(m.is_one() for m in mins):
        raise InputError("the unit ideal is not supported (generator 1)")
    mins.sort(key=lambda u: u.exps, reverse=True)
    return MonomialIdeal(n, tuple(mins))


def ideal_from_json(obj, where: str = "") -> MonomialIdeal:
    if isinstance(obj, str):
        try:
            obj = json.loads(obj)
        except json.JSONDecodeError as e:
            raise InputError(f"malformed JSON: {e}", field=where or "$") from None
    if not isinstance(obj, dict):
        raise InputError("ideal must be an object", field=where or "$")
    if "n" not in obj or not isinstance(obj["n"], int) or obj["n"] < 1:
        raise InputError("missing or bad 'n'", field=f"{where}.n")
    if "gens" not in obj or not isinstance(obj["gens"], list):
        raise InputError("missing or bad 'gens'", field=f"{where}.gens")
    gens = []
    for k, s in enumerate(obj["gens"]):
        if not isinstance(s, str):
            raise InputError("generator must be a string", field=f"{where}.gens[{k}]")
        try:
            gens.append(parse_monomial(s, obj["n"]))
        except InputError as e:
            raise InputError(str(e), field=f"{where}.gens[{k}]") from None
    if not gens:
        raise EmptyIdealError("empty generator list", field=f"{where}.gens")
    return minimalize(gens, obj["n"])


def _same_ring(I, J):
    if I.n != J.n:
        raise DimensionError(f"ideals in {I.n} and {J.n} variables")


def membership(I: MonomialIdeal, w: Monomial) -> bool:
    if w.n != I.n:
        raise DimensionError("monomial and ideal in different rings")
    return any(g.divides(w) for g in I.gens)


def ideal_sum(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _same_ring(I, J)
    return minimalize(I.gens + J.gens, I.n)


def intersect(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _same_ring(I, J)
    return minimalize([a.lcm(b) for a in I.gens for b in J.gens], I.n)


def colon_ideal(I: MonomialIdeal, u: Monomial):
    """(I : u). Returns None for the unit ideal (u already in I)."""
    qs = [g.colon(u) for g in I.gens]
    if any(q.is_one() for q in qs):
        return None
    return minimalize(qs, I.n)


def colon_gens(gens, u: Monomial) -> list:
    """Minimal generators of (gens) : u as a plain list (may contain 1)."""
    qs = [g.colon(u) for g in gens]
    if any(q.is_one() for q in qs):
        return [Monomial.one(u.n)]
    return list(minimalize(qs, u.n).gens)


def is_variable_ideal(gens) -> bool:
    return all(g.degree == 1 for g in gens)


def is_prime_ideal(I) -> bool:
    """Monomial prime: generated by a nonempty set of variables."""
    return I is not None and is_variable_ideal(I.gens)


# ---- radical, primes, dimension ------------------------------------------

def radical(I: MonomialIdeal) -> MonomialIdeal:
    return minimalize([Monomial(tuple(1 if e else 0 for e in g.exps)) for g in I.gens], I.n)


def minimal_transversals(edges) -> list:
    """Minimal hitting sets of a family of vertex sets.

    Branch on the vertices of an uncovered edge, then throw away
    non-minimal results. Fine for the sizes we care about (n up to ~16).
    """
    edges = [frozenset(e) for e in edges]
    if any(not e for e in edges):
        return []  # an empty edge can never be hit
    # drop edges that contain another edge, they are hit automatically
    edges = sorted(set(edges), key=len)
    base = [e for k, e in enumerate(edges) if not any(f < e for f in edges[:k])]
    found = set()

    def rec(chosen, idx):
        if any(f <= chosen for f in found):
            return  # a subset already hits everything, this branch can't be minimal
        for k in range(idx, len(base)):
            if not (base[k] & chosen):
                for v in sorted(base[k]):
                    rec(chosen | {v}, k + 1)
                return
        found.add(chosen)

    rec(frozenset(), 0)
    mins = [t for t in found if not any(s < t for s in found)]
    return sorted(mins, key=lambda t: (len(t), sorted(t)))


@dataclass(frozen=True)
class PrimeDecomposition:
    primes: tuple  # of frozensets of 1-based variable indices

    def as_lists(self):
        return [sorted(p) for p in self.primes]


def minimal_primes(I: MonomialIdeal) -> PrimeDecomposition:
    return PrimeDecomposition(tuple(minimal_transversals([g.supp for g in radical(I).gens])))


def radical_and_primes(I: MonomialIdeal):
    return radical(I), minimal_primes(I)


def height(I: MonomialIdeal) -> int:
    return min(len(p) for p in minimal_primes(I).primes)


def krull_dim(I: MonomialIdeal) -> int:
    """dim S/I."""
    return I.n - height(I)
