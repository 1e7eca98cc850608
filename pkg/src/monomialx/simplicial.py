"""Simplicial complexes on [n] given by facets.

The void complex has no facets at all; {emptyset} has the single empty
facet. Both are representable and behave differently (homology, duals).
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations

from .errors import BudgetError, FaceError, InputError, UnsupportedError
from .homology import reduced_homology
from .ideal import MonomialIdeal, minimal_transversals, minimalize
from .linquot import DEFAULT_BUDGET, QuotientCertificate, find_order
from .monomial import Monomial


def _maximal(sets):
    sets = sorted(set(frozenset(s) for s in sets), key=len, reverse=True)
    out = []
    for s in sets:
        if not any(s <= t for t in out):
            out.append(s)
    return out


def _facet_key(F):
    return (len(F), sorted(F))


@dataclass(frozen=True)
class SimplicialComplex:
    n: int
    facets: tuple  # frozensets, pairwise incomparable, sorted

    @classmethod
    def make(cls, n: int, facets) -> "SimplicialComplex":
        fs = [frozenset(f) for f in facets]
        for f in fs:
            if any(not 1 <= v <= n for v in f):
                raise InputError(f"vertex outside 1..{n} in {sorted(f)}")
        return cls(n, tuple(sorted(_maximal(fs), key=_facet_key)))

    @classmethod
    def void(cls, n: int) -> "SimplicialComplex":
        return cls(n, ())

    @classmethod
    def simplex(cls, n: int) -> "SimplicialComplex":
        return cls(n, (frozenset(range(1, n + 1)),))

    def is_void(self) -> bool:
        return not self.facets

    def is_empty_face_only(self) -> bool:
        return self.facets == (frozenset(),)

    @property
    def dim(self) -> int:
        if not self.facets:
            return -2  # convention for the void complex
        return max(len(f) for f in self.facets) - 1

    def is_pure(self) -> bool:
        return len({len(f) for f in self.facets}) <= 1

    @property
    def vertices(self) -> frozenset:
        out = set()
        for f in self.facets:
            out |= f
        return frozenset(out)

    def missing_vertices(self) -> list:
        """Vertices of [n] that are not faces (representable, but flagged)."""
        return sorted(set(range(1, self.n + 1)) - self.vertices)

    def is_full_simplex(self) -> bool:
        return self.facets == (frozenset(range(1, self.n + 1)),)

    def __contains__(self, F) -> bool:
        F = frozenset(F)
        return any(F <= f for f in self.facets)

    def faces(self) -> list:
        out = set()
        for f in self.facets:
            fl = sorted(f)
            for k in range(len(fl) + 1):
                for s in combinations(fl, k):
                    out.add(frozenset(s))
        return sorted(out, key=_facet_key)

    def f_vector(self) -> list:
        fv = {}
        for f in self.faces():
            fv[len(f) - 1] = fv.get(len(f) - 1, 0) + 1
        return [fv.get(k, 0) for k in range(-1, self.dim + 1)]

    def facet_lists(self) -> list:
        return [sorted(f) for f in self.facets]

    def to_json(self) -> dict:
        return {"n": self.n, "facets": self.facet_lists()}

    def __str__(self):
        return "<" + ", ".join("{" + ",".join(map(str, sorted(f))) + "}" for f in self.facets) + ">"


def complex_from_json(obj, where: str = "") -> SimplicialComplex:
    if isinstance(obj, str):
        try:
            obj = json.loads(obj)
        except json.JSONDecodeError as e:
            raise InputError(f"malformed JSON: {e}", field=where or "$") from None
    if not isinstance(obj, dict):
        raise InputError("complex must be an object", field=where or "$")
    n = obj.get("n")
    if not isinstance(n, int) or n < 0:
        raise InputError("missing or bad 'n'", field=f"{where}.n")
    fs = obj.get("facets")
    if not isinstance(fs, list):
        raise InputError("missing or bad 'facets'", field=f"{where}.facets")
    for k, f in enumerate(fs):
        if not isinstance(f, list) or not all(isinstance(v, int) for v in f):
            raise InputError("facet must be a list of ints", field=f"{where}.facets[{k}]")
        if any(not 1 <= v <= n for v in f):
            raise InputError(f"vertex outside 1..{n}", field=f"{where}.facets[{k}]")
    return SimplicialComplex.make(n, fs)


# ---- ideals -------------------------------------------------------------------

def minimal_nonfaces(D: SimplicialComplex) -> list:
    # F is a non-face iff it meets the complement of every facet
    if D.is_void():
        return [frozenset()]
    full = frozenset(range(1, D.n + 1))
    return minimal_transversals([full - f for f in D.facets])


def sr_ideal(D: SimplicialComplex):
    """I_Delta, or None when it is zero (Delta the full simplex)."""
    mins = minimal_nonfaces(D)
    if not mins:
        return None
    if frozenset() in mins:
        raise UnsupportedError("the void complex has the unit ideal as Stanley-Reisner ideal")
    return minimalize([Monomial.from_support(D.n, F) for F in mins], D.n)


def facet_ideal(D: SimplicialComplex) -> MonomialIdeal:
    if D.is_void() or frozenset() in D.facets:
        raise UnsupportedError("facet ideal of a complex with no nonempty facets")
    return minimalize([Monomial.from_support(D.n, F) for F in D.facets], D.n)


def dual_sr_ideal(D: SimplicialComplex) -> MonomialIdeal:
    """I_{Delta dual} = (x_{F^c} : F facet)."""
    if D.is_void():
        raise UnsupportedError("the void complex has no facets")
    if D.is_full_simplex():
        raise UnsupportedError("the dual of the full simplex is void (unit ideal)")
    full = frozenset(range(1, D.n + 1))
    return minimalize([Monomial.from_support(D.n, full - F) for F in D.facets], D.n)


def complex_of_sr(I: MonomialIdeal) -> SimplicialComplex:
    """Delta with I_Delta = I, for square-free I."""
    if not I.is_squarefree():
        raise UnsupportedError("not square-free")
    # facets = complements of the minimal primes
    from .ideal import minimal_primes
    full = frozenset(range(1, I.n + 1))
    return SimplicialComplex.make(I.n, [full - p for p in minimal_primes(I).primes])


def complex_of_dual_sr(I: MonomialIdeal) -> SimplicialComplex:
    """Delta with I_{Delta dual} = I: facets are the complements of the supports."""
    if not I.is_squarefree():
        raise UnsupportedError("not square-free")
    full = frozenset(range(1, I.n + 1))
    return SimplicialComplex.make(I.n, [full - g.supp for g in I.gens])


def alexander_dual(D: SimplicialComplex) -> SimplicialComplex:
    full = frozenset(range(1, D.n + 1))
    if D.is_full_simplex():
        return SimplicialComplex.void(D.n)
    return SimplicialComplex.make(D.n, [full - F for F in minimal_nonfaces(D)])


def intersection(A: SimplicialComplex, B: SimplicialComplex) -> SimplicialComplex:
    return SimplicialComplex.make(A.n, [f & g for f in A.facets for g in B.facets])


def union(A: SimplicialComplex, B: SimplicialComplex) -> SimplicialComplex:
    return SimplicialComplex.make(A.n, list(A.facets) + list(B.facets))


# ---- link / deletion ----------------------------------------------------------

def link(D: SimplicialComplex, F) -> SimplicialComplex:
    F = frozenset(F)
    if F not in D:
        raise FaceError(f"{sorted(F)} is not a face")
    return SimplicialComplex.make(D.n, [H - F for H in D.facets if F <= H])


def deletion(D: SimplicialComplex, F) -> SimplicialComplex:
    F = frozenset(F)
    if F not in D:
        raise FaceError(f"{sorted(F)} is not a face")
    return SimplicialComplex.make(D.n, [H - F for H in D.facets])


# ---- shellability --------------------------------------------------------------

def check_shelling(order) -> bool:
    """For all j < i there are v in F_i - F_j and k < i with F_i - F_k = {v}."""
    order = [frozenset(f) for f in order]
    for i in range(1, len(order)):
        Fi = order[i]
        singles = {next(iter(Fi - order[k])) for k in range(i) if len(Fi - order[k]) == 1}
        for j in range(i):
            if not ((Fi - order[j]) & singles):
                return False
    return True


@dataclass
class ShellingResult:
    status: str  # "shellable" | "not-shellable" | "unknown"
    order: list = field(default_factory=list)
    certificate: QuotientCertificate | None = None

    @property
    def shellable(self):
        return self.status == "shellable"

    def to_json(self):
        return {"status": self.status, "order": [sorted(f) for f in self.order]}


def _require_pure(D):
    if not D.is_pure():
        raise UnsupportedError("this predicate is defined for pure complexes only")


def is_shellable(D: SimplicialComplex, budget: int = DEFAULT_BUDGET) -> ShellingResult:
    _require_pure(D)
    if len(D.facets) <= 1:
        return ShellingResult("shellable", list(D.facets))
    I = dual_sr_ideal(D)
    res = find_order(I, budget)
    if res.status == "unknown":
        return ShellingResult("unknown")
    if res.status == "none":
        return ShellingResult("not-shellable")
    full = frozenset(range(1, D.n + 1))
    order = [full - u.supp for u in res.certificate.order]
    if not check_shelling(order):
        from .errors import InvariantViolation
        raise InvariantViolation("dual certificate did not give a shelling")
    return ShellingResult("shellable", order, res.certificate)


def shelling_search(D: SimplicialComplex, budget: int = 100_000):
    """Direct search for a shelling: each new facet meets the union of the
    earlier ones in a pure complex of codimension one. Returns the order,
    [] if none exists, or None when the budget runs out."""
    _require_pure(D)
    fs = list(D.facets)
    r = len(fs)
    if r <= 1:
        return fs
    d = len(fs[0])
    dead = set()
    count = [0]
    order = []

    def fits(F, used):
        inter = _maximal([F & fs[k] for k in used])
        return all(len(x) == d - 1 for x in inter)

    def rec(used):
        if len(used) == r:
            return True
        if used in dead:
            return False
        count[0] += 1
        if count[0] > budget:
            raise BudgetError("shelling search budget exhausted")
        for k in range(r):
            if k not in used and fits(fs[k], used):
                order.append(fs[k])
                if rec(used | {k}):
                    return True
                order.pop()
        dead.add(used)
        return False

    try:
        for k in range(r):
            order[:] = [fs[k]]
            if rec(frozenset([k])):
                return list(order)
    except BudgetError:
        return None
    return []


def is_vertex_decomposable(D: SimplicialComplex) -> bool:
    _require_pure(D)
    return _vd(D.n, D.facets)


@lru_cache(maxsize=None)
def _vd(n, facets) -> bool:
    if facets == (frozenset(),):
        return True
    if not facets or len({len(f) for f in facets}) > 1:
        return False
    D = SimplicialComplex(n, facets)
    for v in sorted(D.vertices):
        dl = deletion(D, {v})
        if not dl.is_pure():
            continue
        lk = link(D, {v})
        if _vd(n, dl.facets) and _vd(n, lk.facets):
            return True
    return False


def replacement_is_face(D: SimplicialComplex, F, old: int, new: int) -> bool:
    """Replace vertex old in F by new (not in F); is the result a face?"""
    F = frozenset(F)
    if old not in F or new in F:
        raise InputError("need old in F and new outside F")
    return (F - {old}) | {new} in D


def is_shifted(D: SimplicialComplex, max_vertices: int = 8):
    """A labelling witnessing shiftedness (list of vertices, smallest label
    first), or None."""
    _require_pure(D)
    V = sorted(D.vertices)
    if len(V) > max_vertices:
        raise BudgetError(f"shifted search limited to {max_vertices} vertices")
    # dom[a][b]: a may replace b in every facet containing b but not a
    dom = {}
    for a in V:
        for b in V:
            if a == b:
                continue
            dom[a, b] = all(replacement_is_face(D, F, b, a) for F in D.facets if b in F and a not in F)

    def rec(rest):
        if not rest:
            return []
        for a in rest:
            if all(dom[a, b] for b in rest if b != a):
                tail = rec([b for b in rest if b != a])
                if tail is not None:
                    return [a] + tail
        return None

    return rec(V)


# ---- homology / Cohen-Macaulay ------------------------------------------------

@dataclass
class HomologyProfile:
    char: int
    reduced: dict  # k -> dim H~_k

    def betti(self, k) -> int:
        return self.reduced.get(k, 0)

    def to_json(self):
        from .betti import field_name
        return {"field": field_name(self.char), "reduced_betti": {str(k): v for k, v in sorted(self.reduced.items())}}


def homology(D: SimplicialComplex, char: int = 0) -> HomologyProfile:
    return HomologyProfile(char, reduced_homology(D.faces(), char))


@dataclass
class CMReport:
    cohen_macaulay: bool
    char: int
    witness: tuple | None = None  # (face, i) with H~_i(lk F) != 0, i < dim lk

    def __bool__(self):
        return self.cohen_macaulay

    def to_json(self):
        from .betti import field_name
        out = {"cohen_macaulay": self.cohen_macaulay, "field": field_name(self.char)}
        if self.witness:
            out["witness"] = {"face": sorted(self.witness[0]), "i": self.witness[1]}
        return out


def is_cohen_macaulay(D: SimplicialComplex, char: int = 0) -> CMReport:
    """Reisner: H~_i(lk F) = 0 for every face F and every i < dim lk F."""
    if D.is_void():
        return CMReport(True, char)
    for F in D.faces():
        lk = link(D, F)
        h = reduced_homology(lk.faces(), char)
        for i, v in h.items():
            if i < lk.dim and v:
                return CMReport(False, char, (F, i))
    return CMReport(True, char)


@dataclass
class EagonReinerReport:
    cohen_macaulay: bool
    dual_linear: bool
    agree: bool
    terai_projdim: int | None
    terai_reg: int | None
    terai_ok: bool | None
    char: int = 0

    def to_json(self):
        return dict(self.__dict__)


def eagon_reiner_check(D: SimplicialComplex, char: int = 0) -> EagonReinerReport:
    from .betti import betti_numbers
    _require_pure(D)
    cm = bool(is_cohen_macaulay(D, char))
    if D.is_full_simplex():
        return EagonReinerReport(cm, True, cm, None, None, None, char)
    J = dual_sr_ideal(D)
    bj = betti_numbers(J, char)
    lin = bj.linear
    I = sr_ideal(D)
    if I is None:
        return EagonReinerReport(cm, lin, cm == lin, None, None, None, char)
    pd = betti_numbers(I, char).projdim
    reg = bj.table.reg - 1  # reg S/J = reg J - 1
    return EagonReinerReport(cm, lin, cm == lin, pd, reg, pd == reg, char)


# ---- named complexes -------------------------------------------------------------

RP2_FACETS = [[1, 2, 3], [1, 3, 4], [1, 4, 5], [1, 5, 6], [1, 2, 6],
              [2, 3, 5], [3, 4, 6], [2, 4, 5], [3, 5, 6], [2, 4, 6]]


def rp2() -> SimplicialComplex:
    """The 6-vertex triangulation of the real projective plane."""
    return SimplicialComplex.make(6, RP2_FACETS)
