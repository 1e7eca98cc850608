"""Linear quotients: checking an order, searching for one, set(u), the
decomposition function and its regularity, and stable ideals."""
from __future__ import annotations

from dataclasses import dataclass, field
from math import comb

from .bettitable import BettiTable
from .errors import InputError, NotInIdealError, UnsupportedError
from .ideal import MonomialIdeal, colon_gens, membership
from .monomial import Monomial, TermOrder, format_monomial, order_key

DEFAULT_BUDGET = 10**6


@dataclass(frozen=True)
class QuotientCertificate:
    ideal: MonomialIdeal
    order: tuple  # Monomials u_1..u_m
    sets: tuple   # frozensets, set(u_i), 1-based variable indices

    def index(self, u: Monomial) -> int:
        return self.order.index(u)

    def set_of(self, u: Monomial) -> frozenset:
        return self.sets[self.order.index(u)]

    @property
    def r(self) -> list:
        return [len(s) for s in self.sets]

    def to_json(self) -> dict:
        return {
            "order": [format_monomial(u) for u in self.order],
            "sets": [sorted(s) for s in self.sets],
        }


@dataclass(frozen=True)
class QuotientFailure:
    i: int          # 1-based position that fails
    j: int          # 1-based j < i with no variable quotient dividing u_j/gcd(u_j,u_i)
    colon: tuple    # minimal generators of (u_1..u_{i-1}) : u_i

    def to_json(self) -> dict:
        return {"i": self.i, "j": self.j, "colon": [format_monomial(c) for c in self.colon]}


def check_order(I: MonomialIdeal, order) -> QuotientCertificate | QuotientFailure:
    order = tuple(order)
    if sorted(order, key=lambda u: u.exps) != sorted(I.gens, key=lambda u: u.exps):
        raise InputError("order is not a permutation of G(I)")
    sets = [frozenset()]
    for i in range(1, len(order)):
        ui = order[i]
        qs = [order[j].colon(ui) for j in range(i)]
        lin = {q.min for q in qs if q.degree == 1}
        for j, q in enumerate(qs):
            if not (q.supp & lin):
                return QuotientFailure(i + 1, j + 1, tuple(colon_gens(order[:i], ui)))
        sets.append(frozenset(lin))
    return QuotientCertificate(I, order, tuple(sets))


# ---- search ---------------------------------------------------------------

def _masks(gens):
    """Pairwise quotient tables as bitmasks (bit l-1 for x_l)."""
    k = len(gens)
    supp = [0] * (k * k)
    lin = [0] * (k * k)
    for j in range(k):
        for i in range(k):
            if i == j:
                continue
            q = gens[j].colon(gens[i])
            m = 0
            for t, e in enumerate(q.exps):
                if e:
                    m |= 1 << t
            supp[j * k + i] = m
            if q.degree == 1:
                lin[j * k + i] = m
    return supp, lin


@dataclass
class FindResult:
    status: str  # "found" | "none" | "unknown"
    certificate: QuotientCertificate | None = None
    nodes: int = 0
    tried: list = field(default_factory=list)

    @property
    def found(self):
        return self.status == "found"


def named_orders(I: MonomialIdeal) -> list:
    out = [("lex", tuple(I.gens))]
    out.append(("revlex", tuple(sorted(I.gens, key=lambda u: order_key(u, TermOrder.LEX_REVERSED), reverse=True))))
    if I.is_equigenerated():
        out.append(("prec", tuple(sorted(I.gens, key=lambda u: order_key(u, TermOrder.PREC)))))
    return out


def find_order(I: MonomialIdeal, budget: int = DEFAULT_BUDGET) -> FindResult:
    res = FindResult("none")
    for name, order in named_orders(I):
        res.tried.append(name)
        c = check_order(I, order)
        if isinstance(c, QuotientCertificate):
            res.status, res.certificate = "found", c
            return res
    gens = I.gens
    k = len(gens)
    supp, lin = _masks(gens)
    dead = set()
    nodes = 0
    full = (1 << k) - 1

    class Out(Exception):
        pass

    def ok_next(S, i):
        L = 0
        T = S
        while T:
            low = T & -T
            L |= lin[(low.bit_length() - 1) * k + i]
            T ^= low
        T = S
        while T:
            low = T & -T
            if not supp[(low.bit_length() - 1) * k + i] & L:
                return False
            T ^= low
        return True

    def dfs(S, path):
        nonlocal nodes
        if S == full:
            return path
        if S in dead:
            return None
        nodes += 1
        if nodes > budget:
            raise Out
        for i in range(k):  # descending lex, gens are stored that way
            if S >> i & 1:
                continue
            if ok_next(S, i):
                got = dfs(S | (1 << i), path + [i])
                if got is not None:
                    return got
        dead.add(S)
        return None

    res.tried.append("search")
    try:
        for first in range(k):
            got = dfs(1 << first, [first])
            if got is not None:
                c = check_order(I, [gens[i] for i in got])
                res.status, res.certificate = "found", c
                break
    except Out:
        res.status = "unknown"
    res.nodes = nodes
    return res


def has_linear_quotients(I: MonomialIdeal) -> bool:
    """Existence only, through the subset-DP kernel. Meant for small ideals."""
    from .kernels import lq_feasible
    if len(I.gens) == 1:
        return True
    if len(I.gens) > 24 or I.n > 63:
        raise UnsupportedError("too many generators for the subset DP")
    supp, lin = _masks(I.gens)
    return lq_feasible(len(I.gens), supp, lin)


# ---- decomposition function -----------------------------------------------

@dataclass(frozen=True)
class DecompositionFunction:
    certificate: QuotientCertificate

    def __call__(self, w: Monomial) -> Monomial:
        return decomposition_apply(self, w)


def decomposition_apply(g, w: Monomial) -> Monomial:
    cert = g.certificate if isinstance(g, DecompositionFunction) else g
    for u in cert.order:
        if u.divides(w):
            return u
    raise NotInIdealError(f"{w} is not in the ideal")


@dataclass(frozen=True)
class RegularityResult:
    regular: bool
    u: Monomial | None = None
    s: int | None = None

    def __bool__(self):
        return self.regular

    def to_json(self):
        if self.regular:
            return {"regular": True}
        return {"regular": False, "u": format_monomial(self.u), "s": self.s}


def is_regular(g) -> RegularityResult:
    cert = g.certificate if isinstance(g, DecompositionFunction) else g
    for u, su in zip(cert.order, cert.sets):
        for s in sorted(su):
            v = decomposition_apply(cert, u.times_var(s))
            if not cert.set_of(v) <= su:
                return RegularityResult(False, u, s)
    return RegularityResult(True)


def betti_from_certificate(cert: QuotientCertificate) -> BettiTable:
    if not cert.ideal.is_equigenerated():
        raise UnsupportedError("the quotient Betti formula needs generators of one degree")
    d = cert.ideal.gen_degree
    t = BettiTable()
    for r in cert.r:
        for i in range(r + 1):
            t.add(i, i + d, comb(r, i))
    return t


# ---- stable ideals ----------------------------------------------------------

def is_stable(I: MonomialIdeal) -> bool:
    for u in I.gens:
        m = u.max
        for i in range(1, m):
            if not membership(I, u.times_var(i).div_var(m)):
                return False
    return True


def canonical_decomposition(I: MonomialIdeal, w: Monomial):
    """The unique (u, v) with w = u v, u in G(I), max(u) <= min(v)."""
    for u in I.gens:
        if u.divides(w):
            v = w / u
            if v.is_one() or u.max <= v.min:
                return u, v
    raise NotInIdealError(f"{w} is not in the ideal")


def stable_g(I: MonomialIdeal, w: Monomial) -> Monomial:
    return canonical_decomposition(I, w)[0]
