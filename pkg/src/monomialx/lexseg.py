"""Lexsegments L(u, v): generation, shadows, the completely / linear
resolution classification, the matching quotient orders, and the closed
forms for dim, depth and Cohen-Macaulayness."""
from __future__ import annotations

from dataclasses import dataclass, field

from .errors import (ClassificationError, DegreeError, DimensionError, InvariantViolation,
                     OrderError, OutOfScopeError)
from .ideal import MonomialIdeal
from .linquot import QuotientCertificate, check_order
from .monomial import (Monomial, TermOrder, format_monomial, iter_monomials_desc,
                       monomials_desc, order_key)


@dataclass(frozen=True)
class Lexsegment:
    n: int
    d: int
    u: Monomial
    v: Monomial
    gens: tuple  # descending lex

    @property
    def ideal(self) -> MonomialIdeal:
        return MonomialIdeal(self.n, self.gens)

    @property
    def a(self):
        return self.u.exps

    @property
    def b(self):
        return self.v.exps

    def is_initial(self) -> bool:
        return self.u.exps[0] == self.d

    def is_final(self) -> bool:
        return self.v.exps[-1] == self.d

    def is_whole(self) -> bool:
        return self.is_initial() and self.is_final()

    def __str__(self):
        return f"L({self.u}, {self.v}) in {self.n} vars"


def build_segment(n: int, d: int, u: Monomial, v: Monomial, guard: int = 10**6) -> Lexsegment:
    if u.n != n or v.n != n:
        raise DimensionError("u, v must live in the ring with n variables")
    if u.degree != d or v.degree != d:
        raise DegreeError(f"u and v must have degree {d}")
    if d < 1:
        raise DegreeError("lexsegments need d >= 1")
    if u.exps < v.exps:
        raise OrderError(f"{u} <lex {v}")
    gens = tuple(w for w in monomials_desc(n, d, guard) if u.exps >= w.exps >= v.exps)
    return Lexsegment(n, d, u, v, gens)


def segment(n, u: str, v: str) -> Lexsegment:
    from .monomial import parse_monomial
    uu, vv = parse_monomial(u, n), parse_monomial(v, n)
    return build_segment(n, uu.degree, uu, vv)


def initial_segment(u: Monomial) -> Lexsegment:
    n, d = u.n, u.degree
    return build_segment(n, d, Monomial((d,) + (0,) * (n - 1)), u)


def final_segment(u: Monomial) -> Lexsegment:
    n, d = u.n, u.degree
    return build_segment(n, d, u, Monomial((0,) * (n - 1) + (d,)))


# ---- shadows ----------------------------------------------------------------

def is_lexsegment(mons) -> bool:
    """Contiguous in the lex enumeration of M_k."""
    mons = set(mons)
    if not mons:
        return True
    k = {m.degree for m in mons}
    if len(k) != 1:
        return False
    hi = max(m.exps for m in mons)
    lo = min(m.exps for m in mons)
    n = next(iter(mons)).n
    count = 0
    for w in iter_monomials_desc(n, k.pop()):
        if lo <= w.exps <= hi:
            if w not in mons:
                return False
            count += 1
    return count == len(mons)


@dataclass(frozen=True)
class ShadowResult:
    mons: frozenset
    is_lexsegment: bool

    def sorted(self):
        return sorted(self.mons, key=lambda m: m.exps, reverse=True)


def shadow(mons, i: int = 1) -> ShadowResult:
    cur = set(mons)
    for _ in range(i):
        nxt = set()
        for w in cur:
            for t in range(1, w.n + 1):
                nxt.add(w.times_var(t))
        cur = nxt
    return ShadowResult(frozenset(cur), is_lexsegment(cur))


def is_completely_bruteforce(seg: Lexsegment) -> bool:
    """Persistence: completely iff the first shadow is a lexsegment."""
    return shadow(seg.gens, 1).is_lexsegment


# ---- classification ---------------------------------------------------------

@dataclass
class LexClassification:
    completely: bool
    completely_tag: str | None
    linear_resolution: bool
    linear_tag: str | None
    notes: list = field(default_factory=list)

    def to_json(self):
        return {
            "completely": self.completely,
            "completely_tag": self.completely_tag,
            "linear_resolution": self.linear_resolution,
            "linear_tag": self.linear_tag,
            "notes": list(self.notes),
        }


def _x1_power_pair(seg: Lexsegment):
    """u = x1^p x2^(d-p), v = x1^p xn^(d-p), 0 < p <= d."""
    n, d = seg.n, seg.d
    p = seg.a[0]
    if p == 0:
        return False
    u_ok = seg.a[0] + (seg.a[1] if n > 1 else 0) == d
    v_ok = seg.b[0] == p and seg.b[-1] == d - p
    return u_ok and v_ok


def _cond_b(seg: Lexsegment) -> bool:
    # for every w <lex v some i > 1 has x_i | w and x1 w / x_i <=lex u
    if seg.a[0] == seg.b[0]:
        return False
    u = seg.u.exps
    for w in iter_monomials_desc(seg.n, seg.d):
        if w.exps >= seg.v.exps:
            continue
        ok = False
        for i in range(2, seg.n + 1):
            if w.exps[i - 1] and w.times_var(1).div_var(i).exps <= u:
                ok = True
                break
        if not ok:
            return False
    return True


def completely_status(seg: Lexsegment):
    """(bool, tag) from the characterization theorems."""
    if seg.is_final():
        # final segments: completely iff u >=lex x2^d
        x2d = Monomial((0, seg.d) + (0,) * (seg.n - 2)) if seg.n >= 2 else Monomial((seg.d,))
        return seg.u.exps >= x2d.exps, "final-segment"
    if seg.is_initial():
        return True, "initial-segment"
    if seg.a[0] == 0:
        return False, None
    if _x1_power_pair(seg):
        return True, "(a)"
    if _cond_b(seg):
        return True, "(b)"
    return False, None


def _greatest_below(seg: Lexsegment):
    prev = None
    for w in iter_monomials_desc(seg.n, seg.d):
        if w.exps < seg.v.exps:
            return w
        prev = w
    return None


def _reduce_x1(seg: Lexsegment):
    """Strip the common x1-power and then x1 itself: I = x1^c * J, J in k[x2..xn]."""
    c = seg.b[0]
    assert seg.a[0] == c
    u = Monomial(seg.u.exps[1:])
    v = Monomial(seg.v.exps[1:])
    return c, u, v


def _lift(c, mon: Monomial) -> Monomial:
    return Monomial((c,) + mon.exps)


def _noncompletely_shape(seg: Lexsegment) -> bool:
    n, d = seg.n, seg.d
    a, b = seg.a, seg.b
    if a[0] != 1:
        return False
    # v = x_l x_n^(d-1), 2 <= l < n
    l = seg.v.min
    if l is None or not 2 <= l < n:
        return False
    if b[l - 1] != 1 or b[n - 1] != d - 1:
        return False
    # u = x1 x_{l+1}^.. x_n^..
    return all(a[i - 1] == 0 for i in range(2, l + 1))


def classify(seg: Lexsegment) -> LexClassification:
    if seg.d < 2:
        raise OutOfScopeError("classification needs d >= 2")
    comp, ctag = completely_status(seg)
    notes = []
    lin, ltag = _linear(seg, comp, notes)
    return LexClassification(comp, ctag, lin, ltag, notes)


def _linear(seg: Lexsegment, comp: bool, notes: list):
    a1, b1 = seg.a[0], seg.b[0]
    if seg.u == seg.v:
        return True, "principal"
    if comp and _x1_power_pair(seg):
        return True, "(a)"
    if 0 < b1 < a1:
        # I = x1^b1 J; linearity is unchanged, and the theorems want b1 = 0
        u = Monomial((a1 - b1,) + seg.u.exps[1:])
        v = Monomial((0,) + seg.v.exps[1:])
        notes.append(f"normalized: divided by x1^{b1}")
        sub = build_segment(seg.n, seg.d - b1, u, v)
        if sub.d == 1:
            return True, "reduced:variables"
        sc, _ = completely_status(sub)
        lin, tag = _linear(sub, sc, notes)
        return lin, f"divided:{tag}"
    if a1 == b1:
        # I = x1^c J with J in fewer variables; linearity is unchanged
        c, u, v = _reduce_x1(seg)
        notes.append(f"normalized: divided by x1^{c} and dropped x1")
        d = seg.d - c
        if d == 1:
            return True, "reduced:variables"
        sub = build_segment(seg.n - 1, d, u, v)
        if sub.n == 1:
            return True, "principal"
        sc, _ = completely_status(sub)
        lin, tag = _linear(sub, sc, notes)
        return lin, f"reduced:{tag}"
    if comp:
        if b1 < a1 - 1:
            return True, "(b)"
        if b1 == a1 - 1:
            w = _greatest_below(seg)
            if w is None:
                notes.append("condition (c): v = xn^d has no smaller monomial; treated as vacuously true")
                return True, "(c)"
            if w.times_var(1).div_var(w.max).exps <= seg.u.exps:
                return True, "(c)"
        return False, None
    if _noncompletely_shape(seg):
        return True, "noncompletely"
    return False, None


# ---- quotient orders --------------------------------------------------------

def prec_order(gens) -> tuple:
    return tuple(sorted(gens, key=lambda w: order_key(w, TermOrder.PREC)))


def jk_order(gens) -> tuple:
    J = sorted((w for w in gens if w.exps[0] == 0), key=lambda w: w.exps, reverse=True)
    K = sorted((w for w in gens if w.exps[0] > 0),
               key=lambda w: order_key(w, TermOrder.LEX_REVERSED), reverse=True)
    return tuple(J + K)


def quotient_order(seg: Lexsegment, cls: LexClassification | None = None) -> QuotientCertificate:
    if cls is None:
        cls = classify(seg)
    if not cls.linear_resolution:
        raise ClassificationError(f"{seg} has no linear resolution")
    order = _order(seg)
    cert = check_order(seg.ideal, order)
    if not isinstance(cert, QuotientCertificate):
        raise InvariantViolation(f"quotient order for {seg} fails at {cert}")
    return cert


def _order(seg: Lexsegment) -> tuple:
    # mirrors the case split in _linear
    a1, b1 = seg.a[0], seg.b[0]
    if seg.u == seg.v:
        return seg.gens
    if _x1_power_pair(seg):
        return prec_order(seg.gens)
    if b1 > 0 and b1 < a1:
        u = Monomial((a1 - b1,) + seg.u.exps[1:])
        v = Monomial((0,) + seg.v.exps[1:])
        sub = build_segment(seg.n, seg.d - b1, u, v)
        sub_order = sub.gens if sub.d == 1 else _order(sub)
        return tuple(Monomial((m.exps[0] + b1,) + m.exps[1:]) for m in sub_order)
    if a1 == b1:
        c, u, v = _reduce_x1(seg)
        d = seg.d - c
        if d == 1 or seg.n == 2:
            sub_order = sorted((Monomial(w.exps[1:]) for w in seg.gens), key=lambda m: m.exps, reverse=True)
        else:
            sub_order = _order(build_segment(seg.n - 1, d, u, v))
        return tuple(_lift(c, m) for m in sub_order)
    if completely_status(seg)[0]:
        return prec_order(seg.gens)
    return jk_order(seg.gens)


# ---- dimension, depth, Cohen-Macaulay --------------------------------------

@dataclass
class FormulaResult:
    value: int
    tag: str
    notes: list = field(default_factory=list)

    def to_json(self):
        return {"value": self.value, "tag": self.tag, "notes": list(self.notes)}


def krull_dim_formula(seg: Lexsegment) -> FormulaResult:
    notes = []
    n, u, v = seg.n, seg.u, seg.v
    extra = 0
    while True:
        if u == v:
            return FormulaResult(extra + n - 1, "principal", notes)
        d = u.degree
        if u.exps[0] == d and v.exps[-1] == d:
            return FormulaResult(extra, "m^d" if not extra else "m^d+free", notes)
        if u.exps[0] == 0:
            notes.append("x1 does not occur: dim grows by one per free variable")
            u, v, n = Monomial(u.exps[1:]), Monomial(v.exps[1:]), n - 1
            extra += 1
            continue
        break
    q = v.min
    if q < n:
        return FormulaResult(extra + n - q, "q<n", notes)
    return FormulaResult(extra + 1, "q=n", notes)


def normalize(seg: Lexsegment):
    """Reduce to a1 > 0 = b1. Returns (n, u, v, free_vars, notes) or a
    principal marker when u = v."""
    notes = []
    n, u, v = seg.n, seg.u, seg.v
    free = 0
    while True:
        if u == v:
            return n, u, v, free, notes
        b1 = v.exps[0]
        if b1:
            e = list(u.exps)
            e[0] -= b1
            f = list(v.exps)
            f[0] = 0
            u, v = Monomial(tuple(e)), Monomial(tuple(f))
            notes.append(f"divided by x1^{b1}")
        if u.exps[0] == 0:
            u, v, n = Monomial(u.exps[1:]), Monomial(v.exps[1:]), n - 1
            free += 1
            notes.append("dropped x1 (not in the support)")
            continue
        return n, u, v, free, notes


def depth_formula(seg: Lexsegment) -> FormulaResult:
    n, u, v, free, notes = normalize(seg)
    if u == v:
        return FormulaResult(seg.n - 1, "principal", notes)
    d = u.degree
    if d == 1:
        # (x1, ..., x_q)
        return FormulaResult(free + n - v.min, "linear-forms", notes)
    xnu = u.times_var(n).div_var(1)
    if xnu.exps >= v.exps:
        return FormulaResult(free, "zero", notes)
    # here u = x1 x_l^.. with l >= 2
    l = Monomial(u.exps[1:]).min + 1
    x2d = (0, d) + (0,) * (n - 2)
    if v.exps == x2d and l >= 4:
        return FormulaResult(free + l - 2, "(a)", notes)
    if n >= 2 and v.exps[1] == d - 1:
        j = Monomial((0, 0) + v.exps[2:]).min
        if j is not None and 3 <= j <= n - 2 and l >= j + 2:
            return FormulaResult(free + l - j, "(b)", notes)
    return FormulaResult(free + 1, "(c)", notes)


def projdim_formula(seg: Lexsegment) -> int:
    """projdim S/I."""
    return seg.n - depth_formula(seg).value


@dataclass
class CMResult:
    cohen_macaulay: bool
    case: str
    dim: int
    depth: int

    def to_json(self):
        return {"cohen_macaulay": self.cohen_macaulay, "case": self.case,
                "dim": self.dim, "depth": self.depth}


def is_cohen_macaulay(seg: Lexsegment) -> CMResult:
    dim = krull_dim_formula(seg)
    dep = depth_formula(seg)
    if seg.is_whole():
        return CMResult(True, "m^d", dim.value, dep.value)
    n, d = seg.n, seg.d
    a1, b1 = seg.a[0], seg.b[0]
    if n >= 3 and d >= 2 and a1 > b1 and dim.value >= 1:
        u_a = (1,) + (0,) * (n - 2) + (d - 1,)
        v_a = (0, d) + (0,) * (n - 2)
        if seg.u.exps == u_a and seg.v.exps == v_a:
            case = "(a)"
        else:
            b = seg.b
            xnu = seg.u.times_var(n).div_var(1) if a1 else None
            if (all(e == 0 for e in b[:n - 2]) and b[n - 2] > 0
                    and xnu is not None and xnu.exps < seg.v.exps):
                case = "(b)"
            else:
                case = "none"
        return CMResult(case != "none", case, dim.value, dep.value)
    # outside the theorem's hypotheses: compare the two formulas
    return CMResult(dim.value == dep.value, "formula", dim.value, dep.value)


def describe(seg: Lexsegment) -> dict:
    out = {
        "n": seg.n, "d": seg.d,
        "u": format_monomial(seg.u), "v": format_monomial(seg.v),
        "gens": [format_monomial(w) for w in seg.gens],
    }
    return out
