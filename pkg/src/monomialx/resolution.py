"""Explicit graded free resolutions with monomial-entry differentials.

Layout: modules[i] is the basis of F_i, where F_0 maps onto the generators
of I. diffs[0] is the 1 x |F_0| row of generators (the augmentation to S),
and diffs[i] : F_i -> F_{i-1} for i >= 1. In the usual numbering d_k of a
complex ending in S this is d_{i+1} = diffs[i].

Basis order: generators in certificate order, sigma in colex order inside
each generator. Signs: alpha(sigma, t) = #{s in sigma : s < t}.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from math import comb

from .bettitable import BettiTable
from .errors import RegularityError, StabilityError, UnsupportedError
from .ideal import MonomialIdeal
from .linquot import QuotientCertificate, decomposition_apply, is_regular, is_stable, stable_g
from .monomial import Monomial, format_monomial


@dataclass(frozen=True)
class Label:
    sigma: tuple           # sorted, 1-based
    gen: Monomial | None   # None for Koszul labels
    degree: int

    def __str__(self):
        s = "{" + ",".join(map(str, self.sigma)) + "}"
        if self.gen is None:
            return f"e{s}"
        return f"f({s}; {format_monomial(self.gen)})"


@dataclass
class SparseMatrix:
    nrows: int
    ncols: int
    entries: list = field(default_factory=list)  # (row, col, coeff, Monomial)

    def by_col(self):
        cols = {}
        for e in self.entries:
            cols.setdefault(e[1], []).append(e)
        return cols

    def by_row(self):
        rows = {}
        for e in self.entries:
            rows.setdefault(e[0], []).append(e)
        return rows


def format_poly(terms) -> str:
    """terms: list of (coeff, Monomial). Zero prints as 0."""
    terms = [(c, m) for c, m in terms if c]
    if not terms:
        return "0"
    out = ""
    for k, (c, m) in enumerate(sorted(terms, key=lambda t: t[1].exps, reverse=True)):
        ms = format_monomial(m)
        mag = abs(c)
        body = ms if mag == 1 else (f"{mag}" if ms == "1" else f"{mag}*{ms}")
        if k == 0:
            out = ("-" if c < 0 else "") + body
        else:
            out += (" - " if c < 0 else " + ") + body
    return out


@dataclass
class GradedFreeResolution:
    n: int
    modules: list
    diffs: list
    kind: str = ""
    ideal: MonomialIdeal | None = None

    def dense(self, i) -> list:
        """diffs[i] as a list of rows of polynomial strings."""
        M = self.diffs[i]
        cells = {}
        for r, c, a, m in M.entries:
            cells.setdefault((r, c), []).append((a, m))
        return [[format_poly(cells.get((r, c), [])) for c in range(M.ncols)] for r in range(M.nrows)]

    def pretty(self, i) -> str:
        rows = self.dense(i)
        if not rows:
            return "[]"
        w = max(len(x) for row in rows for x in row)
        return "\n".join("[ " + "  ".join(f"{x:>{w}}" for x in row) + " ]" for row in rows)

    def ranks(self) -> list:
        return [len(m) for m in self.modules]

    def betti(self) -> BettiTable:
        t = BettiTable()
        for i, mod in enumerate(self.modules):
            for lab in mod:
                t.add(i, lab.degree)
        return t

    def shape(self) -> str:
        """0 -> ... -> F_1 -> F_0 -> I -> 0 with twists."""
        parts = []
        for mod in reversed(self.modules):
            degs = {}
            for lab in mod:
                degs[lab.degree] = degs.get(lab.degree, 0) + 1
            parts.append(" + ".join(f"S(-{d})" + (f"^{k}" if k > 1 else "") for d, k in sorted(degs.items())))
        return "0 -> " + " -> ".join(parts) + " -> I -> 0"

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "n": self.n,
            "modules": [[str(lab) for lab in mod] for mod in self.modules],
            "degrees": [[lab.degree for lab in mod] for mod in self.modules],
            "diffs": [
                {"rows": M.nrows, "cols": M.ncols,
                 "entries": [[r, c, a, format_monomial(m)] for r, c, a, m in M.entries]}
                for M in self.diffs
            ],
        }


def colex_subsets(elems, k) -> list:
    return sorted(combinations(sorted(elems), k), key=lambda s: s[::-1])


def _alpha(sigma, t) -> int:
    return sum(1 for s in sigma if s < t)


# ---- Koszul -----------------------------------------------------------------

def koszul(seq) -> GradedFreeResolution:
    seq = list(seq)
    if not seq:
        raise UnsupportedError("Koszul complex needs a nonempty sequence")
    n = seq[0].n
    r = len(seq)
    degs = [f.degree for f in seq]
    modules = []
    for j in range(1, r + 1):
        modules.append([Label(s, None, sum(degs[k - 1] for k in s)) for s in colex_subsets(range(1, r + 1), j)])
    diffs = [SparseMatrix(1, r, [(0, c, 1, seq[c]) for c in range(r)])]
    for j in range(2, r + 1):
        src, tgt = modules[j - 1], modules[j - 2]
        idx = {lab.sigma: k for k, lab in enumerate(tgt)}
        M = SparseMatrix(len(tgt), len(src))
        for c, lab in enumerate(src):
            for t in lab.sigma:
                sub = tuple(s for s in lab.sigma if s != t)
                sign = -1 if _alpha(lab.sigma, t) % 2 else 1
                M.entries.append((idx[sub], c, sign, seq[t - 1]))
        diffs.append(M)
    return GradedFreeResolution(n, modules, diffs, "koszul")


# ---- iterated mapping cones (and Eliahou-Kervaire) --------------------------

def _cone_complex(I, order, allowed, g, kind) -> GradedFreeResolution:
    n = I.n
    top = max((len(allowed[u]) for u in order), default=0)
    modules = []
    for i in range(top + 1):
        mod = []
        for u in order:
            for s in colex_subsets(allowed[u], i):
                mod.append(Label(s, u, i + u.degree))
        modules.append(mod)
    while modules and not modules[-1]:
        modules.pop()
    diffs = [SparseMatrix(1, len(modules[0]), [(0, c, 1, lab.gen) for c, lab in enumerate(modules[0])])]
    for i in range(1, len(modules)):
        src, tgt = modules[i], modules[i - 1]
        idx = {(lab.sigma, lab.gen): k for k, lab in enumerate(tgt)}
        M = SparseMatrix(len(tgt), len(src))
        acc = {}
        for c, lab in enumerate(src):
            u = lab.gen
            for t in lab.sigma:
                sub = tuple(s for s in lab.sigma if s != t)
                sign = -1 if _alpha(lab.sigma, t) % 2 else 1
                xt = Monomial.var(n, t)
                # -x_t f(sigma - t; u)
                key = (idx[(sub, u)], c, xt)
                acc[key] = acc.get(key, 0) - sign
                # + (x_t u / g(x_t u)) f(sigma - t; g(x_t u)), zero unless sigma - t is allowed
                w = u.times_var(t)
                v = g(w)
                if set(sub) <= allowed[v]:
                    key = (idx[(sub, v)], c, w / v)
                    acc[key] = acc.get(key, 0) + sign
        M.entries = [(r, c, a, m) for (r, c, m), a in sorted(acc.items(), key=lambda kv: (kv[0][1], kv[0][0], kv[0][2].exps)) if a]
        diffs.append(M)
    return GradedFreeResolution(n, modules, diffs, kind, I)


def ek_resolution(I: MonomialIdeal) -> GradedFreeResolution:
    if not is_stable(I):
        raise StabilityError(f"{I} is not stable")
    order = tuple(I.gens)  # descending lex
    allowed = {u: frozenset(range(1, u.max)) for u in order}
    return _cone_complex(I, order, allowed, lambda w: stable_g(I, w), "eliahou-kervaire")


def mapping_cone_resolution(cert: QuotientCertificate, check=True) -> GradedFreeResolution:
    if check:
        reg = is_regular(cert)
        if not reg:
            raise RegularityError(f"decomposition function is not regular (u={reg.u}, s={reg.s})")
    degs = [u.degree for u in cert.order]
    if any(a > b for a, b in zip(degs, degs[1:])):
        raise UnsupportedError("generators must come in weakly increasing degree")
    allowed = dict(zip(cert.order, cert.sets))
    return _cone_complex(cert.ideal, cert.order, allowed,
                         lambda w: decomposition_apply(cert, w), "mapping-cone")


# ---- verification ------------------------------------------------------------

@dataclass
class ComplexReport:
    dd_zero: bool
    minimal: bool
    degrees_ok: bool
    betti: BettiTable
    failures: list = field(default_factory=list)

    def to_json(self):
        return {"dd_zero": self.dd_zero, "minimal": self.minimal, "degrees_ok": self.degrees_ok,
                "betti": self.betti.to_json(), "failures": self.failures[:10]}


def verify_complex(R: GradedFreeResolution) -> ComplexReport:
    failures = []
    dd = True
    for i in range(1, len(R.diffs)):
        A, B = R.diffs[i - 1], R.diffs[i]
        arows = {}
        for r, c, a, m in A.entries:
            arows.setdefault(c, []).append((r, a, m))
        prod = {}
        for r, c, b, m in B.entries:
            for r2, a, m2 in arows.get(r, []):
                key = (r2, c, (m * m2).exps)
                prod[key] = prod.get(key, 0) + a * b
        bad = [k for k, v in prod.items() if v]
        if bad:
            dd = False
            failures.append(f"d{i}*d{i + 1} != 0 at row {bad[0][0]}, col {bad[0][1]}")
    minimal = all(not m.is_one() for M in R.diffs[1:] for _, _, a, m in M.entries if a)
    deg_ok = True
    for i, M in enumerate(R.diffs):
        for r, c, a, m in M.entries:
            tdeg = 0 if i == 0 else R.modules[i - 1][r].degree
            if R.modules[i][c].degree != tdeg + m.degree:
                deg_ok = False
                failures.append(f"degree mismatch in diffs[{i}] at ({r}, {c})")
                break
    return ComplexReport(dd, minimal, deg_ok, R.betti(), failures)


# ---- Hilbert series of stable ideals -------------------------------------------

@dataclass(frozen=True)
class KPolynomial:
    coeffs: tuple   # numerator, coeffs[k] is the coefficient of t^k
    denom_power: int

    def series(self, upto: int) -> list:
        """Coefficients of N(t)/(1-t)^p through t^upto."""
        p = self.denom_power
        out = []
        for k in range(upto + 1):
            s = 0
            for j, c in enumerate(self.coeffs):
                if c and j <= k:
                    s += c * (comb(k - j + p - 1, p - 1) if p > 0 else (1 if k == j else 0))
            out.append(s)
        return out

    def __str__(self):
        terms = []
        for k, c in enumerate(self.coeffs):
            if c:
                terms.append(f"{c}*t^{k}")
        return f"({' + '.join(terms) or '0'}) / (1-t)^{self.denom_power}"

    def to_json(self):
        return {"numerator": list(self.coeffs), "denominator": f"(1-t)^{self.denom_power}"}


def stable_hilbert_series(I: MonomialIdeal) -> KPolynomial:
    if not is_stable(I):
        raise StabilityError(f"{I} is not stable")
    n = I.n
    top = max(u.degree + u.max - 1 for u in I.gens)
    num = [0] * (top + 1)
    for u in I.gens:
        # t^deg(u) (1-t)^(max(u)-1)
        m = u.max - 1
        for k in range(m + 1):
            num[u.degree + k] += comb(m, k) * (-1) ** k
    while len(num) > 1 and num[-1] == 0:
        num.pop()
    return KPolynomial(tuple(num), n)
