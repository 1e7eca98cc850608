"""Symmetric groups as Coxeter systems, Demazure products and subword
complexes.

Permutations are one-line tuples over 1..m. Words are tuples of letters
i in 1..m-1 standing for s_i = (i, i+1), multiplied left to right as
functions composed right to left: the word (a, b) is s_a s_b. With that
convention w * s_i swaps positions i and i+1 of w's one-line form.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from math import comb

from .errors import ContainmentError, InputError, InvariantViolation, UnsupportedError
from .ideal import MonomialIdeal, height, minimalize
from .linquot import QuotientCertificate, QuotientFailure, check_order
from .monomial import Monomial
from .simplicial import SimplicialComplex

MAX_M = 7
MAX_WORD = 14


# ---- permutations -----------------------------------------------------------

def identity(m: int) -> tuple:
    return tuple(range(1, m + 1))


def check_perm(p) -> tuple:
    p = tuple(p)
    if sorted(p) != list(range(1, len(p) + 1)):
        raise InputError(f"{p} is not a permutation")
    return p


def length(p) -> int:
    """Inversion count."""
    return sum(1 for i in range(len(p)) for j in range(i + 1, len(p)) if p[i] > p[j])


def compose(a, b) -> tuple:
    """(a b)(x) = a(b(x))."""
    return tuple(a[x - 1] for x in b)


def inverse(p) -> tuple:
    out = [0] * len(p)
    for i, x in enumerate(p, start=1):
        out[x - 1] = i
    return tuple(out)


def times_s(p, i) -> tuple:
    """p * s_i."""
    q = list(p)
    q[i - 1], q[i] = q[i], q[i - 1]
    return tuple(q)


def s_times(i, p) -> tuple:
    """s_i * p: swap the values i and i+1."""
    return tuple(i + 1 if x == i else i if x == i + 1 else x for x in p)


def right_descents(p) -> list:
    return [i for i in range(1, len(p)) if p[i - 1] > p[i]]


def word_product(m: int, word) -> tuple:
    p = identity(m)
    for i in word:
        p = times_s(p, i)
    return p


def is_reduced(m: int, word) -> bool:
    return length(word_product(m, word)) == len(word)


def reduced_words(p) -> list:
    """All reduced words, by peeling right descents. Sorted."""
    p = tuple(p)
    return sorted(_reduced_words(p))


@lru_cache(maxsize=4096)
def _reduced_words(p) -> frozenset:
    ds = right_descents(p)
    if not ds:
        return frozenset([()])
    out = set()
    for i in ds:
        for w in _reduced_words(times_s(p, i)):
            out.add(w + (i,))
    return frozenset(out)


def one_reduced_word(p) -> tuple:
    p = tuple(p)
    out = []
    while True:
        ds = right_descents(p)
        if not ds:
            return tuple(reversed(out))
        p = times_s(p, ds[0])
        out.append(ds[0])


def parse_cycles(text: str, m: int) -> tuple:
    """'(1,2,4)', '(1 2 4)', '(14)(23)' -> one-line. Cycle (a b c) sends
    a -> b -> c -> a."""
    t = text.strip()
    if t.startswith("cycle:"):
        t = t[6:].strip()
    if t in ("", "()", "1", "id"):
        return identity(m)
    groups = re.findall(r"\(([^()]*)\)", t)
    if not groups or re.sub(r"\([^()]*\)", "", t).strip():
        raise InputError(f"cannot parse cycle notation {text!r}")
    img = list(range(1, m + 1))
    seen = set()
    for g in groups:
        g = g.strip()
        if "," in g or " " in g:
            parts = [x for x in re.split(r"[,\s]+", g) if x]
        else:
            parts = list(g)  # single-digit shorthand, e.g. (14)
        try:
            cyc = [int(x) for x in parts]
        except ValueError:
            raise InputError(f"bad cycle entry in {text!r}") from None
        for x in cyc:
            if not 1 <= x <= m:
                raise InputError(f"cycle entry {x} outside 1..{m}")
            if x in seen:
                raise InputError(f"{x} appears in two cycles")
            seen.add(x)
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            img[a - 1] = b
    return tuple(img)


def parse_perm(text: str, m: int) -> tuple:
    t = text.strip()
    if t.startswith("oneline:"):
        try:
            p = tuple(int(x) for x in re.split(r"[,\s]+", t[8:].strip()) if x)
        except ValueError:
            raise InputError(f"bad one-line permutation {text!r}") from None
        if len(p) != m:
            raise InputError(f"one-line permutation must have {m} entries")
        return check_perm(p)
    return parse_cycles(t, m)


def cycle_string(p) -> str:
    seen = set()
    out = []
    for a in range(1, len(p) + 1):
        if a in seen or p[a - 1] == a:
            continue
        cyc = [a]
        seen.add(a)
        b = p[a - 1]
        while b != a:
            cyc.append(b)
            seen.add(b)
            b = p[b - 1]
        out.append("(" + ",".join(map(str, cyc)) + ")")
    return "".join(out) or "()"


def parse_word(text, m: int) -> tuple:
    if isinstance(text, str):
        parts = [x for x in re.split(r"[,\s]+", text.strip()) if x]
        try:
            word = tuple(int(x.lstrip("s")) for x in parts)
        except ValueError:
            raise InputError(f"bad word {text!r}") from None
    else:
        word = tuple(text)
    for i in word:
        if not 1 <= i < m:
            raise InputError(f"letter s{i} is not a simple reflection of S{m}")
    return word


# ---- Demazure product, Bruhat order ------------------------------------------

def demazure_product(m: int, word) -> tuple:
    """Fold: e_p e_s = e_{ps} if the length goes up, e_p otherwise."""
    p = identity(m)
    for i in word:
        if p[i - 1] < p[i]:
            p = times_s(p, i)
    return p


def representing_subwords(m: int, word, pi) -> list:
    """Position sets P (1-based, sorted) such that word restricted to P is a
    reduced word for pi."""
    word = tuple(word)
    pi = tuple(pi)
    L = length(pi)
    n = len(word)
    out = []

    @lru_cache(maxsize=None)
    def feasible(pos, w, k):
        # can positions pos.. extend the reduced prefix w (length k) to pi?
        if k == L:
            return w == pi
        if n - pos < L - k:
            return False
        for t in range(pos, n):
            i = word[t]
            if w[i - 1] < w[i]:
                w2 = times_s(w, i)
                if length(compose(inverse(w2), pi)) == L - k - 1 and feasible(t + 1, w2, k + 1):
                    return True
        return False

    def rec(pos, w, k, chosen):
        if k == L:
            if w == pi:
                out.append(tuple(chosen))
            return
        for t in range(pos, n):
            i = word[t]
            if w[i - 1] < w[i]:
                w2 = times_s(w, i)
                if length(compose(inverse(w2), pi)) == L - k - 1 and feasible(t + 1, w2, k + 1):
                    chosen.append(t + 1)
                    rec(t + 1, w2, k + 1, chosen)
                    chosen.pop()

    if feasible(0, identity(m), 0):
        rec(0, identity(m), 0, [])
    return sorted(out)


def contains(m: int, word, pi) -> bool:
    return bool(representing_subwords(m, word, pi))


def bruhat_leq(a, b) -> bool:
    """a <= b via the subword property on one fixed reduced word of b."""
    return contains(len(b), one_reduced_word(b), a)


def bruhat_leq_tableau(a, b) -> bool:
    """Tableau criterion, independent of words: sorted prefixes compare."""
    m = len(a)
    for k in range(1, m):
        if any(x > y for x, y in zip(sorted(a[:k]), sorted(b[:k]))):
            return False
    return True


# ---- subword complexes --------------------------------------------------------

@dataclass
class SubwordReport:
    m: int
    word: tuple
    pi: tuple
    subwords: list          # representing position sets, lex-descending x_P
    complex: SimplicialComplex | None
    empty: bool = False     # Q does not contain pi
    flags: list = field(default_factory=list)

    @property
    def n(self):
        return len(self.word)

    @property
    def ell(self):
        return length(self.pi)

    @property
    def r(self):
        return len(self.subwords)

    def facets(self) -> list:
        full = set(range(1, self.n + 1))
        return [sorted(full - set(P)) for P in self.subwords]

    def dual_gens(self) -> list:
        return [Monomial.from_support(self.n, P) for P in self.subwords]

    def dual_ideal(self) -> MonomialIdeal | None:
        if self.empty or self.ell == 0:
            return None
        return MonomialIdeal(self.n, tuple(self.dual_gens()))

    def to_json(self) -> dict:
        return {
            "m": self.m, "word": list(self.word), "pi": list(self.pi),
            "pi_cycles": cycle_string(self.pi), "length": self.ell,
            "subwords": [list(P) for P in self.subwords],
            "facets": self.facets(),
            "dual_generators": [str(g) for g in self.dual_gens()],
            "empty": self.empty, "flags": list(self.flags),
        }


def _guard(m, word):
    if m > MAX_M:
        raise UnsupportedError(f"symmetric group size {m} exceeds guard {MAX_M}")
    if len(word) > MAX_WORD:
        raise UnsupportedError(f"word of size {len(word)} exceeds guard {MAX_WORD}")


def subword_complex(m: int, word, pi) -> SubwordReport:
    word = parse_word(word, m)
    pi = check_perm(pi)
    if len(pi) != m:
        raise InputError(f"permutation must live in S{m}")
    _guard(m, word)
    subs = representing_subwords(m, word, pi)
    n = len(word)
    # x_P descending in lex = exponent tuples descending
    subs.sort(key=lambda P: Monomial.from_support(n, P).exps, reverse=True)
    flags = []
    if not subs:
        flags.append("word does not contain pi: empty complex, dual ideal would be the unit ideal")
        return SubwordReport(m, word, pi, [], None, True, flags)
    full = frozenset(range(1, n + 1))
    D = SimplicialComplex.make(n, [full - set(P) for P in subs])
    if len(subs[0]) == n:
        flags.append("word is a reduced word of pi: the complex is {emptyset}")
    if length(pi) == 0:
        flags.append("pi is the identity: the complex is the full simplex")
    return SubwordReport(m, word, pi, subs, D, False, flags)


@dataclass
class DualQuotients:
    certificate: QuotientCertificate
    sets_formula: list     # {min(P_j - P_i) : j < i}
    shelling: list         # facets in certificate order
    d: list

    def to_json(self):
        return {"order": [str(u) for u in self.certificate.order],
                "sets": [sorted(s) for s in self.certificate.sets],
                "shelling": [sorted(f) for f in self.shelling], "d": self.d}


def dual_quotients(rep: SubwordReport) -> DualQuotients:
    if rep.empty:
        raise ContainmentError("word does not contain pi")
    if rep.ell == 0:
        raise UnsupportedError("pi is the identity: the dual ideal is the unit ideal")
    I = rep.dual_ideal()
    res = check_order(I, I.gens)
    if isinstance(res, QuotientFailure):
        raise InvariantViolation(f"lex order fails linear quotients at position {res.i}")
    P = [set(p) for p in rep.subwords]
    formula = [frozenset(min(P[j] - P[i]) for j in range(i)) for i in range(len(P))]
    if list(res.sets) != formula:
        raise InvariantViolation("quotient sets disagree with the min(P_j - P_i) formula")
    full = set(range(1, rep.n + 1))
    shelling = [frozenset(full - p) for p in P]
    return DualQuotients(res, formula, shelling, [len(s) for s in res.sets])


@dataclass
class Bounds:
    projdim_dual: int
    projdim_bound: int
    reg_sr_bound: int
    projdim_sr_ring: int

    def to_json(self):
        return dict(self.__dict__)


def bounds_report(rep: SubwordReport, dq: DualQuotients | None = None) -> Bounds:
    dq = dq or dual_quotients(rep)
    pd = max(dq.d)
    bound = rep.n - rep.ell
    if pd > bound:
        raise InvariantViolation(f"projdim {pd} exceeds n - l(pi) = {bound}")
    return Bounds(pd, bound, bound + 1, rep.ell)


def sphere_or_ball(m: int, word, pi) -> str:
    word = parse_word(word, m)
    if not contains(m, word, pi):
        raise ContainmentError("word does not contain pi")
    return "sphere" if demazure_product(m, word) == tuple(pi) else "ball"


# ---- K-polynomial -------------------------------------------------------------

def kpoly_bruteforce(m: int, word, pi) -> dict:
    """Coarse K-polynomial of the dual ideal: sum over subsets P with
    delta(P) = pi of (-1)^(|P| - l(pi)) t^|P|. Returns {degree: coeff}."""
    word = tuple(word)
    pi = tuple(pi)
    L = length(pi)
    out = {}
    n = len(word)
    for k in range(L, n + 1):
        for P in combinations(range(n), k):
            if demazure_product(m, [word[i] for i in P]) == pi:
                out[k] = out.get(k, 0) + (-1) ** (k - L)
    return {k: v for k, v in out.items() if v}


def kpoly_fine_bruteforce(m: int, word, pi) -> dict:
    """Fine-graded version: {exponent tuple: coeff}."""
    word = tuple(word)
    pi = tuple(pi)
    L = length(pi)
    n = len(word)
    out = {}
    for k in range(L, n + 1):
        for P in combinations(range(n), k):
            if demazure_product(m, [word[i] for i in P]) == pi:
                e = tuple(1 if i in P else 0 for i in range(n))
                out[e] = out.get(e, 0) + (-1) ** (k - L)
    return out


def subword_counts(m: int, word, pi) -> dict:
    """|P| -> number of subsets P with delta(P) = pi."""
    word = tuple(word)
    n = len(word)
    out = {}
    for k in range(length(pi), n + 1):
        c = sum(1 for P in combinations(range(n), k)
                if demazure_product(m, [word[i] for i in P]) == tuple(pi))
        if c:
            out[k] = c
    return out


# ---- the special class d_r = r - 1 ---------------------------------------------

@dataclass
class SpecialClass:
    r: int
    d: list
    l: int | None
    mins: list                 # min(P_j - P_r), j < r
    height: int | None
    betti: dict                # i -> C(r, i+1)
    kpoly: dict                # degree -> coeff (closed form)
    kpoly_bruteforce: dict
    kpoly_agree: bool
    counts_ok: bool
    sphere: bool
    sphere_by_count: bool
    ci_generators: list        # minimal generators of I_Delta in complete-intersection form
    ci_matches_sr: bool
    flags: list = field(default_factory=list)

    def to_json(self):
        out = dict(self.__dict__)
        out["betti"] = {str(k): v for k, v in self.betti.items()}
        out["kpoly"] = {str(k): v for k, v in sorted(self.kpoly.items())}
        out["kpoly_bruteforce"] = {str(k): v for k, v in sorted(self.kpoly_bruteforce.items())}
        out["ci_generators"] = [str(g) for g in self.ci_generators]
        return out


def special_class_analysis(rep: SubwordReport, dq: DualQuotients | None = None):
    """None unless r <= n - l(pi) + 1 and d_r = r - 1."""
    if rep.empty or rep.ell == 0:
        return None
    dq = dq or dual_quotients(rep)
    r, n, L = rep.r, rep.n, rep.ell
    d = dq.d
    if not (r <= n - L + 1 and d[-1] == r - 1):
        return None
    flags = []
    if any(d[j] != j for j in range(r)):
        raise InvariantViolation("d_r = r - 1 but some earlier d_j != j - 1")
    gens = rep.dual_gens()
    Pr = set(rep.subwords[-1])
    mins = [min(set(rep.subwords[j]) - Pr) for j in range(r - 1)]
    xr = gens[-1]
    if r == 1:
        l = None
        flags.append("single generator: l is not unique")
    else:
        ls = [t for t in sorted(Pr)
              if all(gens[j] == xr.times_var(mins[j]).div_var(t) for j in range(r - 1))]
        if len(ls) != 1:
            raise InvariantViolation(f"expected a unique l, found {ls}")
        l = ls[0]
    I = rep.dual_ideal()
    ht = height(I)
    if L >= 2 and ht != 1:
        raise InvariantViolation(f"height of the dual ideal is {ht}, expected 1")
    if L < 2:
        flags.append(f"l(pi) = {L}: the cofactor x_P/x_l is trivial, height is {ht}")
    betti = {i: comb(r, i + 1) for i in range(r)}
    kp = {i + L: (-1) ** i * comb(r, i + 1) for i in range(r)}
    kb = kpoly_bruteforce(rep.m, rep.word, rep.pi)
    counts = subword_counts(rep.m, rep.word, rep.pi)
    counts_ok = counts == {j + L: comb(r, j + 1) for j in range(r)}
    sphere = demazure_product(rep.m, rep.word) == rep.pi
    # complete-intersection form of I_Delta
    if l is None:
        ci = [Monomial.var(n, k) for k in sorted(Pr)]
    else:
        ci = [Monomial.from_support(n, mins + [l])] + [Monomial.var(n, k) for k in sorted(Pr - {l})]
    from .simplicial import sr_ideal
    sr = sr_ideal(rep.complex)
    ci_ok = sr is not None and minimalize(ci, n) == sr
    return SpecialClass(r, d, l, mins, ht, betti, kp, kb, kp == kb, counts_ok,
                        sphere, r == n - L + 1, ci, ci_ok, flags)


def repeated_letter_word(reduced, i: int, k: int) -> tuple:
    """(s_1, ..., s_{i-1}, s_i repeated k times, s_{i+1}, ...)."""
    reduced = tuple(reduced)
    if not 1 <= i <= len(reduced) or k < 1:
        raise InputError("need 1 <= i <= len(word) and k >= 1")
    return reduced[:i - 1] + (reduced[i - 1],) * k + reduced[i:]


@dataclass
class SubwordAnalysis:
    report: SubwordReport
    quotients: DualQuotients | None
    bounds: Bounds | None
    special: SpecialClass | None
    sphere: str | None

    def to_json(self):
        out = self.report.to_json()
        out["quotients"] = self.quotients.to_json() if self.quotients else None
        out["bounds"] = self.bounds.to_json() if self.bounds else None
        out["special_class"] = self.special.to_json() if self.special else None
        out["sphere_or_ball"] = self.sphere
        return out


def analyze(m: int, word, pi) -> SubwordAnalysis:
    rep = subword_complex(m, word, pi)
    if rep.empty:
        return SubwordAnalysis(rep, None, None, None, None)
    sphere = "sphere" if demazure_product(m, rep.word) == rep.pi else "ball"
    if rep.ell == 0:
        return SubwordAnalysis(rep, None, None, None, sphere)
    dq = dual_quotients(rep)
    return SubwordAnalysis(rep, dq, bounds_report(rep, dq), special_class_analysis(rep, dq), sphere)
