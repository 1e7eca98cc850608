"""Family sweeps comparing closed-form answers against the oracle.

Each sweep returns a SweepResult; mismatches are kept (first few) so a
report can show them. Random families take an explicit seed.
"""
from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations, permutations

from .betti import betti_numbers
from .errors import BudgetError, InvariantViolation
from .ideal import MonomialIdeal, krull_dim
from .lexseg import (build_segment, classify, depth_formula, is_cohen_macaulay,
                     is_completely_bruteforce, krull_dim_formula, quotient_order)
from .kernels import lq_feasible
from .linquot import _masks, betti_from_certificate, find_order
from .monomial import Monomial, monomials_desc
from .simplicial import (SimplicialComplex, eagon_reiner_check, is_cohen_macaulay as cm_complex,
                         is_shellable, is_shifted, is_vertex_decomposable)

KEEP = 25


@dataclass
class SweepResult:
    name: str
    checked: int = 0
    failures: list = field(default_factory=list)
    counts: dict = field(default_factory=dict)
    nfail: int = 0

    @property
    def ok(self):
        return self.nfail == 0

    def fail(self, item):
        self.nfail += 1
        if len(self.failures) < KEEP:
            self.failures.append(item)

    def bump(self, key):
        self.counts[key] = self.counts.get(key, 0) + 1

    def to_json(self):
        return {"name": self.name, "checked": self.checked, "failures": self.nfail,
                "examples": self.failures, "counts": dict(sorted(self.counts.items()))}


# ---- lexsegments ------------------------------------------------------------------

def check_lexsegment(seg, char: int = 32003) -> list:
    """Mismatches between the formulas and the oracle for one segment."""
    I = seg.ideal
    ob = betti_numbers(I, char)
    errs = []
    if seg.d >= 2:
        c = classify(seg)
        if c.completely != is_completely_bruteforce(seg):
            errs.append(["completely", c.completely])
        if c.linear_resolution != ob.linear:
            errs.append(["linear", c.linear_resolution, c.linear_tag])
        if c.linear_resolution:
            try:
                quotient_order(seg, c)
            except InvariantViolation as e:
                errs.append(["order", str(e)])
    kd = krull_dim(I)
    dm = krull_dim_formula(seg).value
    if dm != kd:
        errs.append(["dim", dm, kd])
    odp = seg.n - (ob.projdim + 1)
    dp = depth_formula(seg)
    if dp.value != odp:
        errs.append(["depth", dp.value, dp.tag, odp])
    cm = is_cohen_macaulay(seg)
    if cm.cohen_macaulay != (kd == odp):
        errs.append(["cm", cm.case])
    return errs


def lexsegment_sweep(max_n: int = 5, max_d: int = 3, char: int = 32003, min_n: int = 2) -> SweepResult:
    res = SweepResult(f"lexsegment n<={max_n} d<={max_d}")
    for n in range(min_n, max_n + 1):
        for d in range(1, max_d + 1):
            M = monomials_desc(n, d)
            for a in range(len(M)):
                for b in range(a, len(M)):
                    seg = build_segment(n, d, M[a], M[b])
                    res.checked += 1
                    errs = check_lexsegment(seg, char)
                    if errs:
                        res.fail({"segment": str(seg), "errors": errs})
    return res


# ---- quotient Betti numbers --------------------------------------------------------

def _permuted_index(M, n):
    """For every permutation of the variables, the induced map on indices of M."""
    pos = {m.exps: k for k, m in enumerate(M)}
    out = []
    for p in permutations(range(n)):
        out.append([pos[tuple(m.exps[p[t]] for t in range(n))] for m in M])
    return out


def quotient_betti_sweep(max_n: int = 4, max_d: int = 4, max_gens: int = 6,
                         orbits: bool = True) -> SweepResult:
    """Every set of at most max_gens degree-d monomials in n <= max_n variables.

    The subset DP decides linear quotients for each set. For sets that have
    them, the Betti table read off the quotient sizes is compared with the
    Taylor oracle. Both sides commute with renaming variables, so with
    orbits=True the oracle only runs on the smallest set of each orbit.
    """
    from .betti import betti_numbers
    res = SweepResult(f"quotient betti n<={max_n} d<={max_d} gens<={max_gens}")
    for n in range(1, max_n + 1):
        for d in range(1, max_d + 1):
            M = monomials_desc(n, d)
            K = len(M)
            supp, lin = _masks(M)
            perms = _permuted_index(M, n)
            for m in range(1, min(max_gens, K) + 1):
                for S in combinations(range(K), m):
                    res.checked += 1
                    sp = [supp[a * K + b] for a in S for b in S]
                    ln = [lin[a * K + b] for a in S for b in S]
                    if not lq_feasible(m, sp, ln):
                        continue
                    res.bump("linear quotients")
                    if orbits and any(tuple(sorted(P[a] for a in S)) < S for P in perms):
                        continue
                    res.bump("oracle checked")
                    I = MonomialIdeal.make([M[a] for a in S], n)
                    fr = find_order(I)
                    if not fr.found:
                        res.fail({"ideal": I.to_json(), "error": "search disagrees with subset DP"})
                        continue
                    want = betti_numbers(I, 0, "taylor").table
                    got = betti_from_certificate(fr.certificate)
                    if got != want:
                        res.fail({"ideal": I.to_json(), "formula": got.to_json(), "oracle": want.to_json()})
    return res


# ---- random complexes ---------------------------------------------------------------

def random_pure_complex(rng: random.Random, max_n: int = 6) -> SimplicialComplex:
    """Pure complex on at most max_n vertices; facet size and count are
    spread so that both CM and non-CM outcomes are common."""
    n = rng.randint(3, max(3, max_n))
    k = rng.randint(2, n - 1)
    pool = list(combinations(range(1, n + 1), k))
    m = rng.randint(2, min(len(pool), 10))
    return SimplicialComplex.make(n, rng.sample(pool, m))


def random_complexes(count: int, seed: int = 0, max_n: int = 6) -> list:
    rng = random.Random(seed)
    return [random_pure_complex(rng, max_n) for _ in range(count)]


def _pmap(fn, items, threads):
    """Ordered map; process pool when threads > 1 (results stay deterministic)."""
    if threads <= 1:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=threads) as ex:
        return list(ex.map(fn, items, chunksize=8))


def _er_one(job):
    D, char = job
    return eagon_reiner_check(D, char)


def eagon_reiner_sweep(complexes, char: int = 0, threads: int = 1) -> SweepResult:
    res = SweepResult("eagon-reiner")
    reps = _pmap(_er_one, [(D, char) for D in complexes], threads)
    for D, rep in zip(complexes, reps):
        res.checked += 1
        res.bump("cm" if rep.cohen_macaulay else "not-cm")
        if not rep.agree or rep.terai_ok is False:
            res.fail({"complex": D.to_json(), "report": rep.to_json()})
    return res


def hierarchy_sweep(complexes, char: int = 0) -> SweepResult:
    """shifted => vertex-decomposable => shellable => Cohen-Macaulay."""
    res = SweepResult("hierarchy")
    for D in complexes:
        res.checked += 1
        try:
            sh = is_shifted(D) is not None
        except BudgetError:
            sh = None
        vd = is_vertex_decomposable(D)
        sr = is_shellable(D)
        if sr.status == "unknown":
            res.bump("unknown")
            continue
        cm = bool(cm_complex(D, char))
        tag = ("shifted" if sh else "vd" if vd else "shellable" if sr.shellable
               else "cm" if cm else "none")
        res.bump(tag)
        if (sh and not vd) or (vd and not sr.shellable) or (sr.shellable and not cm):
            res.fail({"complex": D.to_json(), "shifted": sh, "vd": vd,
                      "shellable": sr.shellable, "cm": cm})
    return res
