"""Constructible ideals: certificates, bounded search, the Betti recursion
and polarization.

A certificate is a binary tree. A leaf is a principal ideal. A node splits
I = I1 + I2 with I1, I2 generated in degree q and records a certificate for
I1 cap I2, which must be generated in degree q + 1.

Since the intersection lives in degree q + 1, no generator of I can sit in
both halves, so splits are partitions of G(I) into two nonempty blocks.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import combinations

from .bettitable import BettiTable
from .errors import BudgetError, InputError, StructureError, UnsupportedError
from .ideal import MonomialIdeal, intersect, minimalize
from .linquot import find_order
from .monomial import Monomial, format_monomial, parse_monomial
from .simplicial import SimplicialComplex, shelling_search

EXHAUSTIVE_LIMIT = 12
SEARCH_BUDGET = 200_000


@dataclass(frozen=True)
class ConstructibilityCertificate:
    ideal: MonomialIdeal
    left: "ConstructibilityCertificate | None" = None
    right: "ConstructibilityCertificate | None" = None
    inter: "ConstructibilityCertificate | None" = None

    @property
    def is_leaf(self):
        return self.left is None

    @classmethod
    def leaf(cls, u: Monomial):
        return cls(MonomialIdeal(u.n, (u,)))

    @classmethod
    def node(cls, left, right, inter):
        I = minimalize(list(left.ideal.gens) + list(right.ideal.gens), left.ideal.n)
        return cls(I, left, right, inter)

    def depth(self) -> int:
        if self.is_leaf:
            return 0
        return 1 + max(self.left.depth(), self.right.depth(), self.inter.depth())

    def size(self) -> int:
        if self.is_leaf:
            return 1
        return 1 + self.left.size() + self.right.size() + self.inter.size()

    def to_json(self):
        if self.is_leaf:
            return {"leaf": format_monomial(self.ideal.gens[0])}
        return {"split": [self.left.to_json(), self.right.to_json()],
                "intersection": self.inter.to_json()}


def certificate_from_json(obj, n: int, where: str = "$") -> ConstructibilityCertificate:
    if isinstance(obj, str) and where == "$":
        try:
            obj = json.loads(obj)
        except json.JSONDecodeError as e:
            raise InputError(f"malformed JSON: {e}", field=where) from None
    if not isinstance(obj, dict):
        raise StructureError("certificate node must be an object", field=where)
    if "leaf" in obj:
        if set(obj) != {"leaf"}:
            raise StructureError("leaf node has extra keys", field=where)
        try:
            u = parse_monomial(obj["leaf"], n)
        except InputError as e:
            raise StructureError(str(e), field=f"{where}.leaf") from None
        return ConstructibilityCertificate.leaf(u)
    if set(obj) != {"split", "intersection"}:
        raise StructureError("node needs exactly 'split' and 'intersection'", field=where)
    sp = obj["split"]
    if not isinstance(sp, list) or len(sp) != 2:
        raise StructureError("'split' must have two children", field=f"{where}.split")
    a = certificate_from_json(sp[0], n, f"{where}.split[0]")
    b = certificate_from_json(sp[1], n, f"{where}.split[1]")
    c = certificate_from_json(obj["intersection"], n, f"{where}.intersection")
    return ConstructibilityCertificate.node(a, b, c)


# ---- verification ------------------------------------------------------------

@dataclass
class VerifyResult:
    valid: bool
    path: str = ""      # first failing node, e.g. "$.split[1].intersection"
    reason: str = ""

    def __bool__(self):
        return self.valid

    def to_json(self):
        out = {"valid": self.valid}
        if not self.valid:
            out.update({"path": self.path, "reason": self.reason})
        return out


def _verify(c: ConstructibilityCertificate, path: str) -> VerifyResult:
    I = c.ideal
    if c.is_leaf:
        if len(I.gens) != 1:
            return VerifyResult(False, path, "leaf is not principal")
        return VerifyResult(True)
    I1, I2 = c.left.ideal, c.right.ideal
    if not (I1.is_equigenerated() and I2.is_equigenerated()):
        return VerifyResult(False, path, "split parts are not generated in one degree")
    q = I1.gen_degree
    if I2.gen_degree != q:
        return VerifyResult(False, path, "split parts are generated in different degrees")
    if I1 == I or I2 == I:
        return VerifyResult(False, path, "split is not strict")
    J = intersect(I1, I2)
    if J != c.inter.ideal:
        return VerifyResult(False, path, "recorded intersection does not match I1 cap I2")
    if not (J.is_equigenerated() and J.gen_degree == q + 1):
        return VerifyResult(False, path, f"intersection is not generated in degree {q + 1}")
    for sub, name in ((c.left, ".split[0]"), (c.right, ".split[1]"), (c.inter, ".intersection")):
        r = _verify(sub, path + name)
        if not r:
            return r
    return VerifyResult(True)


def verify_certificate(I: MonomialIdeal, cert: ConstructibilityCertificate) -> VerifyResult:
    if cert.ideal.n != I.n:
        raise StructureError("certificate lives in a different ring")
    if cert.ideal != I:
        return VerifyResult(False, "$", "certificate does not reconstruct I")
    return _verify(cert, "$")


# ---- search --------------------------------------------------------------------

def linquot_certificate(I: MonomialIdeal, order) -> ConstructibilityCertificate:
    """Split (u1..u_{r-1}) + (u_r) along a linear-quotient order, recursively."""
    order = list(order)
    n = I.n
    cert = ConstructibilityCertificate.leaf(order[0])
    for k in range(1, len(order)):
        ur = order[k]
        prefix = MonomialIdeal(n, tuple(sorted(order[:k], key=lambda u: u.exps, reverse=True)))
        J = intersect(prefix, MonomialIdeal(n, (ur,)))
        # J = u_r * (variables), linear quotients in any order
        inter = linquot_certificate(J, J.gens)
        cert = ConstructibilityCertificate(
            minimalize(order[:k + 1], n), cert, ConstructibilityCertificate.leaf(ur), inter)
    return cert


@dataclass
class SearchResult:
    status: str  # "found" | "not-constructible" | "unknown"
    certificate: ConstructibilityCertificate | None = None
    nodes: int = 0
    via: str = ""

    @property
    def found(self):
        return self.status == "found"

    def to_json(self):
        out = {"status": self.status, "nodes": self.nodes, "via": self.via}
        if self.certificate is not None:
            out["certificate"] = self.certificate.to_json()
        return out


class _Search:
    def __init__(self, n, budget):
        self.n = n
        self.budget = budget
        self.nodes = 0
        self.memo = {}

    def tick(self):
        self.nodes += 1
        if self.nodes > self.budget:
            raise BudgetError("constructibility search budget exhausted")

    def run(self, gens):
        key = gens
        if key in self.memo:
            return self.memo[key]
        self.tick()
        I = MonomialIdeal(self.n, gens)
        if len(gens) == 1:
            res = ConstructibilityCertificate(I)
        else:
            res = None
            fo = find_order(I, budget=2000)
            if fo.status == "found":
                res = linquot_certificate(I, fo.certificate.order)
            elif linear_syzygy_graph_ok(I):
                res = self.split(I)
        self.memo[key] = res
        return res

    def quick(self, gens):
        """Certificate if the ideal is settled without splitting, else None."""
        if gens in self.memo:
            return self.memo[gens]
        if len(gens) == 1:
            return ConstructibilityCertificate(MonomialIdeal(self.n, gens))
        I = MonomialIdeal(self.n, gens)
        fo = find_order(I, budget=2000)
        if fo.status == "found":
            c = linquot_certificate(I, fo.certificate.order)
            self.memo[gens] = c
            return c
        return None

    def split(self, I):
        gens = I.gens
        q = gens[0].degree
        deferred = []
        # first pass: splits whose three parts all have linear quotients
        for left, right in ideal_splits(gens, self.tick):
            J = intersect(MonomialIdeal(self.n, left), MonomialIdeal(self.n, right))
            if not (J.is_equigenerated() and J.gen_degree == q + 1):
                continue
            parts = [self.quick(x) for x in (left, right, J.gens)]
            if all(parts):
                return ConstructibilityCertificate(I, *parts)
            deferred.append((left, right, J.gens))
        # second pass: recurse
        for left, right, jg in deferred:
            parts = []
            for x in (jg, left, right):
                c = self.run(x)
                if c is None:
                    break
                parts.append(c)
            else:
                cj, c1, c2 = parts
                return ConstructibilityCertificate(I, c1, c2, cj)
        return None


def ideal_splits(gens, tick=lambda: None):
    """Partitions (A, B) of gens, first generator in A, such that I(A) cap I(B)
    is generated in degree q + 1.

    Generators are assigned one at a time. A cross pair (a, b) whose lcm has
    degree > q + 1 needs a cross pair (a', b') of degree q + 1 with
    lcm(a', b') | lcm(a, b); both a' and b' then divide lcm(a, b), so the pair
    can be judged as soon as every generator dividing lcm(a, b) is placed."""
    r = len(gens)
    q = gens[0].degree
    lc = [[gens[i].lcm(gens[j]) for j in range(r)] for i in range(r)]
    good = [[i != j and lc[i][j].degree == q + 1 for j in range(r)] for i in range(r)]
    checks = [[] for _ in range(r)]  # index -> pairs (i, j, divisors) decided there
    for i in range(r):
        for j in range(i + 1, r):
            if good[i][j]:
                continue
            L = lc[i][j]
            divs = [k for k in range(r) if gens[k].divides(L)]
            checks[max(divs)].append((i, j, divs))
    side = [None] * r

    def ok(k):
        for i, j, divs in checks[k]:
            if side[i] == side[j]:
                # linear first syzygies inside the block: i and j joined by
                # degree q + 1 steps through generators dividing lcm(i, j)
                if not _joined(i, j, [a for a in divs if side[a] == side[i]], good):
                    return False
            elif not any(side[a] != side[b] and good[a][b] for a in divs for b in divs if a < b):
                return False
        return True

    def rec(k):
        if k == r:
            A = tuple(gens[i] for i in range(r) if side[i] == 0)
            B = tuple(gens[i] for i in range(r) if side[i] == 1)
            if B:
                yield A, B
            return
        for s in ((0,) if k == 0 else (0, 1)):
            tick()
            side[k] = s
            if ok(k):
                yield from rec(k + 1)
            side[k] = None

    yield from rec(0)


def search_constructible(I: MonomialIdeal, budget: int = SEARCH_BUDGET) -> SearchResult:
    if not I.is_equigenerated():
        raise UnsupportedError("constructibility is only defined for ideals generated in one degree")
    if I.is_principal():
        return SearchResult("found", ConstructibilityCertificate(I), 1, "leaf")
    fo = find_order(I)
    if fo.status == "found":
        return SearchResult("found", linquot_certificate(I, fo.certificate.order), 1, "linear-quotients")
    s = _Search(I.n, budget)
    try:
        cert = s.split(I)
    except BudgetError:
        return SearchResult("unknown", None, s.nodes, "budget")
    if cert is not None:
        return SearchResult("found", cert, s.nodes, "search")
    if len(I.gens) > EXHAUSTIVE_LIMIT:
        return SearchResult("unknown", None, s.nodes, "too-many-generators")
    return SearchResult("not-constructible", None, s.nodes, "exhaustive")


# ---- Betti recursion -------------------------------------------------------------

def constructible_betti(cert: ConstructibilityCertificate) -> BettiTable:
    """beta_i(I) = beta_i(I1) + beta_i(I2) + beta_{i-1}(I1 cap I2), graded."""
    if cert.is_leaf:
        t = BettiTable()
        t.add(0, cert.ideal.gens[0].degree)
        return t
    r = _verify(cert, "$")
    if not r:
        raise StructureError(f"invalid certificate at {r.path}: {r.reason}")
    t = BettiTable()
    for (i, j), v in constructible_betti(cert.left).entries.items():
        t.add(i, j, v)
    for (i, j), v in constructible_betti(cert.right).entries.items():
        t.add(i, j, v)
    for (i, j), v in constructible_betti(cert.inter).entries.items():
        t.add(i + 1, j, v)
    return t


# ---- polarization ----------------------------------------------------------------

@dataclass(frozen=True)
class Polarization:
    ideal: MonomialIdeal
    varmap: dict          # (i, j) -> variable index in the new ring, 1-based
    bound: tuple          # copies per original variable

    def monomial(self, u: Monomial) -> Monomial:
        return polarize_monomial(u, self)

    def labels(self) -> dict:
        """new index -> 'x_{i,j}' style label."""
        return {v: f"x{i}_{j}" for (i, j), v in self.varmap.items()}

    def to_json(self):
        return {"ideal": self.ideal.to_json(),
                "varmap": [[i, j, v] for (i, j), v in sorted(self.varmap.items())]}


def polarization_map(n: int, bound) -> dict:
    """(i, 1) -> i; extra copies get n+1, n+2, ... ordered by (i, j)."""
    vm = {}
    nxt = n + 1
    for i in range(1, n + 1):
        vm[(i, 1)] = i
    for i in range(1, n + 1):
        for j in range(2, bound[i - 1] + 1):
            vm[(i, j)] = nxt
            nxt += 1
    return vm


def polarize_monomial(u: Monomial, pol: Polarization) -> Monomial:
    m = max(pol.varmap.values())
    e = [0] * m
    for i, a in enumerate(u.exps, start=1):
        if a > pol.bound[i - 1]:
            raise InputError(f"{u} exceeds the polarization bound in x{i}")
        for j in range(1, a + 1):
            e[pol.varmap[(i, j)] - 1] = 1
    return Monomial(tuple(e))


def polarize(I: MonomialIdeal, extra=(), varmap=None) -> Polarization:
    """P(I) in a common extension that also covers the monomials in extra.

    varmap overrides the default naming of the copies; it must be injective
    and cover every (i, j) that occurs."""
    n = I.n
    bound = [max(1, *(g.exps[i] for g in I.gens), *(u.exps[i] for u in extra)) for i in range(n)]
    if varmap is None:
        vm = polarization_map(n, bound)
    else:
        vm = dict(varmap)
        need = {(i, j) for i in range(1, n + 1) for j in range(1, bound[i - 1] + 1)}
        if not need <= set(vm) or len(set(vm.values())) != len(vm):
            raise InputError("variable map must be injective and cover every copy")
    pol = Polarization(None, vm, tuple(bound))
    gens = [polarize_monomial(g, pol) for g in I.gens]
    m = max(vm.values())
    return Polarization(MonomialIdeal(m, tuple(sorted(gens, key=lambda u: u.exps, reverse=True))), vm, tuple(bound))


# ---- complex-level constructibility ----------------------------------------------

def _facets_key(fs):
    return tuple(sorted((tuple(sorted(f)) for f in fs)))


def is_constructible_complex(D: SimplicialComplex, budget: int = SEARCH_BUDGET):
    """True/False by direct search on facet splits, or None when out of budget.

    A simplex is constructible; otherwise split the facets into two
    constructible d-dimensional parts whose intersection is constructible of
    dimension d - 1. Shellable pieces are accepted without further splitting."""
    if not D.is_pure():
        raise UnsupportedError("constructibility is defined for pure complexes")
    n = D.n
    memo = {}
    count = [0]

    def quick(facets):
        key = _facets_key(facets)
        if key in memo:
            return memo[key]
        if len(facets) == 1:
            return True
        if shelling_search(SimplicialComplex(n, tuple(facets)), budget=300):
            memo[key] = True
            return True
        return None

    def rec(facets):
        key = _facets_key(facets)
        if key in memo:
            return memo[key]
        count[0] += 1
        if count[0] > budget:
            raise BudgetError("complex search budget exhausted")
        res = quick(facets)
        if res is None:
            res = False
            d = len(facets[0])
            deferred = []
            for A, B in _facet_splits(facets, count, budget):
                inter = _maximal_sets(a & b for a in A for b in B)
                if any(len(f) != d - 1 for f in inter):
                    continue
                if quick(inter) and quick(A) and quick(B):
                    res = True
                    break
                deferred.append((A, B, inter))
            if not res:
                for A, B, inter in deferred:
                    if rec(inter) and rec(A) and rec(B):
                        res = True
                        break
        memo[key] = res
        return res

    try:
        return rec(list(D.facets))
    except BudgetError:
        return None


def _joined(i, j, allowed, adj) -> bool:
    allowed = set(allowed)
    seen = {i}
    stack = [i]
    while stack:
        a = stack.pop()
        if a == j:
            return True
        for b in allowed:
            if b not in seen and adj[a][b]:
                seen.add(b)
                stack.append(b)
    return False


def linear_syzygy_graph_ok(I: MonomialIdeal) -> bool:
    """Necessary for a linear resolution in one degree: every pair of
    generators is joined by degree q + 1 steps through divisors of their lcm."""
    gens = I.gens
    r = len(gens)
    q = gens[0].degree
    adj = [[i != j and gens[i].lcm(gens[j]).degree == q + 1 for j in range(r)] for i in range(r)]
    for i in range(r):
        for j in range(i + 1, r):
            if adj[i][j]:
                continue
            L = gens[i].lcm(gens[j])
            if not _joined(i, j, [k for k in range(r) if gens[k].divides(L)], adj):
                return False
    return True


def _facet_splits(facets, count, budget):
    # F cap G for F in A, G in B must lie in a ridge F' cap G' (F' in A, G' in B);
    # F' and G' then contain F cap G, so decide once all such facets are placed
    facets = list(facets)
    r = len(facets)
    d = len(facets[0])
    ridge = [[i != j and len(facets[i] & facets[j]) == d - 1 for j in range(r)] for i in range(r)]
    pending = [[] for _ in range(r)]
    for i in range(r):
        for j in range(i + 1, r):
            if ridge[i][j]:
                continue
            common = facets[i] & facets[j]
            over = [k for k in range(r) if common <= facets[k]]
            pending[max(over)].append((i, j, over))
    side = [None] * r

    def rec(k):
        if k == r:
            if 1 in side:
                yield ([facets[i] for i in range(r) if side[i] == 0],
                       [facets[i] for i in range(r) if side[i] == 1])
            return
        for s in ((0,) if k == 0 else (0, 1)):
            count[0] += 1
            if count[0] > budget:
                raise BudgetError("complex search budget exhausted")
            side[k] = s
            fine = True
            for i, j, over in pending[k]:
                if side[i] == side[j]:
                    # facets over F cap G on this side must be ridge-connected
                    if not _joined(i, j, [a for a in over if side[a] == side[i]], ridge):
                        fine = False
                        break
                elif not any(side[a] != side[b] and ridge[a][b] for a in over for b in over if a < b):
                    fine = False
                    break
            if fine:
                yield from rec(k + 1)
            side[k] = None

    yield from rec(0)


def _maximal_sets(sets):
    sets = sorted(set(sets), key=len, reverse=True)
    out = []
    for s in sets:
        if not any(s <= t for t in out):
            out.append(s)
    return sorted(out, key=lambda s: (len(s), sorted(s)))
