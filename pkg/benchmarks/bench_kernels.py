"""Compare the compiled and pure-Python kernels.

    python3 benchmarks/bench_kernels.py [--repeat N] [--quick]

Both backends are imported directly, so the MONOMIALX_PURE switch does not
matter here. Every case also checks that the two backends agree.
"""
import argparse
import random
import time

from monomialx import _pykernels
from monomialx.linquot import _masks
from monomialx.lexseg import segment

try:
    from monomialx import _ckernels
except ImportError:
    _ckernels = None


def sparse_matrix(rng, rows, cols, per_col, p):
    return [[(rng.randrange(rows), rng.randrange(1, p)) for _ in range(per_col)] for _ in range(cols)]


def boundary_like(rng, rows, cols):
    # columns with a few +-1 entries, like simplicial boundary matrices
    return [[(r, rng.choice((1, -1))) for r in rng.sample(range(rows), 3)] for _ in range(cols)]


def best_of(fn, repeat):
    best = float("inf")
    out = None
    for _ in range(repeat):
        t = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t)
    return best, out


def rank_cases(quick):
    rng = random.Random(1)
    sizes = [(100, 100), (300, 300)] if quick else [(100, 100), (300, 300), (800, 800)]
    cases = []
    for r, c in sizes:
        cases.append((f"rank_modp random {r}x{c}", sparse_matrix(rng, r, c, 6, 32003), 32003))
        cases.append((f"rank_modp boundary {r}x{c}", boundary_like(rng, r, c), 2))
    return cases


def lq_cases(quick):
    specs = [(4, "x1*x2*x3", "x2*x3^2"), (4, "x1^2*x3", "x2^2*x4"), (5, "x1*x2*x3", "x2^2*x5")]
    if not quick:
        specs.append((5, "x1*x3^2", "x2^2*x5"))
    out = []
    for n, u, v in specs:
        seg = segment(n, u, v)
        gens = seg.gens[:16]
        supp, lin = _masks(gens)
        out.append((f"lq_feasible k={len(gens)} L({u},{v})", len(gens), supp, lin))
    return out


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--quick", action="store_true")
    a = ap.parse_args()
    if _ckernels is None:
        print("compiled kernels not available; only the Python backend can be timed")
    print(f"{'case':45s} {'python s':>10s} {'cython s':>10s} {'speedup':>8s}")
    for name, M, p in rank_cases(a.quick):
        tp, rp = best_of(lambda: _pykernels.rank_modp(M, p), a.repeat)
        row = f"{name:45s} {tp:10.4f}"
        if _ckernels is not None:
            tc, rc = best_of(lambda: _ckernels.rank_modp(M, p), a.repeat)
            assert rc == rp, (name, rc, rp)
            row += f" {tc:10.4f} {tp / tc:7.1f}x"
        print(row)
    for name, k, supp, lin in lq_cases(a.quick):
        tp, rp = best_of(lambda: _pykernels.lq_feasible(k, supp, lin), a.repeat)
        row = f"{name:45s} {tp:10.4f}"
        if _ckernels is not None:
            tc, rc = best_of(lambda: _ckernels.lq_feasible(k, supp, lin), a.repeat)
            assert rc == rp, (name, rc, rp)
            row += f" {tc:10.4f} {tp / tc:7.1f}x"
        print(row)


if __name__ == "__main__":
    main()
