"""Kernel selection.

The compiled module is used when it imports; set MONOMIALX_PURE=1 to force
the Python versions (handy for debugging and for the benchmark).
"""
import os

from . import _pykernels

BACKEND = "python"
rank_modp = _pykernels.rank_modp
lq_feasible = _pykernels.lq_feasible

if os.environ.get("MONOMIALX_PURE", "") not in ("1", "true", "yes"):
    try:
        from . import _ckernels
    except ImportError:
        _ckernels = None
    if _ckernels is not None:
        rank_modp = _ckernels.rank_modp
        lq_feasible = _ckernels.lq_feasible
        BACKEND = "cython"


def rank_q(columns):
    """Exact rank over Q. Columns are lists of (row, int value).

    Fraction-free elimination: scale the column being reduced instead of
    dividing, then strip the content to keep the numbers small.
    """
    from math import gcd
    pivots = {}
    rank = 0
    for col in columns:
        c = {}
        for r, v in col:
            if v:
                c[r] = c.get(r, 0) + v
                if not c[r]:
                    del c[r]
        while c:
            low = max(c)
            piv = pivots.get(low)
            if piv is None:
                pivots[low] = c
                rank += 1
                break
            a, b = piv[low], c[low]
            new = {}
            for r in set(c) | set(piv):
                w = a * c.get(r, 0) - b * piv.get(r, 0)
                if w:
                    new[r] = w
            g = 0
            for w in new.values():
                g = gcd(g, w)
                if g == 1:
                    break
            if g > 1:
                new = {r: w // g for r, w in new.items()}
            c = new
    return rank


def rank(columns, char=0):
    """Rank over Q (char 0) or F_p."""
    if char == 0:
        return rank_q(columns)
    return rank_modp(columns, char)
