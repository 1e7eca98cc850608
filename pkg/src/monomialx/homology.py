"""Reduced simplicial homology ranks from a list of faces."""
from __future__ import annotations

from .kernels import rank


def faces_by_dim(faces):
    by = {}
    for f in faces:
        by.setdefault(len(f) - 1, []).append(tuple(sorted(f)))
    for k in by:
        by[k].sort()
    return by


def boundary_columns(by, k):
    """Columns of the boundary map C_k -> C_{k-1}, as (row, +-1) lists."""
    rows = {f: r for r, f in enumerate(by.get(k - 1, []))}
    cols = []
    for f in by.get(k, []):
        col = []
        for t in range(len(f)):
            g = f[:t] + f[t + 1:]
            col.append((rows[g], -1 if t % 2 else 1))
        cols.append(col)
    return cols


def reduced_homology(faces, char=0) -> dict:
    """{k: dim H~_k} for k = -1 .. top dimension.

    `faces` must be closed under taking subsets. The void complex (no
    faces at all) has no homology; {emptyset} has H~_{-1} = 1.
    """
    faces = list(faces)
    if not faces:
        return {}
    by = faces_by_dim(faces)
    top = max(by)
    ranks = {}
    for k in range(0, top + 1):
        ranks[k] = rank(boundary_columns(by, k), char) if by.get(k) else 0
    ranks[top + 1] = 0
    out = {}
    for k in range(-1, top + 1):
        nk = len(by.get(k, []))
        out[k] = nk - ranks.get(k, 0) - ranks.get(k + 1, 0)
    return out
