# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
# distutils: language = c++
"""Compiled versions of the hot kernels. See _pykernels for the reference."""

from libcpp.vector cimport vector
from libcpp.utility cimport pair
from libc.stdint cimport int64_t, uint64_t


cdef int64_t _inv(int64_t a, int64_t p):
    # extended euclid, p prime
    cdef int64_t t = 0, nt = 1, r = p, nr = a % p, q, tmp
    while nr != 0:
        q = r // nr
        tmp = t - q * nt
        t = nt
        nt = tmp
        tmp = r - q * nr
        r = nr
        nr = tmp
    if t < 0:
        t += p
    return t


def rank_modp(columns, long p):
    """Rank over F_p, columns as lists of (row, value) pairs."""
    cdef int64_t P = p
    cdef int nrows = 0
    cdef int r
    for col in columns:
        for r, _ in col:
            if r + 1 > nrows:
                nrows = r + 1
    # pivot_of[row] = index into store, or -1
    cdef vector[int] pivot_of
    pivot_of.assign(nrows, -1)
    cdef vector[vector[int64_t]] store  # dense-ish reduced columns would be too big; keep sparse
    cdef vector[vector[int]] store_rows
    cdef vector[int64_t] dense
    dense.assign(nrows, 0)
    cdef vector[int] touched
    cdef vector[char] mark
    mark.assign(nrows, 0)
    cdef int rank = 0
    cdef int64_t v, f, inv, w
    cdef int low, k, idx, t, rr
    for col in columns:
        touched.clear()
        for r, pv in col:
            v = pv % P
            if v < 0:
                v += P
            if v == 0:
                continue
            if not mark[r]:
                mark[r] = 1
                touched.push_back(r)
            dense[r] = (dense[r] + v) % P
        while True:
            low = -1
            for t in range(touched.size()):
                rr = touched[t]
                if dense[rr] != 0 and rr > low:
                    low = rr
            if low < 0:
                break
            idx = pivot_of[low]
            if idx < 0:
                inv = _inv(dense[low], P)
                store.push_back(vector[int64_t]())
                store_rows.push_back(vector[int]())
                k = store.size() - 1
                for t in range(touched.size()):
                    rr = touched[t]
                    if dense[rr] != 0:
                        store_rows[k].push_back(rr)
                        store[k].push_back(dense[rr] * inv % P)
                pivot_of[low] = k
                rank += 1
                break
            f = dense[low]
            for t in range(store_rows[idx].size()):
                rr = store_rows[idx][t]
                if not mark[rr]:
                    mark[rr] = 1
                    touched.push_back(rr)
                w = (dense[rr] - f * store[idx][t]) % P
                if w < 0:
                    w += P
                dense[rr] = w
        for t in range(touched.size()):
            rr = touched[t]
            dense[rr] = 0
            mark[rr] = 0
    return rank


def lq_feasible(int k, supp, lin):
    """Subset DP for the existence of a linear-quotient ordering."""
    cdef vector[uint64_t] S_ = supp
    cdef vector[uint64_t] L_ = lin
    cdef uint64_t full = (1ULL << k) - 1
    cdef vector[char] ok
    ok.assign(1ULL << k, 0)
    cdef int i, j
    cdef uint64_t S, bit, L, T
    cdef bint good
    for i in range(k):
        ok[1ULL << i] = 1
    for S in range(1, full + 1):
        if not ok[S] or S == full:
            continue
        for i in range(k):
            bit = 1ULL << i
            if (S & bit) or ok[S | bit]:
                continue
            L = 0
            for j in range(k):
                if S & (1ULL << j):
                    L |= L_[j * k + i]
            good = True
            for j in range(k):
                if (S & (1ULL << j)) and not (S_[j * k + i] & L):
                    good = False
                    break
            if good:
                ok[S | bit] = 1
    return bool(ok[full])
