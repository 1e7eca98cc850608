"""Pure-Python versions of the hot kernels. Same signatures as _ckernels."""


def rank_modp(columns, p):
    """Rank over F_p of a sparse matrix given as a list of columns.

    Each column is a list of (row, value) pairs. Standard column reduction
    keyed on the largest row index still present ("low" pivot).
    """
    pivots = {}  # low row -> reduced column (dict row -> val), pivot entry 1
    rank = 0
    for col in columns:
        c = {}
        for r, v in col:
            v %= p
            if v:
                c[r] = (c.get(r, 0) + v) % p
                if not c[r]:
                    del c[r]
        while c:
            low = max(c)
            piv = pivots.get(low)
            if piv is None:
                inv = pow(c[low], p - 2, p)
                pivots[low] = {r: v * inv % p for r, v in c.items()}
                rank += 1
                break
            f = c[low]
            for r, v in piv.items():
                w = (c.get(r, 0) - f * v) % p
                if w:
                    c[r] = w
                else:
                    c.pop(r, None)
    return rank


def lq_feasible(k, supp, lin):
    """Does some ordering of k generators give linear quotients?

    supp[j*k+i]: bitmask of variables of u_j/gcd(u_j, u_i)
    lin[j*k+i]:  that bitmask if the quotient is a single variable, else 0

    Appending u_i to a prefix S works iff every quotient from S is divisible
    by one of the variable quotients from S. DP over subsets.
    """
    full = (1 << k) - 1
    ok = bytearray(1 << k)
    for i in range(k):
        ok[1 << i] = 1
    for S in range(1, full + 1):
        if not ok[S] or S == full:
            continue
        for i in range(k):
            bit = 1 << i
            if S & bit or ok[S | bit]:
                continue
            L = 0
            js = []
            T = S
            while T:
                low = T & -T
                j = low.bit_length() - 1
                L |= lin[j * k + i]
                js.append(j)
                T ^= low
            good = True
            for j in js:
                if not (supp[j * k + i] & L):
                    good = False
                    break
            if good:
                ok[S | bit] = 1
    return bool(ok[full])
