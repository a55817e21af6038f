"""Exact circuit-counting kernels.

Every letter of a pair-matched word is classified by a sign state:
0 when both signs fit (zero slope), 1 when the
second edge repeats the first (l = +1), 2 when it reverses it (l = -1).
The states of a circuit are unique, so counting each circuit once under its
state tuple and filtering with ``allowed[code]`` (code = sum state_c * 3**c)
counts any union of sign classes without double counting.

Vertex values inside the kernels are 0-based.
"""
import numba
import numpy as np


@numba.njit(cache=True)
def toeplitz_count(n, h, t, is_first, letter, allowed):
    """Circuits with ``|slope_i| == |slope_j|`` per letter, by slope enumeration.

    For fixed slopes the walk's offsets span ``r = max - min``; exactly
    ``n - r`` starting vertices keep it inside ``1..n``.
    """
    total = 0
    nz = 2 * (n - 1)
    a = np.zeros(t, np.int64)
    sgn = np.zeros(t, np.int64)
    free = np.zeros(t, np.int64)
    idx = np.zeros(t, np.int64)
    ncodes = 1
    for _ in range(t):
        ncodes *= 3
    for code in range(ncodes):
        if not allowed[code]:
            continue
        c = code
        last_plus = -1
        nonzero = 0
        for L in range(t):
            st = c % 3
            c //= 3
            a[L] = 0
            if st == 0:
                sgn[L] = 0
            elif st == 1:
                sgn[L] = 1
                last_plus = L
                nonzero += 1
            else:
                sgn[L] = -1
                nonzero += 1
        if nonzero > 0 and nz == 0:
            continue
        nfree = 0
        for L in range(t):
            if sgn[L] != 0 and L != last_plus:
                free[nfree] = L
                nfree += 1
        for f in range(nfree):
            idx[f] = 0
        while True:
            ok = True
            plus_sum = 0
            for f in range(nfree):
                L = free[f]
                v = idx[f]
                s = v - (n - 1) if v < n - 1 else v - n + 2
                a[L] = s
                if sgn[L] == 1:
                    plus_sum += s
            if last_plus >= 0:
                # closure: the +1 letters' slopes must sum to zero
                s = -plus_sum
                if s == 0 or s > n - 1 or s < -(n - 1):
                    ok = False
                else:
                    a[last_plus] = s
            if ok:
                P = 0
                mn = 0
                mx = 0
                for p in range(1, h + 1):
                    L = letter[p]
                    if is_first[p]:
                        P += a[L]
                    elif sgn[L] == 1:
                        P += a[L]
                    else:
                        P -= a[L]
                    if P < mn:
                        mn = P
                    elif P > mx:
                        mx = P
                    if mx - mn >= n:
                        ok = False
                        break
                if ok:
                    total += n - (mx - mn)
            f = 0
            while f < nfree:
                idx[f] += 1
                if idx[f] < nz:
                    break
                idx[f] = 0
                f += 1
            if f == nfree:
                break
    return total


@numba.njit(cache=True)
def table_count(N, h, is_first, mate, table):
    """Circuits over ``0..N-1`` with equal label codes on paired edges."""
    total = 0
    pi = np.zeros(h + 1, np.int64)
    nxt = np.zeros(h + 2, np.int64)
    for p0 in range(N):
        pi[0] = p0
        lvl = 1
        nxt[1] = 0
        while lvl >= 1:
            if lvl > h:
                if pi[h] == pi[0]:
                    total += 1
                lvl -= 1
                continue
            v = nxt[lvl]
            if is_first[lvl]:
                if v >= N:
                    lvl -= 1
                    continue
                nxt[lvl] = v + 1
            else:
                i = mate[lvl]
                want = table[pi[i - 1], pi[i]]
                cur = pi[lvl - 1]
                while v < N and table[cur, v] != want:
                    v += 1
                if v >= N:
                    lvl -= 1
                    continue
                nxt[lvl] = v + 1
            pi[lvl] = v
            lvl += 1
            nxt[lvl] = 0
    return total
