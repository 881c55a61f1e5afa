"""Numba @njit kernel implementations (int64 only).

Twin of `numpy_backend`; see that module for the shared contracts.  These
kernels only ever see int64 data: prime-field residues (p > 0) or
denominator-cleared integers (p == 0) whose magnitudes the dispatcher has
already bounded against int64 overflow.
"""

from __future__ import annotations

import numpy as np
from numba import njit

NAME = "numba"

_CACHE = True


@njit(cache=_CACHE)
def _inv_modp(a, p):
    # Fermat exponentiation; p prime, a != 0 mod p
    a %= p
    result = 1
    e = p - 2
    while e > 0:
        if e & 1:
            result = result * a % p
        a = a * a % p
        e >>= 1
    return result


@njit(cache=_CACHE)
def assoc_violation(mu, p):
    n = mu.shape[0]
    acc = np.zeros((n, n), dtype=np.int64)
    for i in range(n):
        for j in range(n):
            # acc[k,l] = sum_m mu[i,j,m] * mu[m,k,l]
            acc[:, :] = 0
            for m in range(n):
                f = mu[i, j, m]
                if f == 0:
                    continue
                for k in range(n):
                    for l in range(n):
                        acc[k, l] += f * mu[m, k, l]
            for k in range(n):
                for l in range(n):
                    s = 0
                    for m in range(n):
                        s += mu[j, k, m] * mu[i, m, l]
                    a = acc[k, l]
                    if p > 0:
                        s %= p
                        a %= p
                    if a != s:
                        return np.array([i, j, k], dtype=np.int64)
    return np.array([-1, -1, -1], dtype=np.int64)


@njit(cache=_CACHE)
def monomial_assoc_violation(pos, val, p):
    n = pos.shape[0]
    for i in range(n):
        for j in range(n):
            tij = pos[i, j]
            vij = val[i, j]
            for k in range(n):
                lc = vij * val[tij, k]
                rc = val[j, k] * val[i, pos[j, k]]
                if p > 0:
                    lc %= p
                    rc %= p
                if lc != rc:
                    return np.array([i, j, k], dtype=np.int64)
                if lc != 0 and pos[tij, k] != pos[i, pos[j, k]]:
                    return np.array([i, j, k], dtype=np.int64)
    return np.array([-1, -1, -1], dtype=np.int64)


@njit(cache=_CACHE)
def module_law_violation(rho, mu, p, lmul, rmul):
    n = mu.shape[0]
    m = rho.shape[1]
    lhs = np.zeros((m, m), dtype=np.int64)
    rhs = np.zeros((m, m), dtype=np.int64)
    for i in range(n):
        for j in range(n):
            for r in range(m):
                for c in range(m):
                    s = 0
                    for t in range(m):
                        s += rho[i, r, t] * rho[j, t, c]
                    lhs[r, c] = s * lmul
            rhs[:, :] = 0
            for k in range(n):
                f = mu[i, j, k]
                if f == 0:
                    continue
                for r in range(m):
                    for c in range(m):
                        rhs[r, c] += f * rho[k, r, c]
            for r in range(m):
                for c in range(m):
                    a = lhs[r, c]
                    b = rhs[r, c] * rmul
                    if p > 0:
                        a %= p
                        b %= p
                    if a != b:
                        return np.array([i, j], dtype=np.int64)
    return np.array([-1, -1], dtype=np.int64)


@njit(cache=_CACHE)
def counit_triple_violation(mu, e1, doff, du, dv, dval, p, lmul, rmul):
    n = mu.shape[0]
    for j in range(n):
        s0, s1 = doff[j], doff[j + 1]
        for i in range(n):
            for k in range(n):
                lhs = 0
                for m in range(n):
                    lhs += mu[i, j, m] * e1[m, k]
                lhs *= lmul
                r1 = 0
                r2 = 0
                for s in range(s0, s1):
                    r1 += dval[s] * e1[i, du[s]] * e1[dv[s], k]
                    r2 += dval[s] * e1[i, dv[s]] * e1[du[s], k]
                r1 *= rmul
                r2 *= rmul
                if p > 0:
                    lhs %= p
                    r1 %= p
                    r2 %= p
                if lhs != r1:
                    return np.array([i, j, k, 1], dtype=np.int64)
                if lhs != r2:
                    return np.array([i, j, k, 2], dtype=np.int64)
    return np.array([-1, -1, -1, -1], dtype=np.int64)


@njit(cache=_CACHE)
def rref_modp(A, p):
    rows, cols = A.shape
    for i in range(rows):
        for j in range(cols):
            A[i, j] %= p
    pivots = np.empty(min(rows, cols), dtype=np.int64)
    r = 0
    for c in range(cols):
        if r == rows:
            break
        sel = -1
        for i in range(r, rows):
            if A[i, c] != 0:
                sel = i
                break
        if sel < 0:
            continue
        if sel != r:
            for j in range(cols):
                t = A[r, j]
                A[r, j] = A[sel, j]
                A[sel, j] = t
        inv = _inv_modp(A[r, c], p)
        for j in range(cols):
            A[r, j] = A[r, j] * inv % p
        for i in range(rows):
            if i == r:
                continue
            f = A[i, c]
            if f == 0:
                continue
            for j in range(cols):
                A[i, j] = (A[i, j] - f * A[r, j]) % p
        pivots[r] = c
        r += 1
    return pivots[:r], r


@njit(cache=_CACHE)
def unit_tuple_search(umul, cidx, gtab, one_idx, max_solutions):
    G = gtab.shape[0]
    U = umul.shape[0]
    sols = np.empty((max_solutions, G), dtype=np.int64)
    if umul[one_idx, cidx[0, 0]] != umul[one_idx, one_idx]:
        return sols[:0], 0
    a = np.full(G, -1, dtype=np.int64)
    a[0] = one_idx
    if G == 1:
        sols[0, 0] = one_idx
        return sols[:1], 1
    nsol = 0
    choice = np.zeros(G, dtype=np.int64)
    d = 1
    while d >= 1:
        if d == G:
            if nsol == max_solutions:
                return sols, -1
            sols[nsol] = a
            nsol += 1
            d -= 1
            continue
        advanced = False
        while choice[d] < U:
            a[d] = choice[d]
            choice[d] += 1
            ok = True
            for g in range(d + 1):
                for h in range(d + 1):
                    gh = gtab[g, h]
                    if gh > d:
                        continue
                    if umul[a[gh], cidx[g, h]] != umul[a[g], a[h]]:
                        ok = False
                        break
                if not ok:
                    break
            if ok:
                advanced = True
                break
        if advanced:
            d += 1
        else:
            choice[d] = 0
            a[d] = -1
            d -= 1
    return sols[:nsol], nsol
