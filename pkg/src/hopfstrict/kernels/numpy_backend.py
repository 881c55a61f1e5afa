"""Pure-numpy kernel implementations.

Every function here mirrors a numba twin in `numba_backend` with the same
signature and semantics.  The code is dtype-agnostic on purpose: called with
int64 arrays and p > 0 it is the fast fallback; called with object-dtype
arrays and p = 0 it doubles as the arbitrary-precision exact path (Fractions
or big ints), which is what correctness falls back to when int64 bounds
would overflow.

Conventions:
  * mu[i, j, :] is the coefficient vector of e_i * e_j.
  * p == 0 means "no reduction" (exact integers / objects), p > 0 reduces mod p.
  * "violation" functions return index arrays filled with -1 when all checks
    pass, otherwise the first offending basis tuple in lexicographic order.
"""

from __future__ import annotations

import numpy as np

NAME = "numpy"


def _first_mismatch(diff: np.ndarray):
    bad = np.argwhere(diff)
    return bad[0] if bad.size else None


def assoc_violation(mu: np.ndarray, p: int) -> np.ndarray:
    """First (i, j, k) with (e_i e_j) e_k != e_i (e_j e_k), else -1s."""
    n = mu.shape[0]
    for i in range(n):
        # lhs[j,k,l] = sum_m mu[i,j,m] mu[m,k,l]; rhs[j,k,l] = sum_m mu[j,k,m] mu[i,m,l]
        lhs = np.tensordot(mu[i], mu, axes=(1, 0))
        rhs = np.tensordot(mu, mu[i], axes=(2, 0))
        if p:
            lhs %= p
            rhs %= p
        bad = _first_mismatch(lhs != rhs)
        if bad is not None:
            return np.array([i, bad[0], bad[1]], dtype=np.int64)
    return np.array([-1, -1, -1], dtype=np.int64)


def monomial_assoc_violation(pos: np.ndarray, val: np.ndarray, p: int) -> np.ndarray:
    """Associativity for monomial tables: e_i e_j = val[i,j] * e_{pos[i,j]}.

    val[i,j] == 0 encodes the zero product.  O(n^3) instead of O(n^5).
    """
    lc = val[:, :, None] * val[pos, :]          # val[i,j] * val[pos[i,j], k]
    rc = val[None, :, :] * val[:, pos]          # val[j,k] * val[i, pos[j,k]]
    if p:
        lc = lc % p
        rc = rc % p
    lt = pos[pos, :]                            # pos[pos[i,j], k]
    rt = pos[:, pos]                            # pos[i, pos[j,k]]
    bad = _first_mismatch((lc != rc) | ((lc != 0) & (lt != rt)))
    if bad is None:
        return np.array([-1, -1, -1], dtype=np.int64)
    return np.asarray(bad, dtype=np.int64)


def module_law_violation(rho: np.ndarray, mu: np.ndarray, p: int,
                         lmul, rmul) -> np.ndarray:
    """First (i, j) with lmul * rho[i] @ rho[j] != rmul * sum_k mu[i,j,k] rho[k].

    The two scale factors let callers compare tensors whose denominators were
    cleared independently.
    """
    n = mu.shape[0]
    for i in range(n):
        lhs = (rho[i][None, :, :] @ rho) * lmul       # (j, r, c)
        rhs = np.tensordot(mu[i], rho, axes=(1, 0)) * rmul
        if p:
            lhs %= p
            rhs %= p
        bad = _first_mismatch(lhs != rhs)
        if bad is not None:
            return np.array([i, bad[0]], dtype=np.int64)
    return np.array([-1, -1], dtype=np.int64)


def counit_triple_violation(mu: np.ndarray, e1: np.ndarray,
                            doff: np.ndarray, du: np.ndarray, dv: np.ndarray,
                            dval: np.ndarray, p: int, lmul, rmul) -> np.ndarray:
    """Weak counit law on basis triples.

    e1[i, j] = eps(e_i e_j) precomputed by the caller.  The coproduct of e_j
    is the CSR-ish slice (du, dv, dval)[doff[j]:doff[j+1]].  Checks, with the
    caller's scale factors,
        lmul * eps((e_i e_j) e_k) == rmul * sum eps(e_i y1) eps(y2 e_k)
    and the opposite order (y2 first); returns (i, j, k, order) or -1s.
    """
    n = mu.shape[0]
    for j in range(n):
        lhs = np.tensordot(mu[:, j, :], e1, axes=(1, 0)) * lmul   # (i, k)
        s0, s1 = doff[j], doff[j + 1]
        rhs1 = np.zeros_like(lhs)
        rhs2 = np.zeros_like(lhs)
        for s in range(s0, s1):
            term = np.outer(e1[:, du[s]], e1[dv[s], :]) * dval[s]
            rhs1 = rhs1 + term
            term = np.outer(e1[:, dv[s]], e1[du[s], :]) * dval[s]
            rhs2 = rhs2 + term
        rhs1 = rhs1 * rmul
        rhs2 = rhs2 * rmul
        if p:
            lhs %= p
            rhs1 %= p
            rhs2 %= p
        bad = _first_mismatch(lhs != rhs1)
        if bad is not None:
            return np.array([bad[0], j, bad[1], 1], dtype=np.int64)
        bad = _first_mismatch(lhs != rhs2)
        if bad is not None:
            return np.array([bad[0], j, bad[1], 2], dtype=np.int64)
    return np.array([-1, -1, -1, -1], dtype=np.int64)


def _inv_modp(a: int, p: int) -> int:
    # Fermat; p is prime and a != 0 mod p
    return pow(int(a), p - 2, p)


def rref_modp(A: np.ndarray, p: int):
    """In-place reduced row echelon of an int64 matrix mod p.

    Returns (pivot_columns, rank).  Deterministic first-nonzero pivoting,
    matching linalg.rref.
    """
    rows, cols = A.shape
    A %= p
    pivots = np.empty(min(rows, cols), dtype=np.int64)
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(A[r:, c])[0]
        if nz.size == 0:
            continue
        sel = r + int(nz[0])
        if sel != r:
            A[[r, sel]] = A[[sel, r]]
        A[r] = A[r] * _inv_modp(A[r, c], p) % p
        f = A[:, c].copy()
        f[r] = 0
        nzr = np.nonzero(f)[0]
        if nzr.size:
            A[nzr] = (A[nzr] - np.outer(f[nzr], A[r])) % p
        pivots[r] = c
        r += 1
    return pivots[:r], r


def unit_tuple_search(umul: np.ndarray, cidx: np.ndarray, gtab: np.ndarray,
                      one_idx: int, max_solutions: int):
    """All maps a: G -> units with a[1] = 1 and a_gh * c(g,h) == a_g * a_h.

    umul is the unit-product index table, cidx[g,h] the unit index of c(g,h).
    Returns (solutions, count); count == -1 signals overflow past
    max_solutions (results then unusable).
    """
    G = gtab.shape[0]
    U = umul.shape[0]
    # pair (1, 1) only involves a[0] = one_idx, so check it up front
    if umul[one_idx, cidx[0, 0]] != umul[one_idx, one_idx]:
        return np.empty((0, G), dtype=np.int64), 0
    part = np.full((1, 1), one_idx, dtype=np.int64)
    for d in range(1, G):
        ext = np.empty((part.shape[0] * U, d + 1), dtype=np.int64)
        ext[:, :d] = np.repeat(part, U, axis=0)
        ext[:, d] = np.tile(np.arange(U, dtype=np.int64), part.shape[0])
        keep = np.ones(ext.shape[0], dtype=bool)
        for g in range(d + 1):
            for h in range(d + 1):
                gh = gtab[g, h]
                if gh > d:
                    continue
                lhs = umul[ext[:, gh], cidx[g, h]]
                rhs = umul[ext[:, g], ext[:, h]]
                keep &= lhs == rhs
        part = ext[keep]
        if part.shape[0] > max_solutions:
            return part[:max_solutions], -1
    return part, part.shape[0]
