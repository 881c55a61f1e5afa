"""Kernel dispatch: numba backend vs pure-numpy fallback.

The env flag HOPFSTRICT_BACKEND picks the backend at import time:

    HOPFSTRICT_BACKEND=numba   force numba (error if unavailable)
    HOPFSTRICT_BACKEND=numpy   force the pure-numpy twins
    unset / auto               numba if it imports, else numpy

Both backends compute on int64: prime-field residues directly, rational data
after denominator clearing.  Every clearing step carries an a-priori overflow
bound; if int64 cannot hold the intermediate values the check silently reruns
on the object-dtype exact path (the numpy backend is dtype-agnostic), so
results are exact in all cases.
"""

from __future__ import annotations

import os
import warnings
from math import lcm

import numpy as np

from ..fields import Field

from . import numpy_backend

_MAXINT = 2 ** 62


def _load_backend():
    choice = os.environ.get("HOPFSTRICT_BACKEND", "auto").lower()
    if choice not in ("auto", "numba", "numpy"):
        raise ValueError(f"HOPFSTRICT_BACKEND={choice!r}; expected numba, numpy or auto")
    if choice == "numpy":
        return numpy_backend
    try:
        from . import numba_backend
        return numba_backend
    except ImportError:
        if choice == "numba":
            raise
        warnings.warn("numba unavailable, falling back to the pure-numpy backend")
        return numpy_backend


_BACKEND = _load_backend()


def backend_name() -> str:
    return _BACKEND.NAME


def get_backend(name: str | None = None):
    """The active backend module, or a named one (for benchmarks/tests)."""
    if name is None:
        return _BACKEND
    if name == "numpy":
        return numpy_backend
    if name == "numba":
        from . import numba_backend
        return numba_backend
    raise ValueError(f"unknown backend {name!r}")


class _Overflow(Exception):
    """Internal: cleared integers would not fit int64."""


def _clear(arr: np.ndarray, field: Field) -> tuple[np.ndarray, int]:
    """(int64 copy, denominator D) with int64_arr == D * arr, or _Overflow."""
    if field.is_prime_field:
        return arr.astype(np.int64), 1
    flat = arr.reshape(-1)
    d = 1
    for x in flat:
        d = lcm(d, x.denominator)
    out = np.empty(flat.shape, dtype=np.int64)
    for i, x in enumerate(flat):
        v = x.numerator * (d // x.denominator)
        if abs(v) >= _MAXINT:
            raise _Overflow
        out[i] = v
    return out.reshape(arr.shape), d


def _maxabs(a: np.ndarray) -> int:
    return int(np.abs(a).max()) if a.size else 0


def _bounded(*vals: int) -> bool:
    return all(abs(v) < _MAXINT for v in vals)


def _witness(idx: np.ndarray):
    t = tuple(int(x) for x in idx)
    return None if t[0] < 0 else t


# ---------------------------------------------------------------------------
# associativity


def monomial_tables(mu: np.ndarray, field: Field):
    """(pos, val) if every basis product is a scalar times a basis vector."""
    n = mu.shape[0]
    flat = mu.reshape(n * n, n)
    nonzero = flat != field.zero
    counts = nonzero.sum(axis=1)
    if counts.max(initial=0) > 1:
        return None
    pos = np.argmax(nonzero, axis=1).astype(np.int64).reshape(n, n)
    val = np.take_along_axis(flat, pos.reshape(-1, 1), axis=1).reshape(n, n).copy()
    val[counts.reshape(n, n) == 0] = field.zero
    return pos, val


def associativity_witness(mu: np.ndarray, field: Field):
    """None, or the first basis triple (i, j, k) violating associativity."""
    p = field.characteristic
    mono = monomial_tables(mu, field)
    if mono is not None:
        pos, val = mono
        try:
            vi, _ = _clear(val, field)
            if _bounded(_maxabs(vi) ** 2):
                return _witness(_BACKEND.monomial_assoc_violation(pos, vi, p))
        except _Overflow:
            pass
        return _witness(numpy_backend.monomial_assoc_violation(pos, val, 0))
    n = mu.shape[0]
    try:
        mi, _ = _clear(mu, field)
        if n ** 5 <= 300_000_000 and _bounded(n * _maxabs(mi) ** 2):
            return _witness(_BACKEND.assoc_violation(mi, p))
    except _Overflow:
        pass
    return _witness(numpy_backend.assoc_violation(mu, 0))


# ---------------------------------------------------------------------------
# module law


def module_law_witness(rho: np.ndarray, mu: np.ndarray, field: Field):
    """None, or the first pair (i, j) with rho(e_i)rho(e_j) != rho(e_i e_j)."""
    p = field.characteristic
    n, m = mu.shape[0], rho.shape[1]
    try:
        ri, dr = _clear(rho, field)
        mi, dm = _clear(mu, field)
        R, M = _maxabs(ri), _maxabs(mi)
        if _bounded(m * R * R * dm, n * M * R * dr):
            return _witness(_BACKEND.module_law_violation(ri, mi, p, dm, dr))
    except _Overflow:
        pass
    one = field.one
    return _witness(numpy_backend.module_law_violation(rho, mu, 0, one, one))


# ---------------------------------------------------------------------------
# weak counit law


def _delta_csr(coproduct, field, as_int: bool):
    n = len(coproduct)
    doff = np.zeros(n + 1, dtype=np.int64)
    du, dv, dval = [], [], []
    for i, terms in enumerate(coproduct):
        for coef, u, v in terms:
            du.append(u)
            dv.append(v)
            dval.append(coef)
        doff[i + 1] = len(du)
    du = np.array(du, dtype=np.int64)
    dv = np.array(dv, dtype=np.int64)
    if as_int:
        vals = np.zeros(len(dval), dtype=np.int64)
        d = 1
        if not field.is_prime_field:
            for x in dval:
                d = lcm(d, x.denominator)
        for i, x in enumerate(dval):
            v = int(x) if field.is_prime_field else x.numerator * (d // x.denominator)
            if abs(v) >= _MAXINT:
                raise _Overflow
            vals[i] = v
        return doff, du, dv, vals, d
    return doff, du, dv, np.array(dval, dtype=object), 1


def counit_triple_witness(mu: np.ndarray, eps: np.ndarray, coproduct, field: Field):
    """None, or (i, j, k, order) where the weak counit law fails."""
    p = field.characteristic
    n = mu.shape[0]
    try:
        mi, dm = _clear(mu, field)
        ei, de = _clear(eps, field)
        doff, du, dv, dvals, dd = _delta_csr(coproduct, field, as_int=True)
        e1 = np.tensordot(mi, ei, axes=(2, 0))        # eps(e_i e_j), scaled dm*de
        b1 = n * _maxabs(mi) * _maxabs(ei)
        lmul, rmul = dd * de, 1
        smax = max((doff[i + 1] - doff[i] for i in range(n)), default=0)
        if _bounded(n * _maxabs(mi) * b1 * lmul, smax * _maxabs(dvals) * b1 * b1):
            return _witness(_BACKEND.counit_triple_violation(
                mi, e1, doff, du, dv, dvals, p, lmul, rmul))
    except _Overflow:
        pass
    e1 = field.normalize(np.tensordot(mu, eps, axes=(2, 0)))
    doff, du, dv, dvals, _ = _delta_csr(coproduct, field, as_int=False)
    return _witness(numpy_backend.counit_triple_violation(
        mu, e1, doff, du, dv, dvals, 0, field.one, field.one))


# ---------------------------------------------------------------------------
# mod-p elimination (hom spaces and friends)


def modp_rref(A: np.ndarray, p: int):
    """Reduced echelon of an int64 matrix mod p: (R, pivots, rank)."""
    work = np.ascontiguousarray(A, dtype=np.int64).copy()
    pivots, rk = _BACKEND.rref_modp(work, p)
    return work, [int(c) for c in pivots], rk


def modp_kernel_basis(A: np.ndarray, p: int) -> np.ndarray:
    """Canonical kernel basis rows of {x : A x = 0 mod p}; shape (nullity, cols)."""
    rows, cols = A.shape
    R, pivots, rk = modp_rref(A, p)
    pivot_set = set(pivots)
    free = [j for j in range(cols) if j not in pivot_set]
    out = np.zeros((len(free), cols), dtype=np.int64)
    for t, j in enumerate(free):
        out[t, j] = 1
        for i, c in enumerate(pivots):
            out[t, c] = (-R[i, j]) % p
    return out


# ---------------------------------------------------------------------------
# obstruction enumeration


def unit_tuple_search(umul: np.ndarray, cidx: np.ndarray, gtab: np.ndarray,
                      one_idx: int, max_solutions: int = 200_000):
    """Exhaustive unit-tuple solutions; raises on overflow past the cap."""
    sols, count = _BACKEND.unit_tuple_search(
        np.ascontiguousarray(umul, dtype=np.int64),
        np.ascontiguousarray(cidx, dtype=np.int64),
        np.ascontiguousarray(gtab, dtype=np.int64),
        one_idx, max_solutions)
    if count < 0:
        raise OverflowError(f"more than {max_solutions} solutions; raise the cap")
    return [tuple(int(x) for x in row) for row in sols]


def warm_up():
    """Trigger JIT compilation on tiny inputs (keeps timed runs honest)."""
    b = _BACKEND
    mu = np.zeros((1, 1, 1), dtype=np.int64)
    mu[0, 0, 0] = 1
    b.assoc_violation(mu, 0)
    b.monomial_assoc_violation(np.zeros((1, 1), dtype=np.int64),
                               np.ones((1, 1), dtype=np.int64), 0)
    b.module_law_violation(np.ones((1, 1, 1), dtype=np.int64), mu, 0, 1, 1)
    b.counit_triple_violation(mu, np.ones((1, 1), dtype=np.int64),
                              np.array([0, 1], dtype=np.int64),
                              np.zeros(1, dtype=np.int64),
                              np.zeros(1, dtype=np.int64),
                              np.ones(1, dtype=np.int64), 0, 1, 1)
    b.rref_modp(np.ones((1, 1), dtype=np.int64), 5)
    b.unit_tuple_search(np.zeros((1, 1), dtype=np.int64),
                        np.zeros((1, 1), dtype=np.int64),
                        np.zeros((1, 1), dtype=np.int64), 0, 4)
