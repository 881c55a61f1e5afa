"""Dense exact linear algebra on object-dtype arrays.

Deterministic reduced row echelon with leading-1 normalization is the
workhorse: solving, kernels, inverses and canonical subspace bases all reduce
to it.  No floating point anywhere.  Large prime-field eliminations are
handled by the int64 kernels (see `kernels`); this module is the general
exact path and the small-case path.
"""

from __future__ import annotations

import numpy as np

from .fields import Field


class SingularMatrix(ValueError):
    pass


_I62 = 2 ** 62
_I53 = 2 ** 53


def _int_mm(a64: np.ndarray, b64: np.ndarray, bound: int) -> np.ndarray:
    """a64 @ b64 exactly; BLAS through float64 when the result bound allows.

    Integer matmul in numpy is a scalar loop; float64 matmul is BLAS.  Every
    partial sum is bounded by `bound`, so below 2**53 the float64 route is
    exact.
    """
    if bound < _I53:
        return (a64.astype(np.float64) @ b64.astype(np.float64)).astype(np.int64)
    return a64 @ b64


def _int_tensordot(a64: np.ndarray, b64: np.ndarray, axes,
                   bound: int) -> np.ndarray:
    if bound < _I53:
        out = np.tensordot(a64.astype(np.float64), b64.astype(np.float64),
                           axes=axes)
        return out.astype(np.int64)
    return np.tensordot(a64, b64, axes=axes)


def int64_view(arr: np.ndarray) -> np.ndarray | None:
    """int64 copy of an object array whose entries are all plain ints, else None.

    The round trip back to object is compared entrywise, so Fractions (whose
    __int__ would truncate silently) and out-of-range ints are both rejected.
    """
    if arr.dtype != object:
        return None
    try:
        out = arr.astype(np.int64)
    except (OverflowError, TypeError, ValueError):
        return None
    if not np.array_equal(out.astype(object), arr):
        return None
    return out


def _abs_bound(a64: np.ndarray) -> int:
    if a64.size == 0:
        return 0
    lo, hi = int(a64.min()), int(a64.max())
    return max(abs(lo), abs(hi))


def fast_matmul(a: np.ndarray, b: np.ndarray, field: Field) -> np.ndarray:
    """Exact a @ b; int64-accelerated when entries and bounds allow."""
    if a.size and b.size:
        if field.p is not None:
            bound = (field.p - 1) ** 2 * a.shape[-1]
            if bound < _I62:
                prod = _int_mm(a.astype(np.int64), b.astype(np.int64), bound)
                return (prod % field.p).astype(object)
        else:
            a64, b64 = int64_view(a), int64_view(b)
            if a64 is not None and b64 is not None:
                bound = _abs_bound(a64) * _abs_bound(b64) * a.shape[-1]
                if bound < _I62:
                    return _int_mm(a64, b64, bound).astype(object)
    return field.normalize(a @ b)


def fast_tensordot(a: np.ndarray, b: np.ndarray, axes, field: Field) -> np.ndarray:
    """Exact single-axis np.tensordot with the same int64 routing as fast_matmul."""
    axa, axb = axes
    if a.size and b.size:
        if field.p is not None:
            bound = (field.p - 1) ** 2 * a.shape[axa]
            if bound < _I62:
                out = _int_tensordot(a.astype(np.int64), b.astype(np.int64),
                                     (axa, axb), bound)
                return (out % field.p).astype(object)
        else:
            a64, b64 = int64_view(a), int64_view(b)
            if a64 is not None and b64 is not None:
                bound = _abs_bound(a64) * _abs_bound(b64) * a.shape[axa]
                if bound < _I62:
                    return _int_tensordot(a64, b64, (axa, axb),
                                          bound).astype(object)
    return field.normalize(np.tensordot(a, b, axes=(axa, axb)))


def fast_kron(a: np.ndarray, b: np.ndarray, field: Field) -> np.ndarray:
    """Exact Kronecker product, index convention as tensor_matrix."""
    if a.size and b.size:
        if field.p is not None:
            if (field.p - 1) ** 2 < _I62:
                out = np.kron(a.astype(np.int64), b.astype(np.int64))
                return (out % field.p).astype(object)
        else:
            a64, b64 = int64_view(a), int64_view(b)
            if a64 is not None and b64 is not None:
                if _abs_bound(a64) * _abs_bound(b64) < _I62:
                    return np.kron(a64, b64).astype(object)
    return tensor_matrix(a, b, field)


def rref(mat: np.ndarray, field: Field) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form. Returns (R, pivot_columns).

    Pivoting is deterministic: columns left to right, first nonzero row.
    """
    R = mat.astype(object, copy=True)
    rows, cols = R.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        sel = None
        for i in range(r, rows):
            if R[i, c] != 0:
                sel = i
                break
        if sel is None:
            continue
        if sel != r:
            R[[r, sel]] = R[[sel, r]]
        lead = R[r, c]
        if lead != field.one:
            inv = field.inv(lead)
            R[r, :] = field.normalize(R[r, :] * inv)
        for i in range(rows):
            if i != r and R[i, c] != 0:
                R[i, :] = field.normalize(R[i, :] - R[i, c] * R[r, :])
        pivots.append(c)
        r += 1
    return R, pivots


def rank(mat: np.ndarray, field: Field) -> int:
    return len(rref(mat, field)[1])


def solve_linear(A: np.ndarray, b: np.ndarray, field: Field) -> np.ndarray | None:
    """One solution of A x = b (free variables set to 0), or None."""
    rows, cols = A.shape
    aug = np.concatenate([A, b.reshape(rows, 1)], axis=1)
    R, pivots = rref(aug, field)
    if cols in pivots:
        return None
    x = field.zeros(cols)
    for i, c in enumerate(pivots):
        x[c] = R[i, cols]
    return x


def kernel_basis(A: np.ndarray, field: Field) -> list[np.ndarray]:
    """Canonical basis of {x : A x = 0}, one vector per free column."""
    rows, cols = A.shape
    R, pivots = rref(A, field)
    pivot_set = set(pivots)
    basis = []
    for j in range(cols):
        if j in pivot_set:
            continue
        v = field.zeros(cols)
        v[j] = field.one
        for i, c in enumerate(pivots):
            v[c] = field.neg(R[i, j])
        basis.append(v)
    return basis


def invert_matrix(M: np.ndarray, field: Field) -> np.ndarray:
    n = M.shape[0]
    if M.shape != (n, n):
        raise SingularMatrix("not square")
    aug = np.concatenate([M, field.eye(n)], axis=1)
    R, pivots = rref(aug, field)
    if pivots[:n] != list(range(n)):
        raise SingularMatrix("matrix is singular")
    return R[:, n:]


def is_invertible(M: np.ndarray, field: Field) -> bool:
    n = M.shape[0]
    return M.shape == (n, n) and rank(M, field) == n


def row_space_basis(mat: np.ndarray, field: Field) -> tuple[np.ndarray, list[int]]:
    """Canonical (reduced echelon) basis of the row span, with pivot columns."""
    R, pivots = rref(mat, field)
    return R[: len(pivots), :], pivots


def coords_in_rowspace(E: np.ndarray, pivots: list[int], v: np.ndarray,
                       field: Field) -> np.ndarray | None:
    """Coefficients x with x @ E == v, for E a reduced echelon basis.

    Reduced echelon means the pivot columns of E form an identity block, so
    the only candidate is v restricted to the pivot columns.
    """
    x = v[list(pivots)]
    if np.array_equal(field.normalize(x @ E), v):
        return x
    return None


def tensor_matrix(A: np.ndarray, B: np.ndarray, field: Field) -> np.ndarray:
    """Kronecker product; index convention (i, j) -> i * dim_B + j.

    With row vectors acting on the right, (v ⊗ w) @ tensor_matrix(A, B)
    equals (v @ A) ⊗ (w @ B).
    """
    ra, ca = A.shape
    rb, cb = B.shape
    out = np.empty((ra * rb, ca * cb), dtype=object)
    for i in range(ra):
        for j in range(ca):
            out[i * rb:(i + 1) * rb, j * cb:(j + 1) * cb] = A[i, j] * B
    return field.normalize(out)


def tensor_vector(v: np.ndarray, w: np.ndarray, field: Field) -> np.ndarray:
    """v ⊗ w as a flat vector, same index convention as tensor_matrix."""
    return field.normalize(np.outer(v, w).reshape(-1))
