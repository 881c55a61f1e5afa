"""Exact dense linear algebra, object path and int64/BLAS fast paths."""

from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from hopfstrict.fields import Field
from hopfstrict import linalg
from hopfstrict.linalg import (
    SingularMatrix,
    coords_in_rowspace,
    fast_kron,
    fast_matmul,
    fast_tensordot,
    int64_view,
    invert_matrix,
    is_invertible,
    kernel_basis,
    rank,
    row_space_basis,
    rref,
    solve_linear,
    tensor_matrix,
    tensor_vector,
)

Q = Field.Q()
F5 = Field.GF(5)


def mat(field, rows):
    return field.array(rows)


def test_rref_known_example():
    # oracle: reduce [[2,4],[1,3]] over Q by hand -> identity, pivots (0,1)
    R, piv = rref(mat(Q, [[2, 4], [1, 3]]), Q)
    assert piv == [0, 1]
    assert np.array_equal(R, Q.eye(2))


def test_rref_with_free_column():
    # [[1,2,3],[2,4,6]] has rank 1; hand reduction gives [1,2,3]
    R, piv = rref(mat(Q, [[1, 2, 3], [2, 4, 6]]), Q)
    assert piv == [0]
    assert list(R[0]) == [1, 2, 3]
    assert all(x == 0 for x in R[1])


def test_solve_and_kernel():
    A = mat(Q, [[1, 1], [1, -1]])
    b = Q.array([3, 1])
    x = solve_linear(A, b, Q)
    assert np.array_equal(Q.normalize(A @ x), b)
    assert solve_linear(mat(Q, [[1, 1], [2, 2]]), Q.array([0, 1]), Q) is None
    ker = kernel_basis(mat(Q, [[1, 2, 3]]), Q)
    assert len(ker) == 2
    for v in ker:
        assert all(x == 0 for x in mat(Q, [[1, 2, 3]]) @ v)


def test_invert_matrix():
    A = mat(Q, [[1, 2], [3, 4]])
    Ainv = invert_matrix(A, Q)
    assert np.array_equal(Q.normalize(A @ Ainv), Q.eye(2))
    assert Ainv[0, 0] == Fraction(-2)
    with pytest.raises(SingularMatrix):
        invert_matrix(mat(Q, [[1, 2], [2, 4]]), Q)
    assert not is_invertible(mat(F5, [[1, 2], [2, 4]]), F5)


def test_row_space_and_coords():
    E, piv = row_space_basis(mat(Q, [[0, 2, 4], [0, 1, 2], [1, 0, 1]]), Q)
    assert E.shape[0] == len(piv) == 2
    v = Q.array([3, 4, 11])          # 3*(row3) + 2*(row1) stays in the span
    c = coords_in_rowspace(E, piv, v, Q)
    assert c is not None and np.array_equal(Q.normalize(c @ E), v)
    assert coords_in_rowspace(E, piv, Q.array([0, 0, 1]), Q) is None


def test_tensor_conventions():
    # (v (x) w) @ kron(A, B) == (v @ A) (x) (w @ B), index (i, j) -> i*dimB + j
    A = mat(Q, [[1, 2], [0, 1]])
    B = mat(Q, [[2, 0], [1, 1]])
    v = Q.array([1, 3])
    w = Q.array([2, 5])
    lhs = tensor_vector(v, w, Q) @ tensor_matrix(A, B, Q)
    rhs = tensor_vector(Q.normalize(v @ A), Q.normalize(w @ B), Q)
    assert np.array_equal(Q.normalize(lhs), rhs)


def test_int64_view_rejects_fractions_and_big_ints():
    assert int64_view(Q.array([[1, 2], [3, 4]])) is not None
    assert int64_view(Q.array([[Fraction(1, 2), 0], [0, 1]])) is None
    big = np.array([[2 ** 70]], dtype=object)
    assert int64_view(big) is None
    assert int64_view(np.array([1.5], dtype=object)) is None


def test_fast_matmul_matches_object_path():
    rng = np.random.default_rng(0)
    a = Q.array(rng.integers(-9, 10, size=(7, 5)))
    b = Q.array(rng.integers(-9, 10, size=(5, 6)))
    assert np.array_equal(fast_matmul(a, b, Q), a @ b)
    af = a.copy(); af[0, 0] = Fraction(1, 2)
    assert np.array_equal(fast_matmul(af, b, Q), af @ b)
    a5 = F5.array(rng.integers(0, 5, size=(4, 4)))
    b5 = F5.array(rng.integers(0, 5, size=(4, 4)))
    assert np.array_equal(fast_matmul(a5, b5, F5), F5.normalize(a5 @ b5))


def test_fast_tensordot_matches_object_path():
    rng = np.random.default_rng(1)
    a = Q.array(rng.integers(-5, 6, size=(3, 4, 2)))
    b = Q.array(rng.integers(-5, 6, size=(4, 5)))
    got = fast_tensordot(a, b, (1, 0), Q)
    want = np.tensordot(a, b, axes=(1, 0))
    assert np.array_equal(got, want)


def test_fast_kron_matches_tensor_matrix():
    rng = np.random.default_rng(2)
    a = Q.array(rng.integers(-5, 6, size=(2, 3)))
    b = Q.array(rng.integers(-5, 6, size=(3, 2)))
    assert np.array_equal(fast_kron(a, b, Q), tensor_matrix(a, b, Q))
    a5, b5 = F5.normalize(a.copy()), F5.normalize(b.copy())
    assert np.array_equal(fast_kron(a5, b5, F5), tensor_matrix(a5, b5, F5))


def test_fast_matmul_huge_entries_fall_back_exactly():
    big = 2 ** 40
    a = np.array([[big, big]], dtype=object)
    b = np.array([[big], [big]], dtype=object)
    out = fast_matmul(a, b, Q)
    assert out[0, 0] == 2 * big * big        # beyond int64: object path


small_q_mat = st.integers(-6, 6)


@st.composite
def q_matrices(draw, max_n=5):
    n = draw(st.integers(1, max_n))
    m = draw(st.integers(1, max_n))
    data = [[draw(small_q_mat) for _ in range(m)] for _ in range(n)]
    return Q.array(data)


@settings(max_examples=40, deadline=None)
@given(q_matrices())
def test_rref_is_projection_to_same_row_space(A):
    R, piv = rref(A, Q)
    assert rank(np.concatenate([A, R[: len(piv)]]), Q) == len(piv)
    # pivot columns of the echelon basis form an identity block
    E = R[: len(piv)]
    for i, c in enumerate(piv):
        col = list(E[:, c])
        assert col[i] == 1 and all(x == 0 for j, x in enumerate(col) if j != i)


@settings(max_examples=40, deadline=None)
@given(q_matrices(max_n=4))
def test_kernel_vectors_annihilate(A):
    for v in kernel_basis(A, Q):
        assert all(x == 0 for x in A @ v)
    assert len(kernel_basis(A, Q)) == A.shape[1] - rank(A, Q)


@settings(max_examples=40, deadline=None)
@given(q_matrices(max_n=4), q_matrices(max_n=4))
def test_fast_matmul_random_equivalence(A, B):
    if A.shape[1] != B.shape[0]:
        B = Q.array(np.zeros((A.shape[1], 3), dtype=int))
    assert np.array_equal(fast_matmul(A, B, Q), A @ B)
