"""The int64 check kernels: numpy and numba backends must agree, and both
must agree with a direct object-dtype computation."""

from fractions import Fraction

import numpy as np
import pytest

from hopfstrict.fields import Field
from hopfstrict import kernels
from hopfstrict.algebras import group_algebra
from hopfstrict.groups import make_cyclic, make_dihedral

Q = Field.Q()
F5 = Field.GF(5)

BACKENDS = [kernels.get_backend("numpy"), kernels.get_backend("numba")]


def direct_assoc_witness(mu, field):
    n = mu.shape[0]
    for i in range(n):
        for j in range(n):
            for k in range(n):
                lhs = field.normalize(np.tensordot(mu[i, j], mu[:, k, :], (0, 0)))
                rhs = field.normalize(np.tensordot(mu[j, k], mu[i, :, :], (0, 0)))
                if not np.array_equal(lhs, rhs):
                    return (i, j, k)
    return None


def scrambled(mu, field, i, j, k):
    bad = mu.copy()
    bad[i, j] = bad[i, j].copy()
    bad[i, j][k] = field.add(bad[i, j][k], field.one)
    return bad


@pytest.mark.parametrize("field", [Q, F5])
def test_associativity_witness_against_direct(field):
    mu = group_algebra(make_cyclic(3), field).mu
    assert kernels.associativity_witness(mu, field) is None
    bad = scrambled(mu, field, 1, 2, 0)
    w = kernels.associativity_witness(bad, field)
    assert w == direct_assoc_witness(bad, field)
    assert w is not None


@pytest.mark.parametrize("backend", BACKENDS, ids=["numpy", "numba"])
def test_assoc_violation_backend_parity(backend):
    mu = group_algebra(make_dihedral(3), F5).mu
    dense = np.zeros(mu.shape, dtype=np.int64)
    flat = mu.reshape(-1)
    dense.reshape(-1)[:] = [int(x) for x in flat]
    assert tuple(backend.assoc_violation(dense, 5)) == (-1, -1, -1)
    dense[1, 2, 0] += 1
    got = tuple(int(x) for x in backend.assoc_violation(dense % 5, 5))
    want = direct_assoc_witness(F5.normalize(dense.astype(object)), F5)
    assert got == want


@pytest.mark.parametrize("backend", BACKENDS, ids=["numpy", "numba"])
def test_rref_modp_backend_parity(backend):
    rng = np.random.default_rng(3)
    A = rng.integers(0, 5, size=(6, 8)).astype(np.int64)
    from hopfstrict import linalg
    R_obj, piv_obj = linalg.rref(F5.normalize(A.astype(object)), F5)
    work = A.copy()
    piv_arr, rank = backend.rref_modp(work, 5)
    assert rank == len(piv_obj)
    assert [int(c) for c in piv_arr[:rank]] == list(piv_obj)
    assert np.array_equal(work[:rank].astype(object), R_obj[:rank])


def test_modp_kernel_basis_annihilates():
    rng = np.random.default_rng(4)
    A = rng.integers(0, 5, size=(4, 7)).astype(np.int64)
    B = kernels.modp_kernel_basis(A, 5)
    assert B.shape[0] == 7 - kernels.modp_rref(A.copy(), 5)[2]
    for v in B:
        assert np.all((A @ v) % 5 == 0)


def test_module_law_witness_matches_direct():
    alg = group_algebra(make_cyclic(4), Q)
    rho = np.empty((4, 4, 4), dtype=object)
    for i in range(4):
        rho[i] = alg.mu[:, i, :]
    assert kernels.module_law_witness(rho, alg.mu, Q) is None
    rho_bad = rho.copy()
    rho_bad[2] = rho[2].copy()
    rho_bad[2][0, 0] = Q.add(rho_bad[2][0, 0], Q.one)
    w = kernels.module_law_witness(rho_bad, alg.mu, Q)
    assert w is not None
    i, j = w
    lhs = Q.normalize(rho_bad[i] @ rho_bad[j])
    rhs = Q.normalize(np.tensordot(alg.mu[i, j], rho_bad, (0, 0)))
    assert not np.array_equal(lhs, rhs)


def test_module_law_scale_factors_cancel():
    # fractional module data must not confuse the cleared int64 path
    alg = group_algebra(make_cyclic(2), Q)
    rho = np.empty((2, 1, 1), dtype=object)
    rho[0] = Q.array([[1]])
    rho[1] = Q.array([[Fraction(-1, 1)]])
    assert kernels.module_law_witness(rho, alg.mu, Q) is None
    rho[1] = Q.array([[Fraction(1, 2)]])        # not a module: t.t = 1 != 1/4
    assert kernels.module_law_witness(rho, alg.mu, Q) is not None


def test_counit_triple_witness():
    alg = group_algebra(make_cyclic(3), Q)
    assert kernels.counit_triple_witness(alg.mu, alg.counit,
                                         alg.coproduct, Q) is None
    eps_bad = alg.counit.copy()
    eps_bad[1] = Q.zero
    assert kernels.counit_triple_witness(alg.mu, eps_bad,
                                         alg.coproduct, Q) is not None


def test_monomial_tables_detect_group_algebra():
    alg = group_algebra(make_dihedral(3), F5)
    mono = kernels.monomial_tables(alg.mu, F5)
    assert mono is not None
    pos, val = mono
    assert np.array_equal(pos, make_dihedral(3).table)
    assert np.all(val.astype(np.int64) == 1)
    dense = alg.mu.copy()
    dense[0, 0] = dense[0, 0].copy()
    dense[0, 0][1] = F5.one                  # two terms in one product
    assert kernels.monomial_tables(dense, F5) is None


@pytest.mark.parametrize("backend", BACKENDS, ids=["numpy", "numba"])
def test_unit_tuple_search_backend_parity(backend):
    # trivial compositor over GF(3) on K[Z/2]: 4 unit tuples (a_t)^2 = 1
    from hopfstrict.obstruction import ObstructionProblem, search_solutions
    from hopfstrict.actions import trivial_action
    grp = make_cyclic(2)
    act = trivial_action(grp, group_algebra(make_cyclic(2), Field.GF(3)))
    import hopfstrict.kernels as K
    old = K._BACKEND
    K._BACKEND = backend
    try:
        out = search_solutions(ObstructionProblem(act))
    finally:
        K._BACKEND = old
    assert len(out.solutions) == 4
    assert out.verified


def test_unit_tuple_search_overflow_cap():
    from hopfstrict.obstruction import ObstructionProblem, search_solutions
    from hopfstrict.actions import trivial_action
    act = trivial_action(make_cyclic(2), group_algebra(make_cyclic(2), Field.GF(5)))
    with pytest.raises(OverflowError):
        search_solutions(ObstructionProblem(act), max_solutions=2)


def test_backend_dispatch_names():
    assert kernels.backend_name() in ("numpy", "numba")
    with pytest.raises(ValueError):
        kernels.get_backend("cuda")
