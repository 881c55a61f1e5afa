"""Weak G-actions, Hopf compatibility, gradings, and the bundled checks."""

import numpy as np
import pytest

from hopfstrict import groups
from hopfstrict.actions import (
    GGrading,
    GHopfAlgebra,
    WeakGAction,
    check_g_grading,
    check_g_hopf,
    check_hopf_action,
    check_weak_action,
    counterexample_action,
    trivial_action,
    trivial_grading,
    weak_action_from_extension,
)
from hopfstrict.algebras import NotInvertible, function_algebra, group_algebra
from hopfstrict.fields import Field
from hopfstrict.groups import extension_d4, extension_from_normal

Q = Field.Q()
F5 = Field.GF(5)

Z2 = groups.make_cyclic(2)
Z4 = groups.make_cyclic(4)
D4 = groups.make_dihedral(4)


def z4_extension_action(field):
    """Z/2 acting on K[Z/2] from Z/4: identity phi, c(t,t) = x."""
    return weak_action_from_extension(extension_from_normal(Z4, [0, 2]), field)


# -- basics -------------------------------------------------------------------


def test_trivial_action_is_strict():
    act = trivial_action(Z2, group_algebra(D4, Q))
    assert act.is_strict()
    assert check_weak_action(act).passed
    assert check_hopf_action(act).passed
    x = Q.array([1, 2, 0, 0, 0, 0, 0, 1])
    assert np.array_equal(act.apply(1, x), x)


def test_shape_validation():
    alg = group_algebra(Z2, Q)
    with pytest.raises(ValueError):
        WeakGAction(Z2, alg, Q.zeros(3, 2, 2), Q.zeros(2, 2, 2))
    with pytest.raises(ValueError):
        WeakGAction(Z2, alg, Q.zeros(2, 2, 2), Q.zeros(2, 2, 3))


def test_compositor_accessors():
    act = z4_extension_action(Q)
    c = act.compositor(1, 1)
    assert list(c.vec) == [0, 1]
    # x is its own inverse in K[Z/2]
    assert list(act.compositor_inv(1, 1)) == [0, 1]
    act.comp[1, 1] = Q.array([1, 1])
    act._comp_inv.clear()
    with pytest.raises(NotInvertible):
        act.compositor_inv(1, 1)


# -- the Klein-four example ----------------------------------------------------


def test_klein_four_action_two_constructions_agree():
    built = weak_action_from_extension(extension_d4(), Q)
    fixed = counterexample_action(Q)
    assert all(np.array_equal(built.phi[g], fixed.phi[g]) for g in range(4))
    assert all(np.array_equal(built.comp[g, h], fixed.comp[g, h])
               for g in range(4) for h in range(4))


@pytest.mark.parametrize("field", [Q, F5], ids=["Q", "F5"])
def test_klein_four_action_passes(field):
    act = counterexample_action(field)
    assert not act.is_strict()
    rep = check_weak_action(act)
    assert rep.passed
    assert [c.name for c in rep.checks] == [
        "phi_unital", "phi_bijective", "phi_algebra_map",
        "compositors_invertible", "compositor_normalized",
        "inner_composition", "twisted_cocycle"]
    hopf = check_hopf_action(act)
    assert hopf.passed
    # K[Z/2] is an honest Hopf algebra, so the strong grouplike test applies
    assert hopf.get("compositors_grouplike").passed


def test_klein_four_compositor_table():
    act = counterexample_action(Q)
    t = [0, 1]
    unit = [1, 0]
    for g in range(4):
        for h in range(4):
            expected = t if (g in (1, 2) and h in (1, 3)) else unit
            assert list(act.comp[g, h]) == expected


# -- derived facts ---------------------------------------------------------------


def test_identity_slot_is_forced():
    # phi_1 = id and c(1, k) = c(k, 1) = 1 hold in every passing action
    for act in (counterexample_action(Q), z4_extension_action(Q)):
        assert check_weak_action(act).passed
        assert np.array_equal(act.phi[0], Q.eye(act.algebra.dim))
        for k in act.group.elements():
            assert np.array_equal(act.comp[0, k], act.algebra.unit)
            assert np.array_equal(act.comp[k, 0], act.algebra.unit)


def test_strict_action_with_nontrivial_phi():
    # D4 over its rotation subgroup: the section is a reflection, so phi
    # inverts rotations while all compositors stay 1
    act = weak_action_from_extension(extension_from_normal(D4, [0, 1, 2, 3]), Q)
    assert act.is_strict()
    assert check_weak_action(act).passed
    assert not np.array_equal(act.phi[1], Q.eye(4))


# -- mutations -------------------------------------------------------------------


def test_broken_normalization():
    act = counterexample_action(Q)
    act.comp[0, 0] = Q.array([0, 1])
    rep = check_weak_action(act)
    assert not rep.get("compositor_normalized").passed


def test_noninvertible_compositor():
    act = counterexample_action(Q)
    act.comp[1, 1] = Q.array([1, 1])
    rep = check_weak_action(act)
    assert rep.get("compositors_invertible").witness == (1, 1)


def test_sign_twist_breaks_cocycle_only():
    # t -> -t is a perfectly good algebra automorphism of K[Z/2]; composing
    # it into the Z/4 action keeps every pointwise law but kills the cocycle
    act = z4_extension_action(Q)
    act.phi[1] = Q.array([[1, 0], [0, -1]])
    rep = check_weak_action(act)
    assert [(c.name, c.witness) for c in rep.failures()] == [
        ("twisted_cocycle", (1, 1, 1))]
    hopf = check_hopf_action(act)
    assert {c.name for c in hopf.failures()} == {
        "phi_coalgebra_map", "phi_counit_invariant"}


def test_hopf_check_needs_structure():
    act = trivial_action(Z2, group_algebra(Z2, Q))
    act.algebra.antipode = None
    with pytest.raises(ValueError):
        check_hopf_action(act)


# -- gradings --------------------------------------------------------------------


def test_grading_validation():
    alg = function_algebra(Z4, Q)
    with pytest.raises(ValueError):
        GGrading(Z4, alg, np.array([0, 1, 2]))
    with pytest.raises(ValueError):
        GGrading(Z4, alg, np.array([0, 1, 2, 4]))


def test_grading_accessors():
    alg = function_algebra(Z4, Q)
    gr = GGrading(Z4, alg, np.array([0, 1, 2, 3]))
    assert list(gr.homogeneous_indices(2)) == [2]
    v = Q.array([5, 6, 7, 8])
    assert list(gr.component(v, 1)) == [0, 6, 0, 0]
    P = gr.projector(1)
    assert np.array_equal(Q.normalize(v @ P), gr.component(v, 1))


def test_function_algebra_grading_passes():
    # K(G) graded by deg(d_g) = g is the motivating valid example
    alg = function_algebra(Z4, Q)
    gr = GGrading(Z4, alg, np.array([0, 1, 2, 3]))
    rep = check_g_grading(gr, trivial_action(Z4, alg))
    assert rep.passed
    assert [c.name for c in rep.checks] == [
        "component_product", "component_units", "phi_conjugates_degrees",
        "coproduct_respects_degrees", "counit_off_identity_degree",
        "antipode_inverts_degrees"]


def test_trivial_grading_passes():
    alg = group_algebra(D4, F5)
    rep = check_g_grading(trivial_grading(Z2, alg))
    assert rep.passed


def test_collapsed_grading_fails_coproduct():
    alg = function_algebra(Z4, Q)
    gr = GGrading(Z4, alg, np.array([0, 0, 1, 1]))
    rep = check_g_grading(gr, trivial_action(Z4, alg))
    assert rep.get("coproduct_respects_degrees").witness == (0,)
    assert rep.get("antipode_inverts_degrees").witness == (1,)


def test_group_algebra_rejects_nontrivial_grading():
    # 1 * x crosses components, the degree-1 component has no unit, and
    # eps(x) = 1 != 0
    alg = group_algebra(Z2, Q)
    rep = check_g_grading(GGrading(Z2, alg, np.array([0, 1])))
    assert rep.get("component_product").witness == (0, 1)
    assert rep.get("component_units").witness == (1, 1)
    assert rep.get("coproduct_respects_degrees").witness == (1,)
    assert rep.get("counit_off_identity_degree").witness == (1,)


# -- bundle ----------------------------------------------------------------------


def test_check_g_hopf_bundle():
    alg = group_algebra(Z2, Q)
    act = counterexample_action(Q)
    bundle = GHopfAlgebra(alg, act, trivial_grading(act.group, alg))
    assert bundle.group is act.group
    rep = check_g_hopf(bundle)
    assert rep.passed
    names = {c.name for c in rep.checks}
    assert {"twisted_cocycle", "compositors_grouplike", "component_product"} <= names
