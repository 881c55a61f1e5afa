"""Modules, hom spaces, tensor carriers, and the equivalence data.

The workhorse fixture is the Z/2 action on K[Z/2] carved out of Z/4, whose
strictification has dimension 8: small enough that every coherence sweep runs
in milliseconds, rich enough that the compositor c(t, t) = x is nontrivial.
"""

import numpy as np
import pytest

from hopfstrict import groups
from hopfstrict import modules as M
from hopfstrict.actions import GGrading, GHopfAlgebra, trivial_action, \
    weak_action_from_extension
from hopfstrict.algebras import StructuredAlgebra, function_algebra, group_algebra
from hopfstrict.fields import Field
from hopfstrict.groups import extension_from_normal
from hopfstrict.modules import (
    ModuleMorphism,
    ModuleNotHomogeneous,
    ModuleRep,
    NotAMorphism,
    TensorUnit,
    alpha_coherence_witness,
    alpha_iso,
    check_module,
    conjugate_module,
    eta0_iso,
    eta2_iso,
    eta2_triple_coherence,
    functor_on_morphism,
    functor_on_object,
    grading_respected,
    hom_space,
    module_degree_witness,
    psi_coherence_witness,
    psi_iso,
    regular_module,
    tensor_modules,
    tensor_morphism,
    theta_iso,
    trivial_module,
    twist_module,
    unit_component,
)
from hopfstrict.strictify import strictify

F7 = Field.GF(7)
Q = Field.Q()
Z4 = groups.make_cyclic(4)


@pytest.fixture(scope="module")
def setup():
    """action, strictification, and the three small modules over F_7."""
    act = weak_action_from_extension(extension_from_normal(Z4, [0, 2]), F7)
    s = strictify(act, verify=False)
    A = act.algebra
    reg = regular_module(A)
    triv = trivial_module(A)                       # t acts as +1
    sign = ModuleRep(A, np.array([[[1]], [[6]]], dtype=object), label="sign")
    return act, s, reg, triv, sign


# -- module basics -------------------------------------------------------------


def test_check_module(setup):
    _, _, reg, triv, sign = setup
    for mod in (reg, triv, sign):
        rep = check_module(mod)
        assert rep.passed
        assert [c.name for c in rep.checks] == ["module_unit", "module_law"]


def test_regular_module_is_right_multiplication(setup):
    act, _, reg, _, _ = setup
    A = act.algebra
    x = F7.array([3, 4])
    assert np.array_equal(reg.rho_of(x), A.right_mult_matrix(x))
    m = F7.array([1, 2])
    assert np.array_equal(reg.act(m, x), A.multiply(m, x))


def test_broken_modules_are_witnessed(setup):
    act, _, _, _, _ = setup
    A = act.algebra
    # t |-> 2 squares to 4 != 1, so the module law fails at (t, t)
    bad = ModuleRep(A, np.array([[[1]], [[2]]], dtype=object))
    rep = check_module(bad)
    assert rep.get("module_unit").passed
    assert not rep.get("module_law").passed
    # scaling the unit action breaks module_unit
    bad2 = ModuleRep(A, np.array([[[2]], [[1]]], dtype=object))
    assert not check_module(bad2).get("module_unit").passed


def test_trivial_module_needs_counit():
    bare = StructuredAlgebra(Q, group_algebra(groups.make_cyclic(2), Q).mu,
                             Q.array([1, 0]))
    with pytest.raises(ValueError):
        trivial_module(bare)


def test_conjugate_module_is_isomorphic(setup):
    _, _, reg, _, _ = setup
    t = F7.array([[1, 2], [3, 1]])                 # det = 1 - 6 = 2, invertible
    conj = conjugate_module(reg, t)
    assert check_module(conj).passed
    iso = ModuleMorphism(reg, conj, t).require_morphism()
    assert iso.is_invertible()
    back = iso.then(iso.inverse())
    assert np.array_equal(back.matrix, F7.eye(2))


# -- morphisms -------------------------------------------------------------------


def test_hom_dimensions(setup):
    _, _, reg, triv, sign = setup
    assert len(hom_space(reg, reg)) == 2
    assert len(hom_space(triv, triv)) == 1
    assert len(hom_space(triv, sign)) == 0
    assert len(hom_space(reg, triv)) == 1
    assert len(hom_space(reg, sign)) == 1
    for f in hom_space(reg, reg):
        assert f.intertwiner_witness() is None


def test_not_a_morphism(setup):
    _, _, reg, _, sign = setup
    bad = ModuleMorphism(reg, sign, F7.array([[1], [1]]))
    assert bad.intertwiner_witness() == (1,)
    with pytest.raises(NotAMorphism):
        bad.require_morphism()


def test_left_multiplication_intertwines_regular(setup):
    act, _, reg, _, _ = setup
    A = act.algebra
    f = ModuleMorphism(reg, reg, A.left_mult_matrix(F7.array([2, 5])))
    assert f.require_morphism() is f


# -- twisting and alpha ------------------------------------------------------------


def test_twist_by_identity_phi_is_same_rho(setup):
    act, _, reg, _, _ = setup
    tw = twist_module(1, reg, act)
    assert np.array_equal(tw.rho, reg.rho)         # phi is the identity here


def test_twist_with_nontrivial_phi():
    d4 = groups.make_dihedral(4)
    act = weak_action_from_extension(extension_from_normal(d4, [0, 1, 2, 3]), Q)
    reg = regular_module(act.algebra)
    tw = twist_module(1, reg, act)
    assert check_module(tw).passed
    assert not np.array_equal(tw.rho, reg.rho)
    assert alpha_coherence_witness(reg, act) is None


def test_alpha_is_an_isomorphism(setup):
    act, _, reg, _, _ = setup
    a = alpha_iso(1, 1, reg, act)
    assert a.require_morphism().is_invertible()
    # c(t, t) = x acts by the regular representation of x
    assert np.array_equal(a.matrix, reg.rho_of(act.comp[1, 1]))
    assert alpha_coherence_witness(reg, act) is None


# -- tensor products ---------------------------------------------------------------


def test_tensor_over_hopf_is_full_space(setup):
    _, _, reg, _, sign = setup
    td = tensor_modules(sign, sign)
    assert td.module.dim == 1
    assert np.array_equal(td.basis, F7.array([[1]]))
    # sign (x) sign = trivial: t acts as (-1)(-1) = 1
    assert td.module.rho[1][0, 0] == 1
    td2 = tensor_modules(reg, sign)
    assert td2.module.dim == 2
    assert check_module(td2.module).passed


def test_tensor_over_weak_is_proper_carrier(setup):
    _, s, reg, _, _ = setup
    freg = functor_on_object(s, reg)
    td = tensor_modules(freg, freg)
    assert td.ambient_dim == 16
    assert td.module.dim == 8                     # m n |G|, not m n |G|^2
    assert check_module(td.module).passed
    with pytest.raises(ValueError):
        td.coords_rows(F7.eye(16))                # full ambient leaves the carrier


def test_tensor_morphism_of_identities(setup):
    _, _, reg, _, sign = setup
    td = tensor_modules(reg, sign)
    ids = ModuleMorphism(reg, reg, F7.eye(2))
    idt = ModuleMorphism(sign, sign, F7.eye(1))
    f = tensor_morphism(td, td, ids, idt)
    assert np.array_equal(f.matrix, F7.eye(td.module.dim))
    assert f.require_morphism() is f


# -- functor, theta, and unit component ----------------------------------------------


def test_functor_on_object(setup):
    _, s, reg, triv, sign = setup
    freg = functor_on_object(s, reg)
    assert freg.dim == 4
    assert check_module(freg).passed
    assert len(hom_space(freg, freg)) == len(hom_space(reg, reg))
    fsign = functor_on_object(s, sign)
    assert len(hom_space(fsign, functor_on_object(s, triv))) == 0


def test_functor_rejects_foreign_module(setup):
    _, s, _, _, _ = setup
    other = regular_module(group_algebra(groups.make_cyclic(3), F7))
    with pytest.raises(ValueError):
        functor_on_object(s, other)


def test_functor_on_morphism(setup):
    act, s, reg, _, _ = setup
    A = act.algebra
    f = ModuleMorphism(reg, reg, A.left_mult_matrix(F7.array([2, 5])))
    freg = functor_on_object(s, reg)
    ff = functor_on_morphism(s, f, freg, freg)
    assert ff.require_morphism() is ff
    assert ff.matrix.shape == (4, 4)


def test_unit_component_and_theta(setup):
    _, s, _, _, _ = setup
    n = regular_module(s.algebra)
    comp = unit_component(s, n)
    assert comp.module.dim == 4                    # the d_1 block of the strict regular
    assert check_module(comp.module).passed
    t, tinv = theta_iso(s, n, comp)
    assert t.intertwiner_witness() is None
    assert tinv.intertwiner_witness() is None
    assert np.array_equal(t.then(tinv).matrix, F7.eye(8))
    assert np.array_equal(tinv.then(t).matrix, F7.eye(8))


def test_theta_recovers_functor_image(setup):
    # for N = F(M) the unit component is isomorphic to M itself
    _, s, reg, _, _ = setup
    freg = functor_on_object(s, reg)
    comp = unit_component(s, freg)
    assert comp.module.dim == reg.dim
    assert len(hom_space(comp.module, reg)) == len(hom_space(reg, reg))
    t, tinv = theta_iso(s, freg, comp)
    assert np.array_equal(t.then(tinv).matrix, F7.eye(4))
    assert np.array_equal(tinv.then(t).matrix, F7.eye(4))


# -- structure isomorphisms -----------------------------------------------------------


def test_eta0(setup):
    _, s, _, _, _ = setup
    e0 = eta0_iso(s)
    assert e0.require_morphism().is_invertible()
    assert e0.matrix.shape == (2, 2)


def test_eta2(setup):
    _, s, reg, _, sign = setup
    e2, src, tgt_input = eta2_iso(s, reg, sign)
    assert e2.require_morphism().is_invertible()
    assert src.module.dim == 4                     # 2 * 1 * |G|
    assert tgt_input.module.dim == 2


def test_eta2_triple_coherence(setup):
    _, s, reg, triv, sign = setup
    assert eta2_triple_coherence(s, reg, sign, triv)
    assert eta2_triple_coherence(s, sign, sign, sign)


def test_psi(setup):
    _, s, reg, _, _ = setup
    p = psi_iso(s, 1, reg)
    assert p.require_morphism().is_invertible()
    assert psi_coherence_witness(s, reg) is None


def test_tensor_unit_module(setup):
    _, s, _, _, _ = setup
    tu = TensorUnit.build(s.algebra)
    assert tu.subalgebra.dim == 2
    assert check_module(tu.module).passed


# -- gradings ---------------------------------------------------------------------------


def test_trivially_graded_modules_have_degree_zero(setup):
    act, s, reg, _, _ = setup
    grading = s.source.grading
    assert module_degree_witness(reg, grading, 0) is None
    assert module_degree_witness(reg, grading, 1) == (0,)
    rep = grading_respected(s, reg, 0)
    assert rep.passed
    with pytest.raises(ModuleNotHomogeneous):
        grading_respected(s, reg, 1)


def test_graded_input_module_degree():
    # K(Z/2) graded by the point supports; the evaluation module at x is
    # concentrated in degree 1
    z2 = groups.make_cyclic(2)
    fa = function_algebra(z2, Q)
    bundle = GHopfAlgebra(fa, trivial_action(z2, fa),
                          GGrading(z2, fa, np.array([0, 1])))
    s = strictify(bundle, verify=False)
    point = ModuleRep(fa, np.array([[[0]], [[1]]], dtype=object), label="ev_x")
    assert check_module(point).passed
    assert module_degree_witness(point, bundle.grading, 1) is None
    rep = grading_respected(s, point, 1)
    assert rep.passed
    with pytest.raises(ModuleNotHomogeneous):
        grading_respected(s, point, 0)
