"""Weak actions of a finite group on an algebra, gradings, and their checks.

A weak action is a family of automorphisms phi_g together with invertible
compositors c(g, h) measuring the failure of phi to be a homomorphism:
phi_g . phi_h = Inn_{c(g,h)} . phi_{gh}, with a twisted cocycle identity and
c(1,1) = 1.  Hopf compatibility additionally demands that each phi_g respect
the coalgebra and antipode and that the compositors be (right-)grouplike.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product as iproduct

import numpy as np

from . import linalg
from .algebras import AlgebraElement, StructuredAlgebra, group_algebra, \
    is_grouplike, is_right_grouplike
from .axioms import AxiomReport
from .fields import Field
from .groups import FiniteGroup, GroupExtension, make_cyclic, make_klein_four, \
    cocycle_from_section


@dataclass
class WeakGAction:
    """phi[g] are row-convention matrices, comp[g, h, :] compositor vectors."""

    group: FiniteGroup
    algebra: StructuredAlgebra
    phi: np.ndarray
    comp: np.ndarray

    def __post_init__(self):
        g, n = self.group.order, self.algebra.dim
        if self.phi.shape != (g, n, n):
            raise ValueError("phi must be (|G|, n, n)")
        if self.comp.shape != (g, g, n):
            raise ValueError("compositors must be (|G|, |G|, n)")
        self._comp_inv: dict[tuple[int, int], np.ndarray] = {}

    def apply(self, g: int, vec: np.ndarray) -> np.ndarray:
        return self.algebra.field.normalize(vec @ self.phi[g])

    def compositor(self, g: int, h: int) -> AlgebraElement:
        return AlgebraElement(self.algebra, self.comp[g, h].copy())

    def compositor_inv(self, g: int, h: int) -> np.ndarray:
        key = (g, h)
        if key not in self._comp_inv:
            inv = self.algebra.find_inverse(self.comp[g, h])
            if inv is None:
                from .algebras import NotInvertible
                raise NotInvertible(f"compositor c({g},{h}) is not invertible")
            self._comp_inv[key] = inv
        return self._comp_inv[key]

    def is_strict(self) -> bool:
        return all(np.array_equal(self.comp[g, h], self.algebra.unit)
                   for g in self.group.elements() for h in self.group.elements())


def trivial_action(group: FiniteGroup, algebra: StructuredAlgebra) -> WeakGAction:
    n = algebra.dim
    phi = np.empty((group.order, n, n), dtype=object)
    comp = np.empty((group.order, group.order, n), dtype=object)
    for g in group.elements():
        phi[g] = algebra.field.eye(n)
        for h in group.elements():
            comp[g, h] = algebra.unit.copy()
    return WeakGAction(group, algebra, phi, comp)


# ---------------------------------------------------------------------------
# checks


def _phi_is_algebra_map(alg: StructuredAlgebra, P: np.ndarray):
    """First (i, j) with phi(e_i e_j) != phi(e_i) phi(e_j), or None."""
    field = alg.field
    lhs = field.normalize(np.tensordot(alg.mu, P, axes=(2, 0)))
    t1 = np.tensordot(P, alg.mu, axes=(1, 0))          # (i, b, k)
    rhs = field.normalize(np.tensordot(P, t1, axes=(1, 1)).transpose(1, 0, 2))
    bad = np.argwhere(~np.all(lhs == rhs, axis=2))
    if bad.size:
        return (int(bad[0][0]), int(bad[0][1]))
    return None


def check_weak_action(action: WeakGAction) -> AxiomReport:
    report = AxiomReport()
    alg, grp = action.algebra, action.group
    field = alg.field

    witness = None
    for g in grp.elements():
        if not np.array_equal(field.normalize(alg.unit @ action.phi[g]), alg.unit):
            witness = (g,)
            break
    report.add("phi_unital", witness)

    witness = None
    for g in grp.elements():
        if not linalg.is_invertible(action.phi[g], field):
            witness = (g,)
            break
    report.add("phi_bijective", witness)

    witness = None
    for g in grp.elements():
        bad = _phi_is_algebra_map(alg, action.phi[g])
        if bad is not None:
            witness = (g,) + bad
            break
    report.add("phi_algebra_map", witness)

    witness = None
    for g, h in iproduct(grp.elements(), grp.elements()):
        if alg.find_inverse(action.comp[g, h]) is None:
            witness = (g, h)
            break
    report.add("compositors_invertible", witness)

    report.add("compositor_normalized",
               None if np.array_equal(action.comp[0, 0], alg.unit) else (0, 0))

    witness = None
    if report.get("compositors_invertible").passed:
        for g, h in iproduct(grp.elements(), grp.elements()):
            gh = grp.mul(g, h)
            lhs = field.normalize(action.phi[h] @ action.phi[g])
            inn = alg.left_mult_matrix(action.comp[g, h]) \
                @ alg.right_mult_matrix(action.compositor_inv(g, h))
            rhs = field.normalize(action.phi[gh] @ field.normalize(inn))
            if not np.array_equal(lhs, rhs):
                witness = (g, h)
                break
    report.add("inner_composition", witness,
               note="phi_g phi_h == Inn_c(g,h) phi_gh")

    witness = None
    for g, h, k in iproduct(grp.elements(), grp.elements(), grp.elements()):
        lhs = alg.multiply(action.apply(g, action.comp[h, k]),
                           action.comp[g, grp.mul(h, k)])
        rhs = alg.multiply(action.comp[g, h], action.comp[grp.mul(g, h), k])
        if not np.array_equal(lhs, rhs):
            witness = (g, h, k)
            break
    report.add("twisted_cocycle", witness)
    return report


def check_hopf_action(action: WeakGAction, weak: bool | None = None) -> AxiomReport:
    """Hopf compatibility.  weak=None detects from Delta(1): an honest
    bialgebra unit demands grouplike compositors, otherwise right-grouplike."""
    report = AxiomReport()
    alg, grp = action.algebra, action.group
    field = alg.field
    if not (alg.has_coalgebra and alg.has_antipode):
        raise ValueError("hopf-compatibility needs coproduct, counit and antipode")
    if weak is None:
        weak = not np.array_equal(alg.delta_matrix(alg.unit),
                                  field.normalize(np.outer(alg.unit, alg.unit)))

    witness = None
    for g in grp.elements():
        P = action.phi[g]
        for i in range(alg.dim):
            lhs = alg.delta_matrix(P[i])
            rhs = field.zeros(alg.dim, alg.dim)
            for coef, u, v in alg.coproduct[i]:
                rhs = rhs + coef * np.outer(P[u], P[v])
            if not np.array_equal(lhs, field.normalize(rhs)):
                witness = (g, i)
                break
        if witness:
            break
    report.add("phi_coalgebra_map", witness)

    witness = None
    for g in grp.elements():
        if not np.array_equal(field.normalize(action.phi[g] @ alg.counit), alg.counit):
            witness = (g,)
            break
    report.add("phi_counit_invariant", witness)

    witness = None
    for g in grp.elements():
        lhs = field.normalize(alg.antipode @ action.phi[g])
        rhs = field.normalize(action.phi[g] @ alg.antipode)
        if not np.array_equal(lhs, rhs):
            witness = (g,)
            break
    report.add("phi_antipode_commutes", witness)

    witness = None
    test = is_right_grouplike if weak else is_grouplike
    for g, h in iproduct(grp.elements(), grp.elements()):
        if not test(alg, action.comp[g, h]):
            witness = (g, h)
            break
    report.add("compositors_right_grouplike" if weak else "compositors_grouplike",
               witness)
    return report


# ---------------------------------------------------------------------------
# gradings


@dataclass
class GGrading:
    """Assignment of a group degree to each basis vector."""

    group: FiniteGroup
    algebra: StructuredAlgebra
    degrees: np.ndarray

    def __post_init__(self):
        self.degrees = np.ascontiguousarray(self.degrees, dtype=np.int64)
        if self.degrees.shape != (self.algebra.dim,):
            raise ValueError("one degree per basis vector")
        if self.degrees.min() < 0 or self.degrees.max() >= self.group.order:
            raise ValueError("degrees out of range")

    def homogeneous_indices(self, g: int) -> np.ndarray:
        return np.nonzero(self.degrees == g)[0]

    def projector(self, g: int) -> np.ndarray:
        field = self.algebra.field
        out = field.zeros(self.algebra.dim, self.algebra.dim)
        for i in self.homogeneous_indices(g):
            out[i, i] = field.one
        return out

    def component(self, vec: np.ndarray, g: int) -> np.ndarray:
        out = self.algebra.field.zeros(self.algebra.dim)
        idx = self.homogeneous_indices(g)
        out[idx] = vec[idx]
        return out


def trivial_grading(group: FiniteGroup, algebra: StructuredAlgebra) -> GGrading:
    return GGrading(group, algebra, np.zeros(algebra.dim, dtype=np.int64))


def check_g_grading(grading: GGrading, action: WeakGAction | None = None) -> AxiomReport:
    """Direct-sum algebra decomposition, conjugation compatibility of phi,
    Delta compatibility, and the derived counit/antipode facts."""
    report = AxiomReport()
    alg, grp = grading.algebra, grading.group
    field = alg.field
    deg = grading.degrees
    n = alg.dim

    witness = None
    for i, j in iproduct(range(n), range(n)):
        support = np.nonzero(alg.mu[i, j, :] != field.zero)[0]
        if deg[i] != deg[j]:
            if support.size:
                witness = (i, j)
                break
        elif any(deg[k] != deg[i] for k in support):
            witness = (i, j)
            break
    report.add("component_product", witness,
               note="A_g A_h == 0 for g != h; A_g A_g inside A_g")

    witness = None
    for g in grp.elements():
        ug = grading.component(alg.unit, g)
        for i in grading.homogeneous_indices(g):
            e = field.zeros(n)
            e[i] = field.one
            if not (np.array_equal(alg.multiply(ug, e), e)
                    and np.array_equal(alg.multiply(e, ug), e)):
                witness = (g, int(i))
                break
        if witness:
            break
    report.add("component_units", witness)

    if action is not None:
        witness = None
        for g in grp.elements():
            for i in range(n):
                target = grp.mul(grp.mul(g, int(deg[i])), grp.inv(g))
                support = np.nonzero(action.phi[g][i] != field.zero)[0]
                if any(deg[k] != target for k in support):
                    witness = (g, i)
                    break
            if witness:
                break
        report.add("phi_conjugates_degrees", witness,
                   note="phi_g(A_h) inside A_{g h g^-1}")

    if alg.coproduct is not None:
        witness = None
        for i in range(n):
            for coef, u, v in alg.coproduct[i]:
                if coef != field.zero and grp.mul(int(deg[u]), int(deg[v])) != deg[i]:
                    witness = (i,)
                    break
            if witness:
                break
        report.add("coproduct_respects_degrees", witness)

    if alg.counit is not None:
        witness = None
        for i in range(n):
            if deg[i] != 0 and alg.counit[i] != field.zero:
                witness = (i,)
                break
        report.add("counit_off_identity_degree", witness,
                   note="eps vanishes outside degree 1")

    if alg.antipode is not None:
        witness = None
        for i in range(n):
            target = grp.inv(int(deg[i]))
            support = np.nonzero(alg.antipode[i] != field.zero)[0]
            if any(deg[k] != target for k in support):
                witness = (i,)
                break
        report.add("antipode_inverts_degrees", witness)
    return report


# ---------------------------------------------------------------------------
# bundles


@dataclass
class GHopfAlgebra:
    """An algebra with a weak G-action and a G-grading, checked as one unit."""

    algebra: StructuredAlgebra
    action: WeakGAction
    grading: GGrading | None = None

    @property
    def group(self) -> FiniteGroup:
        return self.action.group


def check_g_hopf(bundle: GHopfAlgebra, weak: bool | None = None) -> AxiomReport:
    report = check_weak_action(bundle.action)
    if bundle.algebra.has_coalgebra and bundle.algebra.has_antipode:
        report.extend(check_hopf_action(bundle.action, weak=weak))
    if bundle.grading is not None:
        report.extend(check_g_grading(bundle.grading, bundle.action))
    return report


# ---------------------------------------------------------------------------
# constructions


def weak_action_from_extension(ext: GroupExtension, field: Field) -> WeakGAction:
    """The action of E/N on K[N]: phi by conjugation along the section,
    compositors the section 2-cocycle (as group basis vectors)."""
    cocycle = cocycle_from_section(ext)
    alg = group_algebra(ext.kernel, field)
    grp = ext.quotient
    n = alg.dim
    phi = np.empty((grp.order, n, n), dtype=object)
    comp = np.empty((grp.order, grp.order, n), dtype=object)
    for g in grp.elements():
        mat = field.zeros(n, n)
        for a in range(n):
            mat[a, cocycle.conj[g, a]] = field.one
        phi[g] = mat
        for h in grp.elements():
            vec = field.zeros(n)
            vec[cocycle.cocycle[g, h]] = field.one
            comp[g, h] = vec
    return WeakGAction(grp, alg, phi, comp)


def counterexample_action(field: Field) -> WeakGAction:
    """The hard-coded Klein-four action on K[Z/2] with identity phi and the
    non-split compositor table (c(g,h) = t exactly for g in {t1, t2} and
    h in {t1, t1t2}).  Kept independent of the extension pipeline so the two
    constructions can be cross-checked.
    """
    grp = make_klein_four()
    alg = group_algebra(make_cyclic(2), field)
    phi = np.empty((4, 2, 2), dtype=object)
    comp = np.empty((4, 4, 2), dtype=object)
    t = field.zeros(2)
    t[1] = field.one
    for g in range(4):
        phi[g] = field.eye(2)
        for h in range(4):
            nontrivial = g in (1, 2) and h in (1, 3)
            comp[g, h] = t.copy() if nontrivial else alg.unit.copy()
    return WeakGAction(grp, alg, phi, comp)
