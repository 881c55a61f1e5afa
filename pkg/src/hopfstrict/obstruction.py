"""Exhaustive search for unit families trivializing a compositor, and the
finite replay of why the dihedral compositor admits none.

The question: given a weak action whose automorphism parts are all the
identity, do units a_g of the algebra exist with

    a_{gh} c(g,h) = a_g a_h   for all g, h?

If yes the compositor is a coboundary and the action can be regauged to a
strict one on the same algebra.  `search_solutions` settles this over a
finite field by complete enumeration; `forced_constraint_replay` explains
the negative answer for the Klein-four dihedral compositor by elementary
forced steps that work over any field.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

import numpy as np

from . import kernels
from .actions import WeakGAction
from .algebras import CarrierTooLarge, FieldNotEnumerable, StructuredAlgebra
from .groups import FiniteGroup


class WrongShape(ValueError):
    pass


@dataclass
class ObstructionProblem:
    """A compositor-trivialization instance; the action must have identity
    automorphism parts so the constraint really is the one above."""

    action: WeakGAction

    def __post_init__(self):
        alg = self.action.algebra
        eye = alg.field.eye(alg.dim)
        for g in self.action.group.elements():
            if not np.array_equal(self.action.phi[g], eye):
                raise WrongShape(f"phi[{g}] is not the identity")

    @property
    def algebra(self) -> StructuredAlgebra:
        return self.action.algebra

    @property
    def group(self) -> FiniteGroup:
        return self.action.group


def enumerate_units(alg: StructuredAlgebra, max_carrier: int = 200_000):
    """All invertible elements, as a list of coefficient vectors in a fixed
    enumeration order (base-p digits, least significant coordinate first)."""
    field = alg.field
    if not field.is_prime_field:
        raise FieldNotEnumerable("unit enumeration needs a finite prime field")
    p = field.characteristic
    total = p ** alg.dim
    if total > max_carrier:
        raise CarrierTooLarge(
            f"{total} candidate vectors exceed the cap {max_carrier}")
    units = []
    vec = np.zeros(alg.dim, dtype=object)
    for code in range(total):
        c = code
        for i in range(alg.dim):
            vec[i] = c % p
            c //= p
        if alg.find_inverse(vec) is not None:
            units.append(vec.copy())
    return units


@dataclass
class SearchOutcome:
    solutions: list[tuple]       # tuples of unit coefficient vectors, a_g per g
    units_seen: int
    verified: bool = True
    notes: list[str] = dc_field(default_factory=list)


def search_solutions(problem: ObstructionProblem, max_carrier: int = 200_000,
                     max_solutions: int = 200_000) -> SearchOutcome:
    """Complete enumeration of solutions over a finite prime field.

    Index tables keep the inner loop in integers; every returned tuple is
    re-verified against the actual algebra product afterwards, so a bug in
    the table construction cannot fake a solution.
    """
    alg = problem.algebra
    grp = problem.group
    field = alg.field
    units = enumerate_units(alg, max_carrier)
    index = {tuple(int(x) for x in u): i for i, u in enumerate(units)}

    nu = len(units)
    umul = np.empty((nu, nu), dtype=np.int64)
    for i in range(nu):
        for j in range(nu):
            prod = alg.multiply(units[i], units[j])
            umul[i, j] = index[tuple(int(x) for x in prod)]

    one_idx = index.get(tuple(int(x) for x in alg.unit))
    if one_idx is None:
        raise ValueError("unit element missing from the unit list")
    cidx = np.empty((grp.order, grp.order), dtype=np.int64)
    for g in grp.elements():
        for h in grp.elements():
            key = tuple(int(x) for x in field.normalize(problem.action.comp[g, h]))
            if key not in index:
                raise ValueError(f"compositor c({g},{h}) is not a unit")
            cidx[g, h] = index[key]

    raw = kernels.unit_tuple_search(umul, cidx, grp.table, one_idx, max_solutions)
    solutions = []
    for tup in raw:
        vecs = tuple(units[i] for i in tup)
        for g in grp.elements():
            for h in grp.elements():
                lhs = alg.multiply(vecs[grp.mul(g, h)],
                                   field.normalize(problem.action.comp[g, h]))
                rhs = alg.multiply(vecs[g], vecs[h])
                if not np.array_equal(lhs, rhs):
                    raise AssertionError(
                        f"search returned a non-solution at pair ({g},{h})")
        solutions.append(vecs)
    return SearchOutcome(solutions=solutions, units_seen=nu)


@dataclass
class ReplayResult:
    contradiction: bool
    lhs: np.ndarray              # what c forces a_{t1}^2 to be
    rhs: np.ndarray              # what c says directly
    steps: list[str]
    characteristic_note: str = ""


def forced_constraint_replay(problem: ObstructionProblem) -> ReplayResult:
    """Field-independent derivation for Klein-four over a commutative algebra.

    a_1 = 1 is forced; squaring a_{t1t2} = a_{t1} a_{t2} c(t1,t2)^{-1} and
    using a_g^2 = c(g,g) for each involution pins c(t1,t1) two ways.  A
    mismatch rules out solutions over every field where the derivation is
    valid (characteristic 2 collapses the relevant unit distinction and is
    flagged, not decided, here).
    """
    alg = problem.algebra
    grp = problem.group
    field = alg.field
    if grp.order != 4 or not grp.exponent_two():
        raise WrongShape("replay needs the Klein four-group")
    if kernels.associativity_witness(alg.mu, field) is not None:
        raise WrongShape("replay needs an associative algebra")
    for i in range(alg.dim):
        for j in range(alg.dim):
            if not np.array_equal(alg.mu[i, j], alg.mu[j, i]):
                raise WrongShape("replay needs a commutative algebra")

    t1, t2, t12 = 1, 2, 3
    if grp.mul(t1, t2) != t12:
        raise WrongShape("element order must be 1, t1, t2, t1t2")
    c = lambda g, h: field.normalize(problem.action.comp[g, h])
    inv = alg.find_inverse(c(t2, t2))
    if inv is None:
        raise WrongShape("compositor values must be units")
    c12sq = alg.multiply(c(t1, t2), c(t1, t2))
    lhs = alg.multiply(alg.multiply(c(t12, t12), c12sq), inv)
    rhs = c(t1, t1)
    steps = [
        "a_1 c(1,1) = a_1 a_1 and c(1,1) = 1 force a_1 = 1",
        "g = h an involution gives a_g^2 = c(g,g)",
        "g = t1, h = t2: a_{t1t2} = a_{t1} a_{t2} c(t1,t2)^{-1}",
        "square it (commutativity): c(t1t2,t1t2) = c(t1,t1) c(t2,t2) c(t1,t2)^{-2}",
        "so any solution needs c(t1t2,t1t2) c(t1,t2)^2 c(t2,t2)^{-1} = c(t1,t1)",
        f"left side  = {_fmt(alg, lhs)}",
        f"right side = {_fmt(alg, rhs)}",
    ]
    note = ""
    if field.characteristic == 2:
        note = ("characteristic 2 is outside the argument's scope; "
                "the mismatch below is reported but not interpreted")
    contradiction = not np.array_equal(lhs, rhs)
    steps.append("forced values disagree: no unit family exists"
                 if contradiction else
                 "forced values agree: the derivation finds no obstruction")
    return ReplayResult(contradiction=contradiction, lhs=lhs, rhs=rhs,
                        steps=steps, characteristic_note=note)


def _fmt(alg: StructuredAlgebra, vec: np.ndarray) -> str:
    field = alg.field
    parts = []
    for i in range(alg.dim):
        if vec[i] != field.zero:
            coef = field.format(vec[i])
            parts.append(f"{coef}*{alg.labels[i]}" if coef != "1" else alg.labels[i])
    return " + ".join(parts) if parts else "0"
