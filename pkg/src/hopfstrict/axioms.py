"""Executable law suites: algebra, coalgebra, (weak) bialgebra, antipode.

Every check sweeps basis tuples exactly and reports the first witness on
failure.  The hot sweeps (associativity, weak counit triples) run through the
kernel dispatcher; everything else is small.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

import numpy as np

from . import kernels
from .algebras import StructuredAlgebra, epsilon_s, epsilon_t
from .fields import Scalar


@dataclass
class CheckResult:
    name: str
    passed: bool
    witness: tuple | None = None
    note: str = ""

    def line(self) -> str:
        status = "ok" if self.passed else "FAIL"
        extra = f" witness={self.witness}" if self.witness is not None else ""
        note = f" ({self.note})" if self.note else ""
        return f"{self.name}: {status}{extra}{note}"


@dataclass
class AxiomReport:
    checks: list[CheckResult] = dc_field(default_factory=list)
    flags: dict[str, bool] = dc_field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list[CheckResult]:
        return [c for c in self.checks if not c.passed]

    def get(self, name: str) -> CheckResult:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def add(self, name: str, witness, note: str = "") -> CheckResult:
        res = CheckResult(name, witness is None, witness, note)
        self.checks.append(res)
        return res

    def extend(self, other: "AxiomReport", prefix: str = ""):
        if prefix:
            self.checks.extend(
                CheckResult(prefix + c.name, c.passed, c.witness, c.note)
                for c in other.checks)
        else:
            self.checks.extend(other.checks)
        self.flags.update(other.flags)

    def lines(self) -> list[str]:
        return [c.line() for c in self.checks]


# ---------------------------------------------------------------------------
# algebra laws


def check_algebra(alg: StructuredAlgebra) -> AxiomReport:
    report = AxiomReport()
    field = alg.field
    left = field.normalize(np.tensordot(alg.unit, alg.mu, axes=(0, 0)))
    right = field.normalize(np.tensordot(alg.unit, alg.mu, axes=(0, 1)))
    eye = field.eye(alg.dim)
    witness = None
    if not np.array_equal(left, eye):
        witness = tuple(int(x) for x in np.argwhere(left != eye)[0][:1])
    elif not np.array_equal(right, eye):
        witness = tuple(int(x) for x in np.argwhere(right != eye)[0][:1])
    report.add("unit_law", witness)
    report.add("associativity", kernels.associativity_witness(alg.mu, field))
    return report


# ---------------------------------------------------------------------------
# coalgebra laws


def _coassoc_witness(alg: StructuredAlgebra):
    field = alg.field
    zero = field.zero
    for i in range(alg.dim):
        acc: dict[tuple[int, int, int], Scalar] = {}
        for coef, u, v in alg.coproduct[i]:
            for c2, a, b in alg.coproduct[u]:
                key = (a, b, v)
                acc[key] = field.add(acc.get(key, zero), field.mul(coef, c2))
        for coef, u, v in alg.coproduct[i]:
            for c2, a, b in alg.coproduct[v]:
                key = (u, a, b)
                acc[key] = field.sub(acc.get(key, zero), field.mul(coef, c2))
        for key, val in acc.items():
            if val != zero:
                return (i,) + key
    return None


def _counit_law_witness(alg: StructuredAlgebra):
    field = alg.field
    for i in range(alg.dim):
        left = field.zeros(alg.dim)
        right = field.zeros(alg.dim)
        for coef, u, v in alg.coproduct[i]:
            left[v] = field.add(left[v], field.mul(coef, alg.counit[u]))
            right[u] = field.add(right[u], field.mul(coef, alg.counit[v]))
        want = field.zeros(alg.dim)
        want[i] = field.one
        if not np.array_equal(left, want) or not np.array_equal(right, want):
            return (i,)
    return None


def check_coalgebra(alg: StructuredAlgebra) -> AxiomReport:
    report = AxiomReport()
    if not alg.has_coalgebra:
        raise ValueError("no coalgebra structure to check")
    report.add("coassociativity", _coassoc_witness(alg))
    report.add("counit_law", _counit_law_witness(alg))
    return report


# ---------------------------------------------------------------------------
# bialgebra compatibility


def _single_term_coproduct(alg: StructuredAlgebra):
    """(du, dv, dcoef) arrays if every Delta(e_i) is a single term, else None."""
    n = alg.dim
    du = np.empty(n, dtype=np.int64)
    dv = np.empty(n, dtype=np.int64)
    dc = np.empty(n, dtype=object)
    for i, terms in enumerate(alg.coproduct):
        if len(terms) != 1:
            return None
        coef, u, v = terms[0]
        du[i], dv[i], dc[i] = u, v, coef
    return du, dv, dc


def _delta_mult_witness_monomial(alg, pos, val, du, dv, dc):
    """Index arithmetic path: monomial products and single-term coproducts."""
    field = alg.field
    # lhs: Delta(e_i e_j) = val[i,j] * dc[pos[i,j]] at (du[pos], dv[pos])
    lc = field.normalize(val * np.asarray(dc)[pos])
    lu, lv = du[pos], dv[pos]
    # rhs: (dc_i dc_j) * val[du_i, du_j] * val[dv_i, dv_j]
    #      at (pos[du_i, du_j], pos[dv_i, dv_j])
    dco = np.asarray(dc, dtype=object)
    rc = field.normalize((dco[:, None] * dco[None, :])
                         * val[du[:, None], du[None, :]]
                         * val[dv[:, None], dv[None, :]])
    ru = pos[du[:, None], du[None, :]]
    rv = pos[dv[:, None], dv[None, :]]
    zero = field.zero
    bad = (lc != rc) | ((lc != zero) & ((lu != ru) | (lv != rv)))
    hits = np.argwhere(bad)
    if hits.size:
        return (int(hits[0][0]), int(hits[0][1]))
    return None


def _delta_mult_witness_general(alg: StructuredAlgebra):
    field = alg.field
    n = alg.dim
    for i in range(n):
        di = alg.coproduct[i]
        for j in range(n):
            dj = alg.coproduct[j]
            lhs = field.zeros(n, n)
            for m in np.nonzero(alg.mu[i, j, :] != field.zero)[0]:
                lhs = lhs + alg.mu[i, j, m] * alg.delta_matrix_of_basis(m)
            rhs = field.zeros(n, n)
            for c1, u1, v1 in di:
                for c2, u2, v2 in dj:
                    rhs = rhs + (c1 * c2) * np.outer(alg.mu[u1, u2, :], alg.mu[v1, v2, :])
            if not np.array_equal(field.normalize(lhs), field.normalize(rhs)):
                return (i, j)
    return None


def _weak_unit_law_witnesses(alg: StructuredAlgebra):
    """(Delta (x) id)Delta(1) vs both bracketings of Delta(1) products in A^3."""
    field = alg.field
    zero = field.zero
    d1 = alg.coproduct_of(alg.unit)
    t_mid: dict = {}
    for coef, u, v in d1:
        for c2, a, b in alg.coproduct[u]:
            key = (a, b, v)
            t_mid[key] = field.add(t_mid.get(key, zero), field.mul(coef, c2))
    t_right: dict = {}
    t_left: dict = {}
    for c1, u, v in d1:
        for c2, a, b in d1:
            # (Delta(1) (x) 1)(1 (x) Delta(1)): (u, v*a, b)
            f = field.mul(c1, c2)
            for m in np.nonzero(alg.mu[v, a, :] != zero)[0]:
                key = (u, int(m), b)
                t_right[key] = field.add(t_right.get(key, zero),
                                         field.mul(f, alg.mu[v, a, m]))
            # (1 (x) Delta(1))(Delta(1) (x) 1): second factor (c2: a, b) times first (c1: u, v)
            # (1 (x) e_a (x) e_b)(e_u (x) e_v (x) 1) = e_u (x) e_a e_v (x) e_b
            for m in np.nonzero(alg.mu[a, v, :] != zero)[0]:
                key = (u, int(m), b)
                t_left[key] = field.add(t_left.get(key, zero),
                                        field.mul(f, alg.mu[a, v, m]))
    def diff(d1_, d2_):
        keys = set(d1_) | set(d2_)
        for key in sorted(keys):
            if d1_.get(key, zero) != d2_.get(key, zero):
                return key
        return None
    return diff(t_mid, t_right), diff(t_mid, t_left)


def check_weak_bialgebra(alg: StructuredAlgebra) -> AxiomReport:
    """Algebra + coalgebra laws, multiplicativity of Delta, weak unit and
    counit laws.  `flags` records the strong (honest bialgebra) laws."""
    report = check_algebra(alg)
    report.extend(check_coalgebra(alg))
    field = alg.field

    mono = kernels.monomial_tables(alg.mu, field)
    single = _single_term_coproduct(alg)
    if mono is not None and single is not None:
        witness = _delta_mult_witness_monomial(alg, mono[0], mono[1], *single)
    else:
        witness = _delta_mult_witness_general(alg)
    report.add("coproduct_multiplicative", witness)

    w_right, w_left = _weak_unit_law_witnesses(alg)
    report.add("weak_unit_law_right", w_right)
    report.add("weak_unit_law_left", w_left)

    report.add("weak_counit_law",
               kernels.counit_triple_witness(alg.mu, alg.counit, alg.coproduct, field))

    delta_unit = alg.delta_matrix(alg.unit)
    report.flags["strong_unit_law"] = np.array_equal(
        delta_unit, field.normalize(np.outer(alg.unit, alg.unit)))
    e1 = field.normalize(np.tensordot(alg.mu, alg.counit, axes=(2, 0)))
    report.flags["strong_counit_law"] = np.array_equal(
        e1, field.normalize(np.outer(alg.counit, alg.counit)))
    return report


# ---------------------------------------------------------------------------
# antipode laws


def check_antipode(alg: StructuredAlgebra) -> AxiomReport:
    """S(x1)x2 == eps_s(x), x1 S(x2) == eps_t(x), S(x1)x2 S(x3) == S(x)."""
    report = AxiomReport()
    if not alg.has_antipode:
        raise ValueError("no antipode to check")
    field = alg.field
    n = alg.dim
    w1 = w2 = w3 = None
    for i in range(n):
        terms = alg.coproduct[i]
        acc1 = field.zeros(n)
        acc2 = field.zeros(n)
        # S(x1) x2 and x1 S(x2)
        for coef, u, v in terms:
            acc1 = acc1 + coef * alg.multiply(alg.antipode[u], _basis_vec(field, n, v))
            acc2 = acc2 + coef * alg.multiply(_basis_vec(field, n, u), alg.antipode[v])
        acc1 = field.normalize(acc1)
        acc2 = field.normalize(acc2)
        if w1 is None and not np.array_equal(acc1, epsilon_s(alg, _basis_vec(field, n, i))):
            w1 = (i,)
        if w2 is None and not np.array_equal(acc2, epsilon_t(alg, _basis_vec(field, n, i))):
            w2 = (i,)
        if w3 is None:
            acc3 = field.zeros(n)
            for coef, u, v in terms:
                for c2, a, b in alg.coproduct[u]:
                    part = alg.multiply(alg.antipode[a], _basis_vec(field, n, b))
                    part = alg.multiply(part, alg.antipode[v])
                    acc3 = acc3 + field.mul(coef, c2) * part
            if not np.array_equal(field.normalize(acc3), alg.antipode[i]):
                w3 = (i,)
    report.add("antipode_source", w1)
    report.add("antipode_target", w2)
    report.add("antipode_sandwich", w3)
    return report


def _basis_vec(field, n, i):
    v = field.zeros(n)
    v[i] = field.one
    return v


# ---------------------------------------------------------------------------
# classification


def classify(alg: StructuredAlgebra) -> tuple[str, AxiomReport]:
    """One of: invalid, algebra, bialgebra, hopf, weak_bialgebra, weak_hopf."""
    if not alg.has_coalgebra:
        report = check_algebra(alg)
        return ("algebra" if report.passed else "invalid"), report
    report = check_weak_bialgebra(alg)
    if not report.passed:
        return "invalid", report
    strong = report.flags["strong_unit_law"] and report.flags["strong_counit_law"]
    if not alg.has_antipode:
        return ("bialgebra" if strong else "weak_bialgebra"), report
    anti = check_antipode(alg)
    report.extend(anti)
    if not anti.passed:
        return "invalid", report
    return ("hopf" if strong else "weak_hopf"), report
