"""Finite-dimensional algebras with optional coalgebra/antipode structure.

A `StructuredAlgebra` stores a dense product tensor mu (mu[i, j, :] is the
coefficient vector of e_i e_j), the unit vector, and optionally a sparse
coproduct (list of (coef, j, k) triples per basis vector), a counit covector
and an antipode matrix.  Linear maps act on row vectors from the right:
map(x) == x @ M with M[i, :] = map(e_i).

Nothing here assumes the structure is valid; `axioms` runs the law suites and
reports witnesses.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import kernels, linalg
from .fields import Field, Scalar
from .groups import FiniteGroup


class NotInvertible(ValueError):
    pass


class CarrierTooLarge(ValueError):
    pass


class FieldNotEnumerable(ValueError):
    pass


CoproductTerms = list[tuple[Scalar, int, int]]


class StructuredAlgebra:

    def __init__(self, field: Field, mu: np.ndarray, unit: np.ndarray,
                 labels: list[str] | None = None,
                 coproduct: list[CoproductTerms] | None = None,
                 counit: np.ndarray | None = None,
                 antipode: np.ndarray | None = None):
        self.field = field
        self.mu = mu
        self.unit = unit
        self.dim = mu.shape[0]
        if mu.shape != (self.dim, self.dim, self.dim):
            raise ValueError("product tensor must be (n, n, n)")
        self.labels = labels or [f"e{i}" for i in range(self.dim)]
        self.coproduct = coproduct
        self.counit = counit
        self.antipode = antipode
        self._delta_mats: dict[int, np.ndarray] = {}

    @property
    def has_coalgebra(self) -> bool:
        return self.coproduct is not None and self.counit is not None

    @property
    def has_antipode(self) -> bool:
        return self.antipode is not None

    # -- elements -------------------------------------------------------

    def element(self, data) -> "AlgebraElement":
        if isinstance(data, AlgebraElement):
            return data
        return AlgebraElement(self, self.field.array(data))

    def basis_element(self, i: int) -> "AlgebraElement":
        v = self.field.zeros(self.dim)
        v[i] = self.field.one
        return AlgebraElement(self, v)

    def one(self) -> "AlgebraElement":
        return AlgebraElement(self, self.unit.copy())

    def zero(self) -> "AlgebraElement":
        return AlgebraElement(self, self.field.zeros(self.dim))

    # -- products ---------------------------------------------------------

    def multiply(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        """Product of coefficient vectors, sparse-aware."""
        out = self.field.zeros(self.dim)
        for i in np.nonzero(x != self.field.zero)[0]:
            xi = x[i]
            for j in np.nonzero(y != self.field.zero)[0]:
                out = out + (xi * y[j]) * self.mu[i, j, :]
        return self.field.normalize(out)

    def left_mult_matrix(self, x: np.ndarray) -> np.ndarray:
        """M with y @ M == x * y."""
        return self.field.normalize(np.tensordot(x, self.mu, axes=(0, 0)))

    def right_mult_matrix(self, x: np.ndarray) -> np.ndarray:
        """M with y @ M == y * x."""
        return self.field.normalize(np.tensordot(x, self.mu, axes=(0, 1)))

    def find_inverse(self, x: np.ndarray) -> np.ndarray | None:
        """Two-sided inverse by solving both one-sided systems at once."""
        lmat = self.left_mult_matrix(x)
        rmat = self.right_mult_matrix(x)
        stacked = np.concatenate([lmat.T, rmat.T], axis=0)
        rhs = np.concatenate([self.unit, self.unit])
        return linalg.solve_linear(stacked, rhs, self.field)

    # -- coalgebra ----------------------------------------------------------

    def coproduct_of(self, x: np.ndarray) -> CoproductTerms:
        terms: dict[tuple[int, int], Scalar] = {}
        for i in np.nonzero(x != self.field.zero)[0]:
            for coef, u, v in self.coproduct[i]:
                key = (u, v)
                terms[key] = self.field.add(terms.get(key, self.field.zero),
                                            self.field.mul(x[i], coef))
        return [(c, u, v) for (u, v), c in sorted(terms.items()) if c != self.field.zero]

    def delta_matrix(self, x: np.ndarray) -> np.ndarray:
        """Delta(x) as an (n, n) matrix: entry (u, v) is the e_u (x) e_v coefficient."""
        out = self.field.zeros(self.dim, self.dim)
        for coef, u, v in self.coproduct_of(x):
            out[u, v] = self.field.add(out[u, v], coef)
        return out

    def delta_matrix_of_basis(self, i: int) -> np.ndarray:
        if i not in self._delta_mats:
            out = self.field.zeros(self.dim, self.dim)
            for coef, u, v in self.coproduct[i]:
                out[u, v] = self.field.add(out[u, v], coef)
            self._delta_mats[i] = out
        return self._delta_mats[i]

    def counit_of(self, x: np.ndarray) -> Scalar:
        return self.field.normalize(x @ self.counit)

    def antipode_of(self, x: np.ndarray) -> np.ndarray:
        return self.field.normalize(x @ self.antipode)

    def __repr__(self):
        tags = ["mu"]
        if self.has_coalgebra:
            tags.append("delta")
        if self.has_antipode:
            tags.append("S")
        return f"StructuredAlgebra(dim={self.dim}, {'+'.join(tags)}, {self.field.describe()})"


@dataclass
class AlgebraElement:
    algebra: StructuredAlgebra
    vec: np.ndarray

    def __mul__(self, other):
        if isinstance(other, AlgebraElement):
            return AlgebraElement(self.algebra, self.algebra.multiply(self.vec, other.vec))
        return NotImplemented

    def __add__(self, other):
        return AlgebraElement(self.algebra,
                              self.algebra.field.normalize(self.vec + other.vec))

    def __sub__(self, other):
        return AlgebraElement(self.algebra,
                              self.algebra.field.normalize(self.vec - other.vec))

    def __neg__(self):
        return AlgebraElement(self.algebra, self.algebra.field.normalize(-self.vec))

    def __rmul__(self, scalar):
        s = self.algebra.field.of(scalar)
        return AlgebraElement(self.algebra, self.algebra.field.normalize(s * self.vec))

    def __eq__(self, other):
        return isinstance(other, AlgebraElement) and np.array_equal(self.vec, other.vec)

    def is_zero(self) -> bool:
        return bool(np.all(self.vec == self.algebra.field.zero))

    def inverse(self) -> "AlgebraElement":
        inv = self.algebra.find_inverse(self.vec)
        if inv is None:
            raise NotInvertible(f"{self} has no inverse")
        return AlgebraElement(self.algebra, inv)

    def __repr__(self):
        field = self.algebra.field
        parts = [f"{field.format(self.vec[i])}*{self.algebra.labels[i]}"
                 for i in np.nonzero(self.vec != field.zero)[0]]
        return " + ".join(parts) if parts else "0"


# ---------------------------------------------------------------------------
# constructors


def group_algebra(group: FiniteGroup, field: Field) -> StructuredAlgebra:
    """K[G]: basis g, product from the group table, Delta(g) = g (x) g,
    eps(g) = 1, S(g) = g^-1."""
    n = group.order
    one, zero = field.one, field.zero
    mu = field.zeros(n, n, n)
    for a in range(n):
        for b in range(n):
            mu[a, b, group.mul(a, b)] = one
    unit = field.zeros(n)
    unit[0] = one
    coproduct = [[(one, i, i)] for i in range(n)]
    counit = field.zeros(n)
    counit[:] = one
    antipode = field.zeros(n, n)
    for a in range(n):
        antipode[a, group.inv(a)] = one
    return StructuredAlgebra(field, mu, unit, labels=list(group.names),
                             coproduct=coproduct, counit=counit, antipode=antipode)


def function_algebra(group: FiniteGroup, field: Field) -> StructuredAlgebra:
    """K(G): delta-function basis, pointwise product, Delta(d_g) = sum over
    ab = g of d_a (x) d_b, eps(d_g) = [g == 1], S(d_g) = d_{g^-1}."""
    n = group.order
    one = field.one
    mu = field.zeros(n, n, n)
    for a in range(n):
        mu[a, a, a] = one
    unit = field.zeros(n)
    unit[:] = one
    coproduct: list[CoproductTerms] = [[] for _ in range(n)]
    for a in range(n):
        for b in range(n):
            coproduct[group.mul(a, b)].append((one, a, b))
    counit = field.zeros(n)
    counit[0] = one
    antipode = field.zeros(n, n)
    for a in range(n):
        antipode[a, group.inv(a)] = one
    labels = [f"d_{name}" for name in group.names]
    return StructuredAlgebra(field, mu, unit, labels=labels,
                             coproduct=coproduct, counit=counit, antipode=antipode)


# ---------------------------------------------------------------------------
# counital maps


def epsilon_t(alg: StructuredAlgebra, x: np.ndarray) -> np.ndarray:
    """(eps (x) id)(Delta(1)(x (x) 1)) from the generic formula."""
    field = alg.field
    rmat = alg.right_mult_matrix(x)
    out = field.zeros(alg.dim)
    for coef, u, v in alg.coproduct_of(alg.unit):
        s = field.mul(coef, field.normalize(rmat[u] @ alg.counit))
        out[v] = field.add(out[v], s)
    return out


def epsilon_s(alg: StructuredAlgebra, x: np.ndarray) -> np.ndarray:
    """(id (x) eps)((1 (x) x)Delta(1)) from the generic formula."""
    field = alg.field
    lmat = alg.left_mult_matrix(x)
    out = field.zeros(alg.dim)
    for coef, u, v in alg.coproduct_of(alg.unit):
        s = field.mul(coef, field.normalize(lmat[v] @ alg.counit))
        out[u] = field.add(out[u], s)
    return out


@dataclass
class Subalgebra:
    """A subspace with induced multiplication, in canonical echelon coordinates."""

    parent: StructuredAlgebra
    basis: np.ndarray          # (d, n) echelon rows
    pivots: list[int]

    @property
    def dim(self) -> int:
        return self.basis.shape[0]

    def coords(self, vec: np.ndarray) -> np.ndarray | None:
        return linalg.coords_in_rowspace(self.basis, self.pivots, vec, self.parent.field)

    def structure_constants(self) -> np.ndarray:
        """mu_sub[i, j, :] in subalgebra coordinates; raises if not closed."""
        d = self.dim
        field = self.parent.field
        out = field.zeros(d, d, d)
        for i in range(d):
            for j in range(d):
                prod = self.parent.multiply(self.basis[i], self.basis[j])
                coords = self.coords(prod)
                if coords is None:
                    raise ValueError(f"subspace not closed under product at ({i}, {j})")
                out[i, j, :] = coords
        return out


def counital_subalgebra(alg: StructuredAlgebra, which: str) -> Subalgebra:
    """Image of eps_t ("target") or eps_s ("source") with induced product."""
    if which not in ("target", "source"):
        raise ValueError("which must be 'target' or 'source'")
    fn = epsilon_t if which == "target" else epsilon_s
    rows = np.stack([fn(alg, np.asarray(r)) for r in alg.field.eye(alg.dim)])
    basis, pivots = linalg.row_space_basis(rows, alg.field)
    sub = Subalgebra(alg, basis, pivots)
    sub.structure_constants()        # closure check
    return sub


# ---------------------------------------------------------------------------
# grouplike elements


def is_grouplike(alg: StructuredAlgebra, x: np.ndarray) -> bool:
    """Delta(x) == x (x) x and eps(x) == 1."""
    if alg.counit_of(x) != alg.field.one:
        return False
    return np.array_equal(alg.delta_matrix(x), alg.field.normalize(np.outer(x, x)))


def _tensor_square_product(alg: StructuredAlgebra, left: np.ndarray,
                           right_terms: CoproductTerms) -> np.ndarray:
    """(sum left[u,v] e_u (x) e_v) * (sum coef e_a (x) e_b) as an (n, n) matrix."""
    field = alg.field
    out = field.zeros(alg.dim, alg.dim)
    nz = np.argwhere(left != field.zero)
    for u, v in nz:
        luv = left[u, v]
        for coef, a, b in right_terms:
            out = out + (luv * coef) * np.outer(alg.mu[u, a, :], alg.mu[v, b, :])
    return field.normalize(out)


def is_right_grouplike(alg: StructuredAlgebra, x: np.ndarray) -> bool:
    """Invertible and Delta(x) == (x (x) x) Delta(1)."""
    if alg.find_inverse(x) is None:
        return False
    rhs = _tensor_square_product(alg, np.outer(x, x), alg.coproduct_of(alg.unit))
    return np.array_equal(alg.delta_matrix(x), rhs)


def enumerate_grouplikes(alg: StructuredAlgebra, max_carrier: int = 200_000,
                         right: bool = False) -> list[np.ndarray]:
    """All (right-)grouplike elements by exhaustive carrier enumeration.

    Prime fields only; refuses when p^dim exceeds max_carrier.
    """
    field = alg.field
    if not field.is_prime_field:
        raise FieldNotEnumerable("exhaustive enumeration needs a finite field")
    p, n = field.characteristic, alg.dim
    if p ** n > max_carrier:
        raise CarrierTooLarge(f"{p}^{n} exceeds the bound {max_carrier}")
    test = is_right_grouplike if right else is_grouplike
    found = []
    vec = np.zeros(n, dtype=object)
    for flat in range(p ** n):
        m = flat
        for i in range(n):
            vec[i] = m % p
            m //= p
        # eps(x) == 1 is forced for ordinary grouplikes but not for right
        # ones, whose counit can be any unit of the base subalgebra.
        if not right and alg.counit_of(vec) != field.one:
            continue
        if test(alg, vec.copy()):
            found.append(vec.copy())
    return found


# ---------------------------------------------------------------------------
# center


def center_basis(alg: StructuredAlgebra) -> list[np.ndarray]:
    """Canonical basis of {z : z x == x z for all x}."""
    n = alg.dim
    field = alg.field
    # z @ (mu[:, i, :] - mu[i, :, :]) == 0 for every i
    blocks = [alg.mu[:, i, :] - alg.mu[i, :, :] for i in range(n)]
    big = field.normalize(np.concatenate(blocks, axis=1))       # (n, n*n)
    if field.is_prime_field:
        rows = kernels.modp_kernel_basis(
            big.T.astype(np.int64), field.characteristic)
        return [field.array(r) for r in rows]
    return linalg.kernel_basis(big.T, field)
