"""Finite groups as multiplication tables, and group extensions with sections.

Elements are integers 0..order-1 with 0 the identity.  Everything is table
driven; no presentation machinery.  Extensions carry an explicit section of
the quotient map, from which the conjugation maps and the 2-cocycle that
measure non-splitness are computed.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from itertools import product as iproduct

import numpy as np


class NotAGroup(ValueError):
    pass


class SectionNotValid(ValueError):
    pass


class FiniteGroup:
    """A finite group given by its multiplication table.

    table[a, b] is the product ab; element 0 must be the identity.
    """

    def __init__(self, table, names: list[str] | None = None, check: bool = True):
        self.table = np.ascontiguousarray(table, dtype=np.int64)
        self.order = self.table.shape[0]
        if names is None:
            names = [f"g{i}" for i in range(self.order)]
        self.names = list(names)
        if check:
            self._validate()
        self.inverse = np.empty(self.order, dtype=np.int64)
        for a in range(self.order):
            hits = np.nonzero(self.table[a] == 0)[0]
            if hits.size != 1:
                raise NotAGroup(f"element {a} has no unique inverse")
            self.inverse[a] = hits[0]

    def _validate(self):
        t = self.table
        n = self.order
        if t.shape != (n, n):
            raise NotAGroup("table is not square")
        if t.min() < 0 or t.max() >= n:
            raise NotAGroup("table entries out of range")
        if not (np.array_equal(t[0], np.arange(n)) and np.array_equal(t[:, 0], np.arange(n))):
            raise NotAGroup("element 0 is not the identity")
        # associativity: t[t[a,b],c] == t[a,t[b,c]]
        if not np.array_equal(t[t, :][:, :, :], t[:, t][:, :, :]):
            bad = np.argwhere(t[t, :] != t[:, t])[0]
            raise NotAGroup(f"associativity fails at {tuple(int(x) for x in bad)}")

    def mul(self, a: int, b: int) -> int:
        return int(self.table[a, b])

    def inv(self, a: int) -> int:
        return int(self.inverse[a])

    def conj(self, a: int, b: int) -> int:
        """a b a^-1."""
        return self.mul(self.mul(a, b), self.inv(a))

    def elements(self):
        return range(self.order)

    def name(self, a: int) -> str:
        return self.names[a]

    def exponent_two(self) -> bool:
        return all(self.mul(a, a) == 0 for a in self.elements())

    def is_abelian(self) -> bool:
        return np.array_equal(self.table, self.table.T)

    def __eq__(self, other):
        return isinstance(other, FiniteGroup) and np.array_equal(self.table, other.table)

    def __hash__(self):
        return hash(self.table.tobytes())

    def __repr__(self):
        return f"FiniteGroup(order={self.order})"


def make_cyclic(n: int) -> FiniteGroup:
    idx = np.arange(n)
    table = (idx[:, None] + idx[None, :]) % n
    names = ["1"] + [f"x{'' if i == 1 else i}" for i in range(1, n)]
    return FiniteGroup(table, names)


def make_product(g: FiniteGroup, h: FiniteGroup) -> FiniteGroup:
    """Direct product; element (a, b) gets index a * |H| + b."""
    n, m = g.order, h.order
    table = np.empty((n * m, n * m), dtype=np.int64)
    for a, b in iproduct(range(n), range(m)):
        for c, d in iproduct(range(n), range(m)):
            table[a * m + b, c * m + d] = g.mul(a, c) * m + h.mul(b, d)
    names = [f"({g.name(a)},{h.name(b)})" for a in range(n) for b in range(m)]
    return FiniteGroup(table, names)


def make_dihedral(n: int) -> FiniteGroup:
    """Dihedral group of order 2n: rotations a^i (index i), reflections a^i b
    (index n + i), with relations a^n = b^2 = 1 and b a b^-1 = a^-1."""
    if n < 1:
        raise NotAGroup("need n >= 1")
    order = 2 * n
    table = np.empty((order, order), dtype=np.int64)
    for i, s in iproduct(range(n), range(2)):
        for j, t in iproduct(range(n), range(2)):
            # (a^i b^s)(a^j b^t) = a^(i + (-1)^s j) b^(s+t)
            k = (i + (j if s == 0 else -j)) % n
            u = (s + t) % 2
            table[s * n + i, t * n + j] = u * n + k
    names = [("1" if i == 0 else f"a{'' if i == 1 else i}") for i in range(n)]
    names += [("b" if i == 0 else f"a{'' if i == 1 else i}b") for i in range(n)]
    return FiniteGroup(table, names)


def make_klein_four() -> FiniteGroup:
    """Z/2 x Z/2 with element order [1, t1, t2, t1t2]."""
    table = np.array([[0, 1, 2, 3],
                      [1, 0, 3, 2],
                      [2, 3, 0, 1],
                      [3, 2, 1, 0]])
    return FiniteGroup(table, ["1", "t1", "t2", "t1t2"])


@dataclass
class GroupExtension:
    """A short exact sequence N -> E -> G with a set-theoretic section.

    iota embeds N into E, pi projects E onto G, section picks a
    representative of each G element with section[0] == 0.
    """

    total: FiniteGroup
    kernel: FiniteGroup
    quotient: FiniteGroup
    iota: np.ndarray
    pi: np.ndarray
    section: np.ndarray

    def __post_init__(self):
        self.iota = np.ascontiguousarray(self.iota, dtype=np.int64)
        self.pi = np.ascontiguousarray(self.pi, dtype=np.int64)
        self.section = np.ascontiguousarray(self.section, dtype=np.int64)
        self._validate()

    def _validate(self):
        e_grp, n_grp, g = self.total, self.kernel, self.quotient
        if len(self.iota) != n_grp.order or len(self.pi) != e_grp.order \
                or len(self.section) != g.order:
            raise SectionNotValid("map sizes do not match group orders")
        if len(set(self.iota.tolist())) != n_grp.order:
            raise SectionNotValid("iota is not injective")
        for a, b in iproduct(n_grp.elements(), n_grp.elements()):
            if self.iota[n_grp.mul(a, b)] != e_grp.mul(self.iota[a], self.iota[b]):
                raise SectionNotValid("iota is not a homomorphism")
        for a, b in iproduct(e_grp.elements(), e_grp.elements()):
            if self.pi[e_grp.mul(a, b)] != g.mul(self.pi[a], self.pi[b]):
                raise SectionNotValid("pi is not a homomorphism")
        if set(self.pi.tolist()) != set(range(g.order)):
            raise SectionNotValid("pi is not surjective")
        image = set(self.iota.tolist())
        ker = {x for x in e_grp.elements() if self.pi[x] == 0}
        if image != ker:
            raise SectionNotValid("image of iota is not the kernel of pi")
        for x in e_grp.elements():
            for k in image:
                if e_grp.conj(x, k) not in image:
                    raise SectionNotValid("kernel is not normal")
        if self.section[0] != 0:
            raise SectionNotValid("section must send 1 to 1")
        for h in g.elements():
            if self.pi[self.section[h]] != h:
                raise SectionNotValid("section is not a section of pi")
        self._iota_index = {int(v): i for i, v in enumerate(self.iota)}

    def kernel_index(self, e_elem: int) -> int:
        """Index in N of an E element lying in the kernel."""
        try:
            return self._iota_index[int(e_elem)]
        except KeyError:
            raise SectionNotValid(f"element {e_elem} is not in the kernel") from None


@dataclass
class SectionCocycle:
    """Conjugation maps and 2-cocycle of an extension relative to a section.

    conj[g] is the permutation n -> s(g) n s(g)^-1 of N; cocycle[g, h] is the
    N element s(g) s(h) s(gh)^-1.
    """

    extension: GroupExtension
    conj: np.ndarray = dc_field(init=False)
    cocycle: np.ndarray = dc_field(init=False)

    def __post_init__(self):
        ext = self.extension
        e_grp, n_grp, g = ext.total, ext.kernel, ext.quotient
        self.conj = np.empty((g.order, n_grp.order), dtype=np.int64)
        self.cocycle = np.empty((g.order, g.order), dtype=np.int64)
        for a in g.elements():
            s = int(ext.section[a])
            for n in n_grp.elements():
                self.conj[a, n] = ext.kernel_index(e_grp.conj(s, int(ext.iota[n])))
        for a, b in iproduct(g.elements(), g.elements()):
            sa, sb = int(ext.section[a]), int(ext.section[b])
            sab = int(ext.section[g.mul(a, b)])
            self.cocycle[a, b] = ext.kernel_index(
                e_grp.mul(e_grp.mul(sa, sb), e_grp.inv(sab)))

    def check_twisted_identity(self) -> tuple[int, int, int] | None:
        """First (g, h, k) violating conj_g(c(h,k)) c(g,hk) == c(g,h) c(gh,k)."""
        n_grp, g = self.extension.kernel, self.extension.quotient
        for a, b, c in iproduct(g.elements(), g.elements(), g.elements()):
            lhs = n_grp.mul(int(self.conj[a, self.cocycle[b, c]]),
                            int(self.cocycle[a, g.mul(b, c)]))
            rhs = n_grp.mul(int(self.cocycle[a, b]),
                            int(self.cocycle[g.mul(a, b), c]))
            if lhs != rhs:
                return (a, b, c)
        return None


def cocycle_from_section(ext: GroupExtension) -> SectionCocycle:
    return SectionCocycle(ext)


def extension_d4() -> GroupExtension:
    """Z/2 -> D4 -> Z/2 x Z/2 with section 1, a, b, ab.

    The kernel is the center {1, a^2} of the dihedral group of order 8; the
    resulting 2-cocycle is the standard non-split example.
    """
    d4 = make_dihedral(4)
    n = make_cyclic(2)
    g = make_klein_four()
    iota = np.array([0, 2])                   # 1, a^2
    # pi(a^i b^s) = t1^i t2^s in the [1, t1, t2, t1t2] ordering
    pi = np.empty(8, dtype=np.int64)
    for i in range(4):
        pi[i] = (i % 2)                       # rotations -> 1 or t1
        pi[4 + i] = 2 + (i % 2)               # reflections -> t2 or t1t2
    section = np.array([0, 1, 4, 5])          # 1, a, b, ab
    return GroupExtension(d4, n, g, iota=iota, pi=pi, section=section)


def quotient_by_normal(e_grp: FiniteGroup, kernel_elems: list[int]):
    """Coset group E/N for a normal subgroup given by its element list.

    Returns (quotient, pi) with cosets numbered so the trivial coset is 0,
    ordered by smallest member.
    """
    n_set = set(kernel_elems)
    if 0 not in n_set:
        raise NotAGroup("kernel must contain the identity")
    cosets: list[frozenset] = []
    seen = set()
    for x in e_grp.elements():
        if x in seen:
            continue
        coset = frozenset(e_grp.mul(x, k) for k in n_set)
        cosets.append(coset)
        seen |= coset
    cosets.sort(key=min)
    if min(cosets[0]) != 0:
        raise NotAGroup("identity coset missing")
    index = {}
    for i, coset in enumerate(cosets):
        for x in coset:
            index[x] = i
    q = len(cosets)
    table = np.empty((q, q), dtype=np.int64)
    for i, ci in enumerate(cosets):
        xi = min(ci)
        for j, cj in enumerate(cosets):
            table[i, j] = index[e_grp.mul(xi, min(cj))]
    pi = np.array([index[x] for x in e_grp.elements()], dtype=np.int64)
    quotient = FiniteGroup(table, [f"c{min(c)}" for c in cosets])
    return quotient, pi


def subgroup_closure(e_grp: FiniteGroup, generators: list[int]) -> list[int]:
    """Sorted element list of the subgroup generated by `generators`."""
    elems = {0}
    frontier = [0]
    gens = set(int(x) for x in generators)
    while frontier:
        x = frontier.pop()
        for a in gens | elems.copy():
            for y in (e_grp.mul(x, a), e_grp.mul(a, x)):
                if y not in elems:
                    elems.add(y)
                    frontier.append(y)
    # make sure generators themselves are in
    for a in gens:
        if a not in elems:
            elems_new = sorted(elems | {a})
            return subgroup_closure(e_grp, elems_new)
    return sorted(elems)


def is_normal(e_grp: FiniteGroup, elems: list[int]) -> bool:
    s = set(elems)
    return all(e_grp.conj(x, k) in s for x in e_grp.elements() for k in s)


def extension_from_normal(e_grp: FiniteGroup, kernel_elems: list[int],
                          rng: np.random.Generator | None = None) -> GroupExtension:
    """Build N -> E -> E/N with a (random if rng given) section fixing 1."""
    kernel_elems = sorted(kernel_elems)
    sub_index = {x: i for i, x in enumerate(kernel_elems)}
    k = len(kernel_elems)
    ntab = np.empty((k, k), dtype=np.int64)
    for i, a in enumerate(kernel_elems):
        for j, b in enumerate(kernel_elems):
            ab = e_grp.mul(a, b)
            if ab not in sub_index:
                raise NotAGroup("kernel list is not closed under multiplication")
            ntab[i, j] = sub_index[ab]
    n_grp = FiniteGroup(ntab, [e_grp.name(x) for x in kernel_elems])
    quotient, pi = quotient_by_normal(e_grp, kernel_elems)
    reps: list[list[int]] = [[] for _ in range(quotient.order)]
    for x in e_grp.elements():
        reps[pi[x]].append(x)
    section = np.empty(quotient.order, dtype=np.int64)
    for h in quotient.elements():
        if h == 0:
            section[0] = 0
        elif rng is None:
            section[h] = min(reps[h])
        else:
            section[h] = reps[h][rng.integers(0, len(reps[h]))]
    iota = np.array(kernel_elems, dtype=np.int64)
    return GroupExtension(e_grp, n_grp, quotient, iota=iota, pi=pi, section=section)
