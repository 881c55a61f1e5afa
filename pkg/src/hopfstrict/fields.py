"""Exact scalar arithmetic over Q and prime fields GF(p).

Scalars are plain Python objects: over the rationals an integral value is a
plain `int` and anything else is a `Fraction`; over GF(p) they are small
`int` residues in [0, p).  A `Field` instance owns the arithmetic; vectors
and matrices live in object-dtype numpy arrays so that numpy's
matmul/tensordot plumbing can be reused without ever touching floats.

Keeping integral rationals as `int` matters: bulk products and sums then run
through CPython's fast integer paths instead of `Fraction.__mul__`'s gcd
normalization, which dominates profiles otherwise.  The price is a coding
rule: never divide two scalars with `/` (int / int is float division); go
through `Field.inv` or `Field.div`, which return exact values and demote
integral results back to `int`.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Union

import numpy as np

Scalar = Union[Fraction, int]


class FieldError(ValueError):
    pass


def _demote(x: Fraction) -> Scalar:
    """Fraction -> int when integral, else the Fraction itself."""
    return x.numerator if x.denominator == 1 else x


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


class Field:
    """The rationals (``Field.Q()``) or a prime field (``Field.GF(p)``)."""

    __slots__ = ("p",)

    def __init__(self, p: int | None = None):
        if p is not None:
            if not _is_prime(p):
                raise FieldError(f"{p} is not prime")
        self.p = p

    @staticmethod
    def Q() -> "Field":
        return Field(None)

    @staticmethod
    def GF(p: int) -> "Field":
        return Field(p)

    @property
    def is_prime_field(self) -> bool:
        return self.p is not None

    @property
    def characteristic(self) -> int:
        return self.p or 0

    # -- scalar construction ------------------------------------------------

    @property
    def zero(self) -> Scalar:
        return 0

    @property
    def one(self) -> Scalar:
        return 1

    def of(self, x) -> Scalar:
        """Coerce an int, Fraction or scalar string into this field."""
        if isinstance(x, str):
            return self.parse(x)
        if self.p is not None:
            if isinstance(x, Fraction):
                if x.denominator % self.p == 0:
                    raise FieldError(f"denominator of {x} vanishes mod {self.p}")
                return x.numerator * pow(x.denominator, -1, self.p) % self.p
            return int(x) % self.p
        if isinstance(x, int):
            return x
        return _demote(Fraction(x))

    # -- arithmetic ---------------------------------------------------------

    def add(self, a: Scalar, b: Scalar) -> Scalar:
        return (a + b) % self.p if self.p is not None else a + b

    def sub(self, a: Scalar, b: Scalar) -> Scalar:
        return (a - b) % self.p if self.p is not None else a - b

    def mul(self, a: Scalar, b: Scalar) -> Scalar:
        return (a * b) % self.p if self.p is not None else a * b

    def neg(self, a: Scalar) -> Scalar:
        return (-a) % self.p if self.p is not None else -a

    def inv(self, a: Scalar) -> Scalar:
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        if self.p is not None:
            return pow(a, -1, self.p)
        return _demote(Fraction(1) / Fraction(a))

    def div(self, a: Scalar, b: Scalar) -> Scalar:
        return self.mul(a, self.inv(b))

    # -- vectors ------------------------------------------------------------

    def zeros(self, *shape: int) -> np.ndarray:
        out = np.empty(shape, dtype=object)
        out[...] = self.zero
        return out

    def eye(self, n: int) -> np.ndarray:
        out = self.zeros(n, n)
        for i in range(n):
            out[i, i] = self.one
        return out

    def array(self, data) -> np.ndarray:
        """Object-dtype array of coerced scalars."""
        arr = np.array(data, dtype=object)
        flat = arr.reshape(-1)
        for i, v in enumerate(flat):
            flat[i] = self.of(v)
        return flat.reshape(arr.shape)

    def normalize(self, arr: np.ndarray) -> np.ndarray:
        """Reduce an object array after numpy arithmetic (mod p if needed)."""
        if self.p is None:
            return arr
        return arr % self.p

    def mat_mul(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        return self.normalize(a @ b)

    def random_scalar(self, rng: np.random.Generator) -> Scalar:
        if self.p is not None:
            return int(rng.integers(0, self.p))
        return _demote(Fraction(int(rng.integers(-4, 5)), int(rng.integers(1, 5))))

    # -- serialization ------------------------------------------------------

    def format(self, a: Scalar) -> str:
        if self.p is not None:
            return f"{a % self.p} mod {self.p}"
        return str(Fraction(a))

    def parse(self, s: str) -> Scalar:
        s = s.strip()
        if self.p is not None:
            if "mod" in s:
                r, _, m = s.partition("mod")
                if int(m) != self.p:
                    raise FieldError(f"scalar {s!r} has wrong modulus for GF({self.p})")
                return int(r) % self.p
            if "/" in s:
                num, _, den = s.partition("/")
                return self.of(Fraction(int(num), int(den)))
            return int(s) % self.p
        if "mod" in s:
            raise FieldError(f"modular scalar {s!r} in a rational document")
        return _demote(Fraction(s))

    def describe(self) -> str:
        return "Q" if self.p is None else f"GF({self.p})"

    # -- identity -----------------------------------------------------------

    def __eq__(self, other):
        return isinstance(other, Field) and other.p == self.p

    def __hash__(self):
        return hash(("Field", self.p))

    def __repr__(self):
        return f"Field({self.p!r})"


@lru_cache(maxsize=None)
def _cached_field(p):
    return Field(p)


def field_from_name(name) -> Field:
    """Parse a field tag: "Q", "q", an int, "5", "F5" or "GF(5)"."""
    if isinstance(name, Field):
        return name
    if isinstance(name, int):
        return _cached_field(name)
    s = str(name).strip()
    if s.upper() == "Q":
        return _cached_field(None)
    if s.upper().startswith("GF(") and s.endswith(")"):
        s = s[3:-1]
    elif s.upper().startswith("F"):
        s = s[1:]
    try:
        return _cached_field(int(s))
    except ValueError:
        raise FieldError(f"cannot parse field name {name!r}") from None
