"""Exact arithmetic in GF(p^m) with polynomial-basis elements.

Elements are coefficient tuples over GF(p), low degree first, reduced
modulo a fixed monic irreducible polynomial of degree m.  The fields
this toolkit needs are tiny (at most GF(9) drives the plane builder),
so a plain polynomial representation beats log/antilog tables on
simplicity and is still instant.

The modulus is chosen deterministically: the lexicographically smallest
monic irreducible polynomial of degree m, comparing coefficient vectors
low degree first.  Deterministic fields keep every downstream
construction reproducible byte for byte.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import product

from .errors import BadDegree, DivisionByZero, FieldMismatch, NotPrime


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    f = 2
    while f * f <= n:
        if n % f == 0:
            return False
        f += 1
    return True


def _poly_mul(a, b, p):
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return out


def _poly_mod(a, modulus, p):
    """Remainder of a modulo a monic polynomial, low degree first."""
    a = list(a)
    deg_m = len(modulus) - 1
    for i in range(len(a) - 1, deg_m - 1, -1):
        c = a[i]
        if c:
            a[i] = 0
            for j in range(deg_m):
                a[i - deg_m + j] = (a[i - deg_m + j] - c * modulus[j]) % p
    return a[:deg_m]


def _is_irreducible(poly, p) -> bool:
    """Trial division by every monic polynomial of degree <= deg/2."""
    deg = len(poly) - 1
    for d in range(1, deg // 2 + 1):
        for low in product(range(p), repeat=d):
            divisor = list(low) + [1]
            if not any(_poly_mod(poly, divisor, p)):
                return False
    return True


def make_field(p: int, m: int) -> FiniteField:
    """Field context for GF(p^m) with the smallest irreducible modulus."""
    if not isinstance(p, int) or isinstance(p, bool) or not _is_prime(p):
        raise NotPrime(f"characteristic must be prime, got {p!r}")
    if not isinstance(m, int) or isinstance(m, bool) or m < 1:
        raise BadDegree(f"extension degree must be >= 1, got {m!r}")
    if m == 1:
        return FiniteField(p, 1, (0, 1))
    for low in product(range(p), repeat=m):
        candidate = tuple(low) + (1,)
        if _is_irreducible(candidate, p):
            return FiniteField(p, m, candidate)
    raise AssertionError("an irreducible polynomial of every degree exists")


@dataclass(frozen=True)
class FiniteField:
    """Immutable GF(p^m) context; construct via make_field."""

    p: int
    m: int
    modulus: tuple[int, ...]  # length m+1, low degree first, monic

    @property
    def order(self) -> int:
        return self.p**self.m

    def element(self, coeffs) -> FieldElement:
        """Element from a coefficient sequence (low degree first)."""
        coeffs = [c % self.p for c in coeffs]
        if len(coeffs) > self.m:
            raise ValueError(f"at most {self.m} coefficients allowed, got {len(coeffs)}")
        coeffs += [0] * (self.m - len(coeffs))
        return FieldElement(self, tuple(coeffs))

    def zero(self) -> FieldElement:
        return FieldElement(self, (0,) * self.m)

    def one(self) -> FieldElement:
        return self.element([1])

    def from_index(self, i: int) -> FieldElement:
        """Element whose coefficients are the base-p digits of i."""
        if not 0 <= i < self.order:
            raise ValueError(f"index {i} not in [0, {self.order})")
        coeffs = []
        for _ in range(self.m):
            i, c = divmod(i, self.p)
            coeffs.append(c)
        return FieldElement(self, tuple(coeffs))

    def elements(self) -> list[FieldElement]:
        """All field elements in index order."""
        return [self.from_index(i) for i in range(self.order)]

    # Index-based operation tables let hot loops (the plane builder)
    # stay on plain ints instead of element objects.

    @cached_property
    def _add_table(self) -> list[list[int]]:
        els = self.elements()
        return [[(a + b).index for b in els] for a in els]

    @cached_property
    def _mul_table(self) -> list[list[int]]:
        els = self.elements()
        return [[(a * b).index for b in els] for a in els]

    def add_index(self, i: int, j: int) -> int:
        return self._add_table[i][j]

    def mul_index(self, i: int, j: int) -> int:
        return self._mul_table[i][j]

    def __repr__(self) -> str:
        return f"GF({self.p}^{self.m})" if self.m > 1 else f"GF({self.p})"


@dataclass(frozen=True)
class FieldElement:
    """Element of a FiniteField as a coefficient tuple, low degree first."""

    field: FiniteField
    coeffs: tuple[int, ...]

    @property
    def index(self) -> int:
        """Base-p digit encoding; gives a stable total order on elements."""
        i = 0
        for c in reversed(self.coeffs):
            i = i * self.field.p + c
        return i

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def _require_same_field(self, other) -> None:
        if not isinstance(other, FieldElement):
            raise TypeError(f"expected a field element, got {other!r}")
        if other.field != self.field:
            raise FieldMismatch(f"cannot mix elements of {self.field} and {other.field}")

    def __add__(self, other) -> FieldElement:
        self._require_same_field(other)
        p = self.field.p
        return FieldElement(
            self.field, tuple((a + b) % p for a, b in zip(self.coeffs, other.coeffs))
        )

    def __neg__(self) -> FieldElement:
        p = self.field.p
        return FieldElement(self.field, tuple((-a) % p for a in self.coeffs))

    def __sub__(self, other) -> FieldElement:
        self._require_same_field(other)
        return self + (-other)

    def __mul__(self, other) -> FieldElement:
        self._require_same_field(other)
        f = self.field
        raw = _poly_mul(self.coeffs, other.coeffs, f.p)
        reduced = _poly_mod(raw, f.modulus, f.p)
        reduced += [0] * (f.m - len(reduced))
        return FieldElement(f, tuple(reduced))

    def __pow__(self, e: int) -> FieldElement:
        if e < 0:
            return self.inv() ** (-e)
        result = self.field.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def inv(self) -> FieldElement:
        """Multiplicative inverse via a^(q-2) in the unit group."""
        if self.is_zero():
            raise DivisionByZero("zero has no multiplicative inverse")
        return self ** (self.field.order - 2)

    def __repr__(self) -> str:
        return f"{self.field}:{list(self.coeffs)}"
