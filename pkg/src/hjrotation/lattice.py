"""Exact integer primitives: gcd, Bezout coefficients, lattice vectors and 2x2 matrices.

Python ints are arbitrary precision and ``fractions.Fraction`` is always kept
in lowest terms with a positive denominator, so both are used directly as the
scalar types.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
import math

Rat = Fraction


def gcd(a: int, b: int) -> int:
    """Nonnegative greatest common divisor, with ``gcd(0, 0) == 0``."""
    return math.gcd(a, b)


def ext_gcd(a: int, b: int) -> tuple[int, int, int]:
    """Return ``(g, p, q)`` with ``a*p + b*q == g == gcd(a, b)``."""
    old_r, r = a, b
    old_p, p = 1, 0
    old_q, q = 0, 1
    while r:
        k = old_r // r
        old_r, r = r, old_r - k * r
        old_p, p = p, old_p - k * p
        old_q, q = q, old_q - k * q
    if old_r < 0:
        old_r, old_p, old_q = -old_r, -old_p, -old_q
    return old_r, old_p, old_q


@dataclass(frozen=True, slots=True)
class LatticeVector:
    x: int
    y: int

    def __post_init__(self) -> None:
        if not (isinstance(self.x, int) and isinstance(self.y, int)):
            raise TypeError(f"lattice vector needs integer components, got ({self.x!r}, {self.y!r})")

    def __add__(self, other: LatticeVector) -> LatticeVector:
        return LatticeVector(self.x + other.x, self.y + other.y)

    def __sub__(self, other: LatticeVector) -> LatticeVector:
        return LatticeVector(self.x - other.x, self.y - other.y)

    def __neg__(self) -> LatticeVector:
        return LatticeVector(-self.x, -self.y)

    def __rmul__(self, k: int) -> LatticeVector:
        return LatticeVector(k * self.x, k * self.y)

    def __iter__(self):
        yield self.x
        yield self.y

    def __repr__(self) -> str:
        return f"({self.x}, {self.y})"

    def dot(self, other: LatticeVector) -> int:
        return self.x * other.x + self.y * other.y


def det2(u: LatticeVector, v: LatticeVector) -> int:
    """Determinant of the matrix with columns ``u`` and ``v``."""
    return u.x * v.y - u.y * v.x


def is_primitive(v: LatticeVector) -> bool:
    return gcd(v.x, v.y) == 1


class NotUnimodularError(ValueError):
    pass


@dataclass(frozen=True, slots=True)
class Mat2:
    """Integer matrix ``[[a, b], [c, d]]``; its columns are ``(a, c)`` and ``(b, d)``."""

    a: int
    b: int
    c: int
    d: int

    @classmethod
    def identity(cls) -> Mat2:
        return cls(1, 0, 0, 1)

    @classmethod
    def from_columns(cls, u: LatticeVector, w: LatticeVector) -> Mat2:
        return cls(u.x, w.x, u.y, w.y)

    @classmethod
    def from_rows(cls, rows) -> Mat2:
        (a, b), (c, d) = rows
        return cls(a, b, c, d)

    def rows(self) -> tuple[tuple[int, int], tuple[int, int]]:
        return ((self.a, self.b), (self.c, self.d))

    def col(self, j: int) -> LatticeVector:
        if j == 0:
            return LatticeVector(self.a, self.c)
        if j == 1:
            return LatticeVector(self.b, self.d)
        raise IndexError(j)

    def __matmul__(self, other):
        if isinstance(other, Mat2):
            return mat_mul(self, other)
        if isinstance(other, LatticeVector):
            return LatticeVector(self.a * other.x + self.b * other.y,
                                 self.c * other.x + self.d * other.y)
        return NotImplemented

    def det(self) -> int:
        return mat_det(self)

    def is_unimodular(self) -> bool:
        return self.det() in (1, -1)

    def inverse(self) -> Mat2:
        return mat_inv_unimodular(self)

    def __repr__(self) -> str:
        return f"[[{self.a}, {self.b}], [{self.c}, {self.d}]]"


def mat_mul(A: Mat2, B: Mat2) -> Mat2:
    return Mat2(
        A.a * B.a + A.b * B.c,
        A.a * B.b + A.b * B.d,
        A.c * B.a + A.d * B.c,
        A.c * B.b + A.d * B.d,
    )


def mat_det(A: Mat2) -> int:
    return A.a * A.d - A.b * A.c


def mat_inv_unimodular(A: Mat2) -> Mat2:
    """Integer inverse of a matrix with determinant +1 or -1."""
    det = mat_det(A)
    if det not in (1, -1):
        raise NotUnimodularError(f"matrix {A!r} has determinant {det}, expected +1 or -1")
    # adj(A) / det, and 1/det == det for det = +-1
    return Mat2(det * A.d, -det * A.b, -det * A.c, det * A.a)


def sign(n: int) -> int:
    return (n > 0) - (n < 0)
