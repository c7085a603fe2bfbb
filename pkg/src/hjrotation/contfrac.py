"""Hirzebruch-Jung (minus-sign) and regular (plus-sign) continued fractions of m/x.

For an expansion ``m/x = n_1 - 1/(n_2 - ... - 1/n_l)`` with every ``n_j >= 2``
the ordered product of the elementary matrices ``[[0, -1], [1, n_j]]`` is
``[[(1 - x*y)/m, -x], [y, m]]`` where ``y`` is the inverse of ``x`` mod ``m``.
Reading the terms backwards expands ``m/y``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .lattice import Mat2, ext_gcd, gcd


class ContinuedFractionError(ValueError):
    pass


def _check_pair(m: int, x: int) -> None:
    if m < 2:
        raise ContinuedFractionError(f"need m >= 2, got m={m}")
    if not 0 < x < m:
        raise ContinuedFractionError(f"need 0 < x < m, got x={x}, m={m}")
    if gcd(m, x) != 1:
        raise ContinuedFractionError(f"x={x} and m={m} are not coprime")


@dataclass(frozen=True)
class HJExpansion:
    m: int
    x: int
    terms: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.terms)

    def value(self) -> Fraction:
        return hj_eval(self.terms)


@dataclass(frozen=True)
class RegExpansion:
    m: int
    x: int
    terms: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.terms)

    def value(self) -> Fraction:
        return regular_eval(self.terms)


def hj_expand(m: int, x: int) -> HJExpansion:
    """Unique expansion of ``m/x`` with all terms at least 2.

    Each step takes ``n = ceil(m/x)`` and continues with ``x/(n*x - m)``;
    the new denominator satisfies ``0 <= n*x - m < x`` so the loop ends.
    """
    _check_pair(m, x)
    terms = []
    num, den = m, x
    while den:
        n = -(-num // den)
        terms.append(n)
        num, den = den, n * den - num
    return HJExpansion(m, x, tuple(terms))


def hj_eval(terms: Sequence[int]) -> Fraction:
    """Exact value of ``n_1 - 1/(n_2 - 1/(... - 1/n_l))``."""
    if not terms:
        raise ContinuedFractionError("cannot evaluate an empty expansion")
    if any(n < 2 for n in terms):
        raise ContinuedFractionError(f"Hirzebruch-Jung terms must be >= 2, got {list(terms)}")
    value = Fraction(terms[-1])
    for n in reversed(terms[:-1]):
        value = n - 1 / value
    return value


def elementary_hj(n: int) -> Mat2:
    return Mat2(0, -1, 1, n)


def hj_matrix_product(terms: Sequence[int]) -> Mat2:
    """Left-to-right product of ``[[0, -1], [1, n]]``; the identity for no terms."""
    if any(n < 2 for n in terms):
        raise ContinuedFractionError(f"Hirzebruch-Jung terms must be >= 2, got {list(terms)}")
    M = Mat2.identity()
    for n in terms:
        M = M @ elementary_hj(n)
    return M


def mod_inverse(x: int, m: int) -> int:
    """The unique ``0 < y < m`` with ``x*y = 1 (mod m)``."""
    if m < 2:
        raise ContinuedFractionError(f"need modulus >= 2, got {m}")
    g, p, _ = ext_gcd(x, m)
    if g != 1:
        raise ContinuedFractionError(f"{x} has no inverse modulo {m}")
    return p % m


def regular_expand(m: int, x: int) -> RegExpansion:
    """Plus-sign expansion ``m/x = n_1 + 1/(n_2 + ... + 1/n_l)`` via Euclid.

    The last term of the Euclidean expansion is kept as is, so the result is
    the standard short form (last term >= 2 unless ``m/x`` is an integer).
    """
    _check_pair(m, x)
    terms = []
    num, den = m, x
    while den:
        q, r = divmod(num, den)
        terms.append(q)
        num, den = den, r
    return RegExpansion(m, x, tuple(terms))


def regular_eval(terms: Sequence[int]) -> Fraction:
    if not terms:
        raise ContinuedFractionError("cannot evaluate an empty expansion")
    if any(n < 1 for n in terms):
        raise ContinuedFractionError(f"regular terms must be >= 1, got {list(terms)}")
    value = Fraction(terms[-1])
    for n in reversed(terms[:-1]):
        value = n + 1 / value
    return value


def regular_matrix_product(terms: Sequence[int]) -> Mat2:
    """Left-to-right product of ``[[0, 1], [1, n]]``."""
    M = Mat2.identity()
    for n in terms:
        M = M @ Mat2(0, 1, 1, n)
    return M
