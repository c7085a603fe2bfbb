"""Rotation number of a vector loop around the origin, computed three ways.

* :func:`hm_rotation` -- ``sum(3*eps_i + a_i) / 12`` for unimodular loops.
* :func:`rotation_formula` -- the continued-fraction formula for any valid loop.
* :func:`winding_number_exact` / :func:`winding_number_float` -- the winding
  number of the closed polygon v_1 -> ... -> v_d -> v_1, used as oracles.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
import math

from .lattice import det2
from .loop import EdgeAnalysis, VectorLoop, analyze_loop
from .refine import UnimodularRefinement, refine_loop

FLOAT_TOLERANCE = 1e-6


class NotUnimodularLoopError(ValueError):
    pass


class IntegralityError(ArithmeticError):
    """A closed-loop rotation number came out non-integral (indicates a bug)."""


class WindingToleranceError(ArithmeticError):
    pass


def _require_integral(value: Fraction, what: str) -> Fraction:
    if value.denominator != 1:
        raise IntegralityError(f"{what} evaluated to non-integer {value}")
    return value


def hm_rotation(loop: VectorLoop, edges: list[EdgeAnalysis] | None = None) -> Fraction:
    eps = loop.epsilons()
    bad = [i for i, e in enumerate(eps, start=1) if abs(e) != 1]
    if bad:
        raise NotUnimodularLoopError(f"edge {bad[0]} has determinant {eps[bad[0] - 1]}, loop is not unimodular")
    if edges is None:
        edges = analyze_loop(loop)
    total = sum((3 * e.epsilon + e.a for e in edges), Fraction(0))
    return _require_integral(total / 12, "unimodular rotation formula")


@dataclass(frozen=True)
class EdgeTerm:
    """One summand of the formula, split the way the worked example groups it."""

    index: int
    orientation_term: int       # (3*(l+1) - sum(n_j)) * sign(eps)
    a: Fraction
    xy_term: Fraction           # (x + y) / eps

    @property
    def total(self) -> Fraction:
        return self.orientation_term + self.a - self.xy_term


@dataclass(frozen=True)
class FormulaResult:
    value: Fraction
    orientation_sum: int
    a_sum: Fraction
    xy_sum: Fraction
    terms: tuple[EdgeTerm, ...]
    edges: tuple[EdgeAnalysis, ...]


def edge_term(e: EdgeAnalysis) -> EdgeTerm:
    return EdgeTerm(
        index=e.index,
        orientation_term=(3 * (e.l + 1) - sum(e.terms)) * e.orientation,
        a=e.a,
        xy_term=Fraction(e.x + e.y, e.epsilon),
    )


def rotation_formula(loop: VectorLoop, edges: list[EdgeAnalysis] | None = None) -> FormulaResult:
    if edges is None:
        edges = analyze_loop(loop)
    terms = tuple(edge_term(e) for e in edges)
    orientation_sum = sum(t.orientation_term for t in terms)
    a_sum = sum((t.a for t in terms), Fraction(0))
    xy_sum = sum((t.xy_term for t in terms), Fraction(0))
    value = (orientation_sum + a_sum - xy_sum) / 12
    return FormulaResult(
        value=_require_integral(value, "rotation formula"),
        orientation_sum=orientation_sum,
        a_sum=a_sum,
        xy_sum=xy_sum,
        terms=terms,
        edges=tuple(edges),
    )


def winding_number_exact(loop: VectorLoop) -> int:
    """Signed crossings of the positive x-axis, integer arithmetic only.

    Points with ``y == 0`` count as the upper half-plane. An upward crossing
    lies on the positive axis exactly when the origin is to the left of the
    segment, i.e. ``det(u, w) > 0``; downward crossings mirror this.
    """
    winding = 0
    for u, w in loop.edges():
        if u.y < 0 <= w.y:
            if det2(u, w) > 0:
                winding += 1
        elif w.y < 0 <= u.y:
            if det2(u, w) < 0:
                winding -= 1
    return winding


def winding_number_float(loop: VectorLoop, tolerance: float = FLOAT_TOLERANCE) -> tuple[float, int]:
    total = 0.0
    for u, w in loop.edges():
        total += math.atan2(det2(u, w), u.dot(w))
    value = total / (2 * math.pi)
    rounded = round(value)
    if abs(value - rounded) >= tolerance:
        raise WindingToleranceError(f"angle sum {value!r} is not within {tolerance} of an integer")
    return value, rounded


@dataclass(frozen=True)
class RotationReport:
    rot_formula: Fraction
    rot_hm_on_refined: Fraction
    rot_winding: int
    rot_float: float
    formula: FormulaResult
    refinement: UnimodularRefinement

    @property
    def consistent(self) -> bool:
        return (self.rot_formula == self.rot_hm_on_refined == self.rot_winding
                and round(self.rot_float) == self.rot_winding)


def rotation_report(loop: VectorLoop) -> RotationReport:
    edges = analyze_loop(loop)
    formula = rotation_formula(loop, edges)
    refinement = refine_loop(loop, edges)
    float_value, _ = winding_number_float(loop)
    return RotationReport(
        rot_formula=formula.value,
        rot_hm_on_refined=hm_rotation(refinement.enlarged),
        rot_winding=winding_number_exact(loop),
        rot_float=float_value,
        formula=formula,
        refinement=refinement,
    )
