from fractions import Fraction
import random

from hypothesis import given, settings, strategies as st
import pytest

from hjrotation.generate import random_loop
from hjrotation.loop import analyze_loop, validate_loop
from hjrotation.refine import refine_loop
from hjrotation.rotation import (
    NotUnimodularLoopError,
    WindingToleranceError,
    hm_rotation,
    rotation_formula,
    rotation_report,
    winding_number_exact,
    winding_number_float,
)

from conftest import SQUARE

REVERSED_SQUARE = [(1, 0), (0, -1), (-1, 0), (0, 1)]


def test_hm_rotation_examples(square_loop, example_loop):
    assert hm_rotation(square_loop) == 1
    assert hm_rotation(validate_loop(REVERSED_SQUARE)) == -1
    assert hm_rotation(refine_loop(example_loop).enlarged) == 1


def test_hm_rotation_rejects_non_unimodular(example_loop):
    with pytest.raises(NotUnimodularLoopError):
        hm_rotation(example_loop)


def test_formula_on_example(example_loop):
    result = rotation_formula(example_loop)
    assert result.orientation_sum == 13
    assert result.a_sum == Fraction(3, 2)
    assert result.xy_sum == Fraction(5, 2)
    assert result.value == 1
    assert [t.orientation_term for t in result.terms] == [5, 4, -2, 3, 3]


def test_formula_small_loops(square_loop):
    assert rotation_formula(square_loop).value == 1
    assert rotation_formula(validate_loop([(1, 0), (0, 1)])).value == 0


def test_winding_examples(square_loop, example_loop):
    assert winding_number_exact(square_loop) == 1
    assert winding_number_exact(example_loop) == 1
    assert winding_number_exact(validate_loop(SQUARE * 2)) == 2
    assert winding_number_exact(validate_loop([(1, 0), (0, 1)])) == 0


def test_winding_float_examples(square_loop, example_loop):
    value, rounded = winding_number_float(square_loop)
    assert rounded == 1 and abs(value - 1) < 1e-12
    assert winding_number_float(validate_loop(REVERSED_SQUARE))[1] == -1
    assert winding_number_float(example_loop)[1] == 1
    assert winding_number_float(validate_loop(SQUARE * 2))[1] == 2


def test_winding_float_tolerance_violation(square_loop):
    with pytest.raises(WindingToleranceError):
        winding_number_float(square_loop, tolerance=0.0)


def test_winding_vertices_on_positive_axis():
    # several vertices sit on y = 0 with x > 0; the half-open rule must not double count
    loop = validate_loop([(1, 0), (1, 1), (-1, 1), (-1, -1), (1, -1), (1, 0), (2, 1), (-1, 0), (1, -2)])
    assert winding_number_exact(loop) == winding_number_float(loop)[1]


def test_report_consistent(example_loop):
    report = rotation_report(example_loop)
    assert report.consistent
    assert report.rot_formula == report.rot_hm_on_refined == report.rot_winding == 1


def test_unimodular_specialization(square_loop):
    edges = analyze_loop(square_loop)
    assert all(e.l == e.x == e.y == 0 for e in edges)
    assert rotation_formula(square_loop).value == hm_rotation(square_loop)


loop_params = (st.integers(min_value=0, max_value=2**32), st.integers(min_value=2, max_value=12))


@settings(max_examples=300, deadline=None)
@given(*loop_params)
def test_all_routes_agree(seed, d):
    loop = random_loop(random.Random(seed), d, 50)
    value = rotation_formula(loop).value
    assert value.denominator == 1
    assert value == winding_number_exact(loop) == hm_rotation(refine_loop(loop).enlarged)
    assert winding_number_float(loop)[1] == value
    if loop.is_unimodular():
        assert value == hm_rotation(loop)


@settings(max_examples=200, deadline=None)
@given(*loop_params)
def test_reversal_negates(seed, d):
    loop = random_loop(random.Random(seed), d, 50)
    rev = loop.reversed()
    assert winding_number_exact(rev) == -winding_number_exact(loop)
    assert rotation_formula(rev).value == -rotation_formula(loop).value


@settings(max_examples=100, deadline=None)
@given(*loop_params, st.integers(min_value=2, max_value=4))
def test_repeated_loop_multiplies(seed, d, k):
    loop = random_loop(random.Random(seed), d, 50)
    repeated = validate_loop(list(loop) * k)
    assert rotation_formula(repeated).value == k * rotation_formula(loop).value
