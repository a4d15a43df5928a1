from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from blw.mv import (
    ONE, ZERO, Order, SlopingFunction, UnassignedAtom, floored_inf, mv_and, mv_denote,
    mv_floor, mv_impl, mv_or, mv_otimes, mv_value, slope_check, slope_combine, slope_compare,
)
from blw.syntax import parse_formula
from strategies import formulas, mv_values, sloping, sloping_pairs


def two_case_inf(values, w):
    """Reference: values[w] when every later value is 1, else 0."""
    return values[w] if all(v == 1 for v in values[w + 1:]) else ZERO


def test_mv_value_coercion():
    assert mv_value("3/6") == F(1, 2)
    assert mv_value(1) == ONE
    with pytest.raises(TypeError):
        mv_value(0.5)
    with pytest.raises(ValueError):
        mv_value("4/3")
    with pytest.raises(ValueError):
        mv_value(-1)


@pytest.mark.parametrize("fn, x, y, expected", [
    (mv_otimes, F(1, 2), F(1, 2), 0),
    (mv_impl, F(3, 4), F(1, 2), F(3, 4)),
    (mv_impl, F(2, 7), F(2, 7), 1),
    (mv_and, F(1, 3), F(1, 2), F(1, 3)),
    (mv_or, F(1, 3), F(1, 2), F(1, 2)),
    (mv_otimes, F(3, 4), F(1, 2), F(1, 4)),
])
def test_operation_examples(fn, x, y, expected):
    assert fn(x, y) == expected


@pytest.mark.parametrize("x, expected", [(ONE, ONE), (F(2, 3), ZERO), (ZERO, ZERO)])
def test_floor(x, expected):
    assert mv_floor(x) == expected


@pytest.mark.parametrize("values, w, expected", [
    ([F(1, 2), 1, 1], 0, F(1, 2)),
    ([F(1, 2), F(2, 3), 1], 0, 0),
    ([F(2, 3)], 0, F(2, 3)),
    ([F(1, 2), F(2, 3), 1], 1, F(2, 3)),
])
def test_floored_inf_examples(values, w, expected):
    assert floored_inf([F(v) for v in values], w) == expected


def test_floored_inf_range():
    with pytest.raises(IndexError):
        floored_inf([ONE], 1)


@given(st.lists(mv_values(), min_size=1, max_size=6), st.data())
def test_floored_inf_matches_two_case_form(values, data):
    w = data.draw(st.integers(0, len(values) - 1))
    assert floored_inf(values, w) == two_case_inf(values, w)


@given(st.lists(mv_values(), min_size=1, max_size=6))
def test_floored_inf_profile_is_sloping(values):
    assert slope_check([floored_inf(values, w) for w in range(len(values))])


@pytest.mark.parametrize("values, expected", [
    ([0, F(1, 2), 1], True),
    ([F(1, 2), F(1, 2), 1], False),
    ([0, 0, 0], True),
    ([1, 0], False),
])
def test_slope_check(values, expected):
    assert slope_check([F(v) for v in values]) is expected


def test_sloping_function_rejects_non_sloping():
    with pytest.raises(ValueError):
        SlopingFunction([F(1, 2), F(1, 2)])


@pytest.mark.parametrize("f, g, op, expected", [
    ([F(1, 2), 1], [1, 1], "otimes", [F(1, 2), 1]),
    ([F(1, 2), 1], [F(2, 3), 1], "otimes", [F(1, 6), 1]),
    ([0, 1], [F(1, 2), 1], "and", [0, 1]),
    ([0, 1], [F(1, 2), 1], "or", [F(1, 2), 1]),
])
def test_slope_combine_examples(f, g, op, expected):
    assert slope_combine(SlopingFunction(f), SlopingFunction(g), op) == SlopingFunction(expected)


def test_slope_combine_size_mismatch():
    with pytest.raises(ValueError):
        slope_combine(SlopingFunction([1]), SlopingFunction([1, 1]), "and")


@pytest.mark.parametrize("f, g, expected", [
    ([0, F(1, 2), 1], [0, 0, 1], Order.GE),
    ([0, 1], [0, 1], Order.EQ),
    ([F(1, 2), 1], [F(2, 3), 1], Order.LE),
])
def test_slope_compare_examples(f, g, expected):
    assert slope_compare(SlopingFunction(f), SlopingFunction(g)) is expected


@given(sloping_pairs(), st.sampled_from(["and", "or", "otimes"]))
def test_combine_stays_sloping(fg, op):
    f, g = fg
    assert slope_check(slope_combine(f, g, op).values)


@given(sloping_pairs())
def test_compare_total_and_antisymmetric(fg):
    f, g = fg
    o = slope_compare(f, g)
    back = {Order.LE: Order.GE, Order.GE: Order.LE, Order.EQ: Order.EQ}[o]
    assert slope_compare(g, f) is back
    assert (o is Order.EQ) == (f == g)


@given(sloping())
def test_sloping_is_monotone(f):
    assert all(a <= b for a, b in zip(f.values, f.values[1:]))


@given(mv_values(), mv_values(), mv_values())
def test_residuation(x, y, z):
    assert (mv_otimes(x, y) <= z) == (x <= mv_impl(y, z))


@given(mv_values(), mv_values())
def test_divisibility_and_prelinearity(x, y):
    assert mv_otimes(x, mv_impl(x, y)) == mv_and(x, y) == mv_otimes(y, mv_impl(y, x))
    assert mv_or(mv_impl(x, y), mv_impl(y, x)) == ONE


@given(st.integers(1, 12), st.data())
def test_finite_chain_closed(n, data):
    x = F(data.draw(st.integers(0, n)), n)
    y = F(data.draw(st.integers(0, n)), n)
    for v in (mv_and(x, y), mv_or(x, y), mv_otimes(x, y), mv_impl(x, y), mv_floor(x)):
        assert (v * n).denominator == 1


def test_denote_examples():
    assert mv_denote({"p": F(1, 2)}, parse_formula("p * p")) == 0
    assert mv_denote({"p": "1/3"}, parse_formula("bot -> p")) == 1
    with pytest.raises(UnassignedAtom):
        mv_denote({}, parse_formula("p"))


@given(mv_values(), mv_values(), formulas(("p", "q")))
def test_prelinearity_valid_for_all_formulas(x, y, f):
    g = parse_formula(f"({f}) -> q")
    a = {"p": x, "q": y}
    assert mv_denote(a, parse_formula(f"(({f}) -> ({g})) | (({g}) -> ({f}))")) == 1
