import json
import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qhermite.exactalg import (
    ONE,
    Q,
    ZERO,
    InexactDivision,
    LaurentQ,
    SPoly,
    XSPoly,
    dumps,
    loads_laurent,
    loads_xspoly,
    q_binomial,
    q_factorial,
    q_int,
    q_odd_double_factorial,
    q_pochhammer_finite,
    substitute_q,
)

L = LaurentQ

fractions = st.fractions(min_value=-5, max_value=5, max_denominator=6)
laurents = st.dictionaries(st.integers(-4, 6), fractions, max_size=5).map(L)
spolys = st.lists(laurents, max_size=3).map(SPoly)
xspolys = st.lists(spolys, max_size=3).map(XSPoly)


# -- worked examples -----------------------------------------------------------


@pytest.mark.parametrize("n,expected", [(0, {}), (1, {0: 1}), (3, {0: 1, 1: 1, 2: 1})])
def test_q_int(n, expected):
    assert q_int(n) == L(expected)


def test_q_factorial_three():
    assert q_factorial(3) == L({0: 1, 1: 2, 2: 2, 3: 1})


# frozen from a sympy expansion of (q;q)_n / ((q;q)_k (q;q)_{n-k})
@pytest.mark.parametrize(
    "n,k,expected",
    [
        (4, 2, {0: 1, 1: 1, 2: 2, 3: 1, 4: 1}),
        (6, 3, {0: 1, 1: 1, 2: 2, 3: 3, 4: 3, 5: 3, 6: 3, 7: 2, 8: 1, 9: 1}),
    ],
)
def test_q_binomial_oracle(n, k, expected):
    assert q_binomial(n, k) == L(expected)


def test_q_factorial_four_oracle():
    assert q_factorial(4) == L({0: 1, 1: 3, 2: 5, 3: 6, 4: 5, 5: 3, 6: 1})


def test_odd_double_factorial():
    assert q_odd_double_factorial(0) == ONE
    assert q_odd_double_factorial(2) == q_int(1) * q_int(3)


def test_pochhammer_kinds():
    assert q_pochhammer_finite("q;q", 2) == (1 - Q) * (1 - Q ** 2)
    assert q_pochhammer_finite("q;q2", 2) == (1 - Q) * (1 - Q ** 3)
    assert q_pochhammer_finite("a;q", 0, Fraction(1, 3)) == ONE
    assert q_pochhammer_finite("a;q", 2, Fraction(1, 2)) == (1 - L(Fraction(1, 2))) * (1 - Q / 2)
    with pytest.raises(ValueError):
        q_pochhammer_finite("a;q", 2)
    with pytest.raises(ValueError):
        q_pochhammer_finite("x;y", 2)


def test_substitute_q():
    assert substitute_q(q_int(3), 1) == 3
    assert substitute_q(q_int(3), "1/q") == L({-2: 1, -1: 1, 0: 1})
    assert substitute_q(q_int(3), "1/q") == Q ** -2 * q_int(3)
    assert substitute_q(1 - Q ** 2, Fraction(1, 2)) == Fraction(3, 4)
    with pytest.raises(ValueError):
        substitute_q(Q, 0)
    with pytest.raises(ValueError):
        substitute_q(Q, "q^2")


# -- properties ------------------------------------------------------------------


@pytest.mark.parametrize("n", range(21))
def test_q_binomial_symmetry_pascal_and_classical(n):
    for k in range(n + 1):
        assert q_binomial(n, k) == q_binomial(n, n - k)
        assert q_binomial(n + 1, k) == Q ** k * q_binomial(n, k) + q_binomial(n, k - 1)
        assert substitute_q(q_binomial(n, k), 1) == math.comb(n, k)


@pytest.mark.parametrize("k", range(16))
def test_pochhammer_vs_double_factorial(k):
    assert q_pochhammer_finite("q;q2", k) == q_odd_double_factorial(k) * (1 - Q) ** k


def test_q_binomial_out_of_range_is_zero():
    assert q_binomial(3, 5) == ZERO
    assert q_binomial(3, -1) == ZERO


@settings(max_examples=60, deadline=None)
@given(laurents, laurents, laurents)
def test_laurent_ring_laws(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a
    assert a - a == ZERO


@settings(max_examples=40, deadline=None)
@given(xspolys, xspolys, xspolys)
def test_xspoly_ring_laws(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    assert (a * b) * c == a * (b * c)


@settings(max_examples=60, deadline=None)
@given(laurents, laurents)
def test_exact_division_roundtrip(a, b):
    if b:
        assert (a * b) / b == a


def test_inexact_division_raises():
    with pytest.raises(InexactDivision):
        ONE / (1 + Q)
    with pytest.raises(InexactDivision):
        (1 + Q ** 2) / (1 + Q)
    with pytest.raises(ZeroDivisionError):
        Q / ZERO


def test_units_and_negative_powers():
    u = L({3: Fraction(2, 5)})
    assert u.is_unit()
    assert u * u.inverse() == ONE
    assert Q ** -3 * Q ** 3 == ONE
    with pytest.raises(InexactDivision):
        (1 + Q).inverse()


@settings(max_examples=60, deadline=None)
@given(laurents, st.integers(1, 3))
def test_substitution_is_a_homomorphism(a, k):
    b = a + Q
    assert (a * b).subs_inverse() == a.subs_inverse() * b.subs_inverse()
    assert (a * b).subs_power(k) == a.subs_power(k) * b.subs_power(k)
    assert a.subs_inverse().subs_inverse() == a


def test_evaluation():
    p = L({-1: 2, 2: Fraction(1, 3)})
    assert p(Fraction(1, 2)) == 4 + Fraction(1, 12)
    assert p(2.0) == pytest.approx(1 + 4 / 3)
    assert isinstance(p(2.0), float)


def test_xspoly_structure():
    h2 = XSPoly.x(2) - XSPoly.s() * Q
    assert h2.degree == 2
    assert h2.s_degree() == 1
    assert h2.parity_ok(2) and not h2.parity_ok(1)
    assert h2(3, 1, 2) == 7
    assert h2.q_derivative() == XSPoly.x(1, q_int(2))
    assert XSPoly.x(3).dilate(Q) == XSPoly.x(3, Q ** 3)
    assert h2.scale_s(Q ** 2) == XSPoly.x(2) - XSPoly.s() * Q ** 3
    assert XSPoly.const(5).q_derivative().is_zero()
    assert XSPoly(()).degree < 0


def test_rendering():
    assert str(XSPoly.x(2) - XSPoly.const(1 - Q)) == "x^2 - (1 - q)"
    assert str(q_int(3)) == "1 + q + q^2"
    assert "q^{2}" in q_int(3).latex()


@settings(max_examples=60, deadline=None)
@given(laurents)
def test_laurent_json_roundtrip(a):
    assert loads_laurent(dumps(a)) == a
    data = json.loads(dumps(a))
    assert all("/" in v for v in data.values())


@settings(max_examples=40, deadline=None)
@given(xspolys)
def test_xspoly_json_roundtrip(p):
    assert loads_xspoly(dumps(p)) == p
