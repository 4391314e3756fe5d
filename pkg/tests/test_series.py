import json
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qhermite.exactalg import Q, S, X, LaurentQ, XSPoly, q_int, q_pochhammer_finite
from qhermite.families import Family, poly
from qhermite.series import (
    GENFUN_VARIANTS,
    QFACT,
    QPOCH,
    SHIFTED_VARIANTS,
    TruncSeries,
    classical_genfun_check,
    classical_phi_check,
    classical_tangent_euler,
    dq_exponential_checks,
    family_series,
    functional_equation_checks,
    genfun_check,
    genfun_sides,
    hermite_at_one,
    identity_219_check,
    inversion_via_genfun,
    inverted_base_exp_check,
    inverted_base_product_check,
    phi_functional_check,
    phi_moments,
    q_exp,
    q_tangent_euler,
    ratio_expansion_check,
    ratio_expansion_sides,
    shifted_genfun_check,
    shifted_genfun_sides,
)

L = LaurentQ


# -- TruncSeries arithmetic ---------------------------------------------------------

scalar_series = st.lists(
    st.dictionaries(st.integers(-2, 3), st.integers(-3, 3), max_size=3).map(L), min_size=1, max_size=7
)


def _series(cs, profile=QFACT):
    return TruncSeries(len(cs) - 1, tuple(cs), profile)


@settings(max_examples=40, deadline=None)
@given(scalar_series, scalar_series)
def test_product_commutes_and_distributes(a, b):
    n = min(len(a), len(b))
    sa, sb = _series(a[:n]), _series(b[:n])
    assert sa * sb == sb * sa
    assert sa * (sb + sa) == sa * sb + sa * sa


@settings(max_examples=40, deadline=None)
@given(scalar_series, st.sampled_from([QFACT, QPOCH]))
def test_reciprocal(cs, profile):
    cs = [L(1)] + cs[1:]
    ser = _series(cs, profile)
    assert ser * ser.reciprocal() == TruncSeries.one(ser.order, profile)


def test_reciprocal_needs_unit():
    with pytest.raises(ArithmeticError):
        _series([L({0: 1, 1: 1}), L(1)]).reciprocal()


def test_profile_mismatch():
    with pytest.raises(ValueError):
        q_exp("e_q", 3) + q_exp("e", 3)


def test_times_z_and_renormalize():
    e = q_exp("e_q", 5)
    shifted = e.times_z()
    assert shifted[0].is_zero()
    assert shifted.renormalize(QPOCH).renormalize(QFACT) == shifted
    assert e.denom_profile == "[n]!"


def test_to_json():
    data = json.loads(json.dumps(q_exp("E_q", 3).to_json()))
    assert data["order"] == 3 and data["denom_profile"] == "[n]!"
    assert len(data["coeffs"]) == 4


# -- q-exponentials ----------------------------------------------------------------


def test_q_exp_examples():
    e = q_exp("e_q", 2)
    assert [c for c in e.coeffs] == [XSPoly.const(1)] * 3
    E = q_exp("E_q", 3)
    assert E[2] == XSPoly.const(Q) and E[3] == XSPoly.const(Q ** 3)
    with pytest.raises(ValueError):
        q_exp("zeta", 3)


def test_inverted_base_exponential_coefficients():
    # e(z, 1/q) has z^n coefficient (-1)^n q^{C(n+1,2)}/(q;q)_n
    ser = q_exp("e", 8).subs_q_inverse(QPOCH)
    for n in range(9):
        assert ser[n] == XSPoly.const(L({n * (n + 1) // 2: (-1) ** n}))


@pytest.mark.parametrize("order", [0, 5, 40])
def test_identity_219(order):
    assert identity_219_check(order)


def test_exponential_identities():
    assert inverted_base_exp_check(20)
    assert inverted_base_product_check(20)
    assert all(functional_equation_checks(30).values())
    assert set(functional_equation_checks(2)) == {"e_q", "E_q"}
    assert all(dq_exponential_checks(20).values())


def test_ratio_expansion():
    assert ratio_expansion_check(0, 1)
    lhs, rhs = ratio_expansion_sides(1, 1)
    assert lhs[1] == X - 1 == rhs[1]
    assert ratio_expansion_check(8, S)
    assert ratio_expansion_check(12, Fraction(2, 3))


# -- generating functions -------------------------------------------------------------


def test_genfun_small():
    lhs, rhs = genfun_sides("H", 2)
    assert lhs[0] == rhs[0] == XSPoly.const(1)
    assert lhs[2] == rhs[2] == X ** 2 - S * Q


@pytest.mark.parametrize("variant", GENFUN_VARIANTS)
def test_genfun_variants(variant):
    lhs, rhs = genfun_sides(variant, 20)
    assert lhs == rhs


@pytest.mark.parametrize("family", list(Family))
def test_genfun_by_family(family):
    assert genfun_check(family, 12)


def test_classical_genfun():
    assert classical_genfun_check(16)


def test_genfun_detects_wrong_family():
    lhs, _ = genfun_sides("K", 6)
    _, rhs = genfun_sides("H", 6)
    assert lhs != rhs


@pytest.mark.parametrize("variant", SHIFTED_VARIANTS)
def test_shifted_genfun(variant):
    lhs, rhs = shifted_genfun_sides(variant, 20)
    assert lhs == rhs


def test_shifted_genfun_examples():
    assert shifted_genfun_check("H", 0)
    assert shifted_genfun_check("H", 1)
    assert shifted_genfun_check("K", 12)


def test_undilated_shifted_form_fails_at_first_order():
    # without z -> qz on the right the z^1 coefficients are q x^2 - q s vs x^2 - q s
    shifted = TruncSeries.from_fn(1, lambda n: poly(Family.H, n + 1))
    lhs = shifted.times_poly_in_z([1, X * (Q - 1)])
    rhs = family_series(Family.H, 1).times_poly_in_z([X, S * -Q])
    assert lhs[0] == rhs[0]
    assert lhs[1] == X ** 2 * Q - S * Q
    assert rhs[1] == X ** 2 - S * Q


@pytest.mark.parametrize("n", range(13))
def test_inversion_via_genfun(n):
    assert inversion_via_genfun(n)


# -- tangent and Euler numbers -------------------------------------------------------

# frozen from a sympy series division of the q-exponential ratios
T3 = L({1: 1, 2: 1})
T5 = L({2: 1, 3: 2, 4: 3, 5: 4, 6: 3, 7: 2, 8: 1})
T7 = L(dict(zip(range(3, 19), [1, 3, 7, 13, 19, 26, 32, 35, 35, 32, 26, 19, 13, 7, 3, 1])))
E2 = L(1)
E4 = L({1: 1, 2: 2, 3: 1, 4: 1})
E6 = L(dict(zip(range(2, 13), [1, 3, 5, 8, 10, 10, 9, 7, 5, 2, 1])))


def test_q_tangent_euler_oracle():
    table = q_tangent_euler(3)
    assert table.tangent == (L(1), T3, T5, T7)
    assert table.euler == (L(1), E2, E4, E6)


def test_tangent_euler_at_one():
    t, e = q_tangent_euler(4).at(1)
    assert t == [1, 2, 16, 272, 7936]
    assert e == [1, 1, 5, 61, 1385]
    assert classical_tangent_euler(6) == (
        [1, 2, 16, 272, 7936, 353792, 22368256],
        [1, 1, 5, 61, 1385, 50521, 2702765],
    )


def test_tangent_euler_are_positive_with_q_at_one():
    table = q_tangent_euler(6)
    ct, ce = classical_tangent_euler(6)
    assert [t(1) for t in table.tangent] == ct
    assert [e(1) for e in table.euler] == ce
    for v in table.tangent + table.euler:
        assert all(c > 0 for c in v.terms().values())


def test_qnumber_table_json():
    data = json.loads(json.dumps(q_tangent_euler(2).to_json()))
    assert len(data["tangent"]) == 3 and len(data["euler"]) == 3


def test_hermite_at_one():
    assert hermite_at_one(2).coeff(0) == L(1)
    assert hermite_at_one(2).coeff(1) == -Q


def test_phi_small_moments():
    scale, ys = phi_moments(3)
    assert ys[0] == scale
    assert ys[1] * Q == scale  # Phi(s) = 1/q


@pytest.mark.parametrize("n_max", [0, 1, 4, 6])
def test_phi_functional(n_max):
    rep = phi_functional_check(n_max)
    assert rep.euler_ok and rep.tangent_ok and rep.classical_ok and rep.ok


def test_phi_limit():
    with pytest.raises(ValueError):
        phi_functional_check(9)


def test_classical_phi():
    assert classical_phi_check(6)
    # F(s^2) = E_4 / 3!! = 5/3 at q = 1
    scale, ys = phi_moments(2)
    assert ys[2](1) / scale(1) == Fraction(5, 3)


def test_q_exp_e_q2_coefficients():
    ser = q_exp("e_q2", 6, S)
    # z^{2k} coefficient of e_{q^2}(s z^2/[2]) is s^k/([2][4]...[2k]) over [2k]!
    assert ser[2] == S
    assert ser[4] == S ** 2 * q_int(3)
    assert ser[1].is_zero()


def test_pochhammer_profile_denoms():
    assert QPOCH.denom(3) == q_pochhammer_finite("q;q", 3)
    assert QFACT.ratio(4) == q_int(4)
