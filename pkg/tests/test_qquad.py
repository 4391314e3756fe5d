import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qhermite.exactalg import Q, X, XSPoly
from qhermite.qquad import (
    NonConvergence,
    NumericConfig,
    integration_by_parts_check,
    jackson_improper_bilateral,
    jackson_integral,
    jackson_integral_ab,
    lambda_I,
    L_II,
    measureI_normalization,
    measureI_validation,
    measureII_normalization,
    measureII_validation,
    parse_expression,
    polynomial_integral_exact,
    psi_normalization,
    qproduct_infinite,
    theta_sum,
    weight_II,
)

QS = [0.3, 0.5, 0.8]

# frozen from mpmath at 30 digits (notes/oracles)
QPOCH_INF = {0.3: 0.61264815421325654137516943258, 0.5: 0.288788095086602421278899721929,
             0.8: 0.00336800585242311550080250943912}
NORM_I = {0.3: 1.85882888696311750695746326211, 0.5: 1.64163256065515386629384277023,
          0.8: 1.09129335610692237825673473413}
NORM_II = {
    (0.3, 0.5): 1.3743411142138562775851521017,
    (0.3, 1.0): 1.37720321632175252361628346437,
    (0.3, 2.0): 1.3743411142138562775851521017,
    (0.3, 0.7): 1.37525327007073526587364233426,
    (0.5, 0.5): 1.38044655146525733810342616545,
    (0.5, 1.0): 1.38044655146525733810342616545,
    (0.5, 2.0): 1.38044655146525733810342616545,
    (0.5, 0.7): 1.38043933453000680411906346769,
    (0.8, 0.5): 1.0320815344990365045304494782,
    (0.8, 1.0): 1.03208153449903650458528475356,
    (0.8, 2.0): 1.0320815344990365045304494782,
    (0.8, 0.7): 1.03208153449903650412201161814,
}


def rel(a, b):
    return abs(a - b) / max(abs(a), abs(b))


@pytest.mark.parametrize("q", QS)
def test_qpochhammer_oracle(q):
    assert rel(qproduct_infinite(q, q), QPOCH_INF[q]) < 1e-12


def test_qproduct_edge_cases():
    assert qproduct_infinite(0.0, 0.5) == 1.0
    with pytest.raises(ValueError):
        qproduct_infinite(0.5, 1.0)


@pytest.mark.parametrize("q", QS)
def test_euler_identity(q):
    assert rel(1 / qproduct_infinite(q, q * q), qproduct_infinite(-q, q)) < 1e-10


@pytest.mark.parametrize("q", QS)
def test_measure_I_normalization_oracle(q):
    cfg = NumericConfig(q)
    norm = measureI_normalization(cfg)
    assert rel(norm, NORM_I[q]) < 1e-9
    assert rel(norm, (1 - q) * theta_sum(q)) < 1e-9


@pytest.mark.parametrize("q", QS)
def test_one_sided_theta_sum_is_half(q):
    one_sided = (1 - q) * sum(q ** (n * (n + 1) / 2) for n in range(200))
    norm = measureI_normalization(NumericConfig(q))
    assert abs(norm / one_sided - 2) < 1e-9


@pytest.mark.parametrize("key", sorted(NORM_II))
def test_measure_II_normalization_oracle(key):
    q, c = key
    cfg = NumericConfig(q, c=c)
    assert rel(measureII_normalization(cfg), NORM_II[key]) < 1e-9
    assert rel(psi_normalization(q, c), NORM_II[key]) < 1e-9


@pytest.mark.parametrize("c", [0.5, 2.0])
def test_product_without_c_is_off_by_c(c):
    q = 0.3
    norm = measureII_normalization(NumericConfig(q, c=c))
    assert abs(psi_normalization(q, c) / c / norm - 1 / c) < 1e-9
    assert rel(psi_normalization(q, c) / c, norm) > 0.1


@pytest.mark.parametrize("q", QS)
@pytest.mark.parametrize("degree", range(11))
def test_polynomial_integrals(q, degree):
    p = XSPoly([(-1) ** k * (k + 1) for k in range(degree + 1)])
    cfg = NumericConfig(q, tolerance=1e-12)
    f = lambda x: sum((-1) ** k * (k + 1) * x ** k for k in range(degree + 1))  # noqa: E731
    assert rel(jackson_integral(f, 1.0, cfg), polynomial_integral_exact(p, q)) < 1e-12


def test_jackson_examples():
    cfg = NumericConfig(0.5)
    assert abs(jackson_integral(lambda x: 1.0, 1.0, cfg) - 1) < 1e-12
    assert abs(jackson_integral(lambda x: x, 1.0, cfg) - 1 / 1.5) < 1e-12
    assert abs(jackson_integral_ab(lambda x: x, 0.25, 1.0, cfg) - (1 - 0.0625) / 1.5) < 1e-12


@pytest.mark.parametrize("q", QS)
def test_fundamental_theorem(q):
    d = (X ** 3).q_derivative()
    f = lambda x: float(d.coefficients(q, 0)[2]) * x * x  # noqa: E731
    assert abs(jackson_integral(f, 1.0, NumericConfig(q)) - 1) < 1e-12


@pytest.mark.parametrize("q", QS)
def test_integration_by_parts(q):
    cfg = NumericConfig(q)
    one = XSPoly.const(1)
    assert integration_by_parts_check(one, one, 0.0, 1.0, cfg)
    assert integration_by_parts_check(X, X ** 2, 0.0, 1.0, cfg)
    assert integration_by_parts_check(X ** 3, X ** 2, 0.25, 1.0, cfg)
    assert integration_by_parts_check(X ** 2 - X * Q, X ** 4 + 1, 0.1, 0.9, cfg)


def test_bilateral_odd_function_vanishes():
    cfg = NumericConfig(0.5)
    assert abs(jackson_improper_bilateral(lambda x: x * weight_II(x, 0.5), cfg)) < 1e-15


@pytest.mark.parametrize("q", QS)
def test_measure_I_report(q):
    rep = measureI_validation(NumericConfig(q))
    assert rep.ok, rep.failures()
    assert rep.to_json()["pass"] is True


def test_measure_I_moment_example():
    assert abs(lambda_I(lambda x: x * x, NumericConfig(0.5)) - 0.5) < 1e-9


@pytest.mark.parametrize("q", QS)
def test_measure_II_report(q):
    rep = measureII_validation(NumericConfig(q), cs=(0.5, 1.0, 2.0))
    assert rep.ok, rep.failures()


@pytest.mark.parametrize("q", QS)
def test_measure_II_off_grid_anchors(q):
    # at q = 0.5 the anchors 0.5, 1, 2 share a grid, so use c values off it
    rep = measureII_validation(NumericConfig(q), cs=(0.7, 1.3), n_max=6)
    assert rep.ok, rep.failures()
    assert abs(L_II(lambda x: x * x, NumericConfig(0.5, c=0.7)) - 1.0) < 1e-8


@pytest.mark.parametrize("q", QS)
def test_doubling_max_terms_is_stable(q):
    a = NumericConfig(q, max_terms=4000)
    b = NumericConfig(q, max_terms=8000)
    assert abs(measureI_normalization(a) - measureI_normalization(b)) < 1e-9
    for c in (0.5, 2.0):
        assert abs(measureII_normalization(a.with_c(c)) - measureII_normalization(b.with_c(c))) < 1e-9


def test_nonconvergence():
    cfg = NumericConfig(0.95, max_terms=50)
    with pytest.raises(NonConvergence) as info:
        jackson_integral(lambda x: 1.0, 1.0, cfg)
    assert info.value.terms == 50
    with pytest.raises(NonConvergence):
        jackson_integral(lambda x: x ** -1.5, 1.0, NumericConfig(0.5, max_terms=200))


@pytest.mark.parametrize("kwargs", [{"q": 0.99}, {"q": 0.01}, {"q": 0.5, "c": 0}, {"q": 0.5, "tolerance": 0},
                                    {"q": 0.5, "max_terms": 10}])
def test_config_validation(kwargs):
    with pytest.raises(ValueError):
        NumericConfig(**kwargs)


@settings(max_examples=50, deadline=None)
@given(st.floats(-3, 3))
def test_parse_expression(x):
    f = parse_expression("2*x**2 - sin(x) + pi")
    assert f(x) == pytest.approx(2 * x * x - math.sin(x) + math.pi)


@pytest.mark.parametrize("bad", ["__import__('os')", "x.real", "open(x)", "[x]"])
def test_parse_expression_rejects(bad):
    with pytest.raises((ValueError, SyntaxError)):
        parse_expression(bad)(1.0)
