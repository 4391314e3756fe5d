import json
from fractions import Fraction

import pytest

from qhermite.exactalg import ONE, Q, S, X, SPoly, XSPoly, q_factorial, q_int
from qhermite.functionals import (
    LAMBDA_H,
    LAMBDA_HBAR,
    LAMBDA_HI,
    L_HII,
    apply_functional,
    classical_moment_check,
    defining_property_check,
    functional_for,
    gram_to_json,
    hbar_witness,
    is_diagonal,
    moments_from_defining_property,
    moments_from_inversion,
    norm_closed_form,
    orthogonality_check,
    orthogonality_matrix,
    specialization_check,
)

ORTHO = ["H", "HI", "HII", "CLASSICAL"]
ONE_S = SPoly((ONE,))


def test_moment_examples():
    assert LAMBDA_H.moment(2) == SPoly.s(1, Q)
    assert LAMBDA_HI.moment(4) == SPoly(((1 - Q) * (1 - Q ** 3),))
    assert L_HII.moment(2) == SPoly(((1 - Q) / Q,))
    assert LAMBDA_H.moment(5).is_zero()


def test_apply_functional_examples():
    assert apply_functional(LAMBDA_H, XSPoly.const(1)) == ONE_S
    assert LAMBDA_H(X ** 2 - S * Q).is_zero()


def test_gram_examples():
    g = orthogonality_matrix("H", 3)
    assert g[0][0] == ONE_S
    assert g[1][1] == SPoly.s(1, Q)
    assert g[2][2] == SPoly.s(2, Q ** 3 * q_factorial(2))
    assert g[3][3] == norm_closed_form("H", 3) == SPoly.s(3, Q ** 6 * q_factorial(3))


@pytest.mark.parametrize("family", ORTHO)
def test_orthogonality(family):
    assert orthogonality_check(family, 10)


@pytest.mark.parametrize("family", ORTHO)
def test_moment_routes_agree(family):
    closed = functional_for(family)
    inv = moments_from_inversion(family)
    solved = moments_from_defining_property(family, 8)
    for m in range(9):
        assert closed.moment(2 * m) == inv.moment(2 * m) == solved[m]


@pytest.mark.parametrize("family", ORTHO + ["HBAR"])
def test_defining_property(family):
    assert defining_property_check(family, 20 if family != "HBAR" else 12)


def test_hbar_moments_from_defining_property():
    solved = moments_from_defining_property("HBAR", 6)
    assert all(LAMBDA_HBAR.moment(2 * m) == solved[m] for m in range(7))


def test_hbar_not_orthogonal():
    value, expected = hbar_witness()
    assert value == expected == SPoly.s(2, (Q ** 2 - 1) * q_int(3))
    g = orthogonality_matrix("HBAR", 4)
    assert not is_diagonal(g)
    assert g[1][3] == expected
    with pytest.raises(ValueError):
        norm_closed_form("HBAR", 2)


def test_coherence():
    assert specialization_check(15)
    assert classical_moment_check(12)


def test_errors():
    with pytest.raises(ValueError):
        orthogonality_matrix("H", 13)
    with pytest.raises(ValueError):
        functional_for("K")
    with pytest.raises(ValueError):
        moments_from_inversion("HBAR")


def test_custom_functional_breaks_orthogonality():
    g = orthogonality_matrix("H", 4, functional=LAMBDA_HBAR)
    assert not is_diagonal(g)


def test_gram_json():
    g = orthogonality_matrix("HI", 3)
    exact = json.loads(json.dumps(gram_to_json(g, q=Fraction(1, 2))))
    assert exact[0][0] == "1/1"
    assert exact[1][1] == "1/2"  # (q;q)_1 at q = 1/2
    assert exact[1][2] == "0/1"
    symbolic = gram_to_json(orthogonality_matrix("H", 2))
    assert isinstance(symbolic[1][1], list)
    valued = gram_to_json(orthogonality_matrix("H", 2), q=Fraction(1, 2), s=Fraction(3))
    assert valued[1][1] == "3/2"
