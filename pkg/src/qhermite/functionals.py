"""Moment functionals for the q-Hermite families and their Gram matrices."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from .exactalg import (
    ONE,
    Q,
    LaurentQ,
    SPoly,
    XSPoly,
    q_factorial,
    q_int,
    q_odd_double_factorial,
    q_pochhammer_finite,
)
from .families import Family, leading_coefficient, monomial_expansion, poly

Moment = Callable[[int], SPoly]


def _binom2(n: int) -> int:
    return n * (n - 1) // 2


@dataclass(frozen=True)
class MomentFunctional:
    """Linear functional with given values on x**(2m); odd moments vanish."""

    name: str
    even_moment: Moment = field(repr=False)
    _cache: dict = field(default_factory=dict, repr=False, compare=False)

    def moment(self, k: int) -> SPoly:
        """Value on x**k."""
        if k % 2:
            return SPoly(())
        m = k // 2
        v = self._cache.get(m)
        if v is None:
            v = self.even_moment(m)
            self._cache[m] = v
        return v

    def __call__(self, p: XSPoly) -> SPoly:
        return apply_functional(self, p)


def apply_functional(f: MomentFunctional, p: XSPoly) -> SPoly:
    total = SPoly(())
    for k, c in enumerate(p.coeffs):
        if c and not k % 2:
            total = total + c * f.moment(k)
    return total


# closed forms; the H moments are derived from the monomial expansion of x^2m
LAMBDA_H = MomentFunctional(
    "Lambda_H", lambda m: SPoly.s(m, LaurentQ.q(m) * q_odd_double_factorial(m))
)
LAMBDA_HI = MomentFunctional("Lambda_HI", lambda m: SPoly((q_pochhammer_finite("q;q2", m),)))
L_HII = MomentFunctional(
    "L_HII", lambda m: SPoly((q_pochhammer_finite("q;q2", m) * LaurentQ.q(-m * m),))
)
LAMBDA_HBAR = MomentFunctional(
    "lambda_HBAR", lambda m: SPoly.s(m, LaurentQ.q(m * m - m) * q_odd_double_factorial(m))
)
LAMBDA_CLASSICAL = MomentFunctional(
    "Lambda_classical", lambda m: SPoly.s(m, math.prod(range(1, 2 * m, 2)))
)

FUNCTIONALS = {
    Family.H: LAMBDA_H,
    Family.HI: LAMBDA_HI,
    Family.HII: L_HII,
    Family.HBAR: LAMBDA_HBAR,
    Family.CLASSICAL: LAMBDA_CLASSICAL,
}


def functional_for(family) -> MomentFunctional:
    family = Family.parse(family)
    try:
        return FUNCTIONALS[family]
    except KeyError:
        raise ValueError(f"no moment functional for {family.value}") from None


def moments_from_inversion(family) -> MomentFunctional:
    """Moments read off x^2m = sum c_k p_{2m-2k}: only the p_0 term survives."""
    family = Family.parse(family)
    if family not in (Family.H, Family.HI, Family.HII, Family.CLASSICAL):
        raise ValueError(f"no inversion route for {family.value}")

    def moment(m):
        c, deg = monomial_expansion(family, 2 * m)[-1]
        assert deg == 0
        return c

    return MomentFunctional(f"{functional_for(family).name}/inversion", moment)


def moments_from_defining_property(family, m_max: int) -> list[SPoly]:
    """Solve f(p_n) = [n = 0] for the even moments, n = 2, 4, ..., 2*m_max."""
    family = Family.parse(family)
    out: list[SPoly] = []
    for m in range(m_max + 1):
        p = poly(family, 2 * m)
        acc = SPoly((ONE,)) if m == 0 else SPoly(())
        for j in range(m):
            acc = acc - p.coeff(2 * j) * out[j]
        lead = leading_coefficient(family, 2 * m)
        out.append(acc.map_coeffs(lambda c: c / lead))
    return out


def orthogonality_matrix(family, max_n: int, functional: MomentFunctional | None = None):
    """Gram matrix G[n][m] = f(p_n p_m) as SPoly entries."""
    if max_n > 12:
        raise ValueError("orthogonality_matrix supports max_n <= 12")
    family = Family.parse(family)
    f = functional or functional_for(family)
    polys = [poly(family, n) for n in range(max_n + 1)]
    g = [[SPoly(())] * (max_n + 1) for _ in range(max_n + 1)]
    for n in range(max_n + 1):
        for m in range(n, max_n + 1):
            if (n + m) % 2 == 0:
                g[n][m] = g[m][n] = apply_functional(f, polys[n] * polys[m])
    return g


def norm_closed_form(family, n: int) -> SPoly:
    """f(p_n^2) in closed form; HI and HII values are derived by specialization."""
    family = Family.parse(family)
    if family is Family.H:
        return SPoly.s(n, LaurentQ.q(_binom2(n + 1)) * q_factorial(n))
    if family is Family.HI:
        # H at s = (1-q)/q
        return SPoly((LaurentQ.q(_binom2(n)) * q_pochhammer_finite("q;q", n),))
    if family is Family.HII:
        # K norm at s = 1-q, carried through the x -> x/q^n rescaling
        return SPoly((LaurentQ.q(-n * n) * q_pochhammer_finite("q;q", n),))
    if family is Family.CLASSICAL:
        return SPoly.s(n, math.factorial(n))
    raise ValueError(f"{family.value} has no orthogonality norm")


def is_diagonal(g) -> bool:
    return all(not g[i][j] for i in range(len(g)) for j in range(len(g)) if i != j)


def orthogonality_check(family, max_n: int) -> bool:
    g = orthogonality_matrix(family, max_n)
    return is_diagonal(g) and all(
        g[n][n] == norm_closed_form(family, n) for n in range(max_n + 1)
    )


def defining_property_check(family, n_max: int) -> bool:
    """f(p_n) = [n = 0] from the closed-form moments."""
    f = functional_for(family)
    one = SPoly((ONE,))
    return all(
        apply_functional(f, poly(family, n)) == (one if n == 0 else SPoly(()))
        for n in range(n_max + 1)
    )


def hbar_witness() -> tuple[SPoly, SPoly]:
    """lambda(hbar_1 hbar_3) and the expected (q^2 - 1)[3] s^2."""
    val = apply_functional(LAMBDA_HBAR, poly(Family.HBAR, 1) * poly(Family.HBAR, 3))
    return val, SPoly.s(2, (Q * Q - 1) * q_int(3))


def specialization_check(m_max: int) -> bool:
    """Lambda_H moments at s = (1-q)/q equal the Lambda_HI moments."""
    s_hi = SPoly(((1 - Q) / Q,))
    return all(
        LAMBDA_H.moment(2 * m).subs_var(s_hi) == LAMBDA_HI.moment(2 * m)
        for m in range(m_max + 1)
    )


def classical_moment_check(m_max: int) -> bool:
    return all(
        LAMBDA_H.moment(2 * m).subs_q(1) == LAMBDA_CLASSICAL.moment(2 * m)
        for m in range(m_max + 1)
    )


def _exact_str(v: Fraction) -> str:
    return f"{v.numerator}/{v.denominator}"


def gram_to_json(g, q=None, s=None) -> list:
    """Gram matrix as JSON; exact-rational strings when q (and s if needed) are given."""
    out = []
    for row in g:
        r = []
        for e in row:
            if q is not None and (s is not None or e.degree <= 0):
                r.append(_exact_str(Fraction(e(Fraction(s or 0), Fraction(q)))))
            else:
                r.append([c.to_json() for c in e.coeffs])
        out.append(r)
    return out
