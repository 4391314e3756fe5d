"""Noncommutative operator calculus on XSPoly.

Operators form a small term tree. Composition follows the usual
convention: in ``A * B`` the right factor acts first. Operator equality is
only ever tested on a finite monomial basis ``{x**m : m <= M}``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce

from .exactalg import ONE, Q, LaurentQ, SPoly, XSPoly, q_binomial, q_pochhammer_finite, q_int
from .families import Family, poly


class Operator:
    """Base class; subclasses implement ``_apply``."""

    def __call__(self, p) -> XSPoly:
        return self._apply(p if isinstance(p, XSPoly) else XSPoly.const(p))

    def _apply(self, p: XSPoly) -> XSPoly:
        raise NotImplementedError

    def __add__(self, other):
        other = _as_operator(other)
        return Sum((self, other))

    __radd__ = __add__

    def __neg__(self):
        return Scalar(SPoly((-ONE,))) * self

    def __sub__(self, other):
        return self + (-_as_operator(other))

    def __rsub__(self, other):
        return _as_operator(other) - self

    def __mul__(self, other):
        return Compose((self, _as_operator(other)))

    def __rmul__(self, other):
        return Compose((_as_operator(other), self))

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative operator power")
        return Power(self, n)


def _as_operator(v) -> Operator:
    if isinstance(v, Operator):
        return v
    if isinstance(v, XSPoly):
        return MulBy(v)
    return Scalar(v if isinstance(v, SPoly) else SPoly._from_tuple((SPoly._lift_coeff(v),)))


@dataclass(frozen=True, eq=False)
class _XOp(Operator):
    def _apply(self, p):
        return p.shift(1)

    def __repr__(self):
        return "X"


@dataclass(frozen=True, eq=False)
class _DqOp(Operator):
    def _apply(self, p):
        return p.q_derivative()

    def __repr__(self):
        return "Dq"


@dataclass(frozen=True, eq=False)
class _EpsOp(Operator):
    power: int = 1

    def _apply(self, p):
        return p.dilate(LaurentQ.q(self.power))

    def __repr__(self):
        return "Eps" if self.power == 1 else f"Eps^{self.power}"


@dataclass(frozen=True, eq=False)
class Scalar(Operator):
    value: SPoly

    def _apply(self, p):
        return p.scale(self.value)

    def __repr__(self):
        return f"[{self.value}]"


@dataclass(frozen=True, eq=False)
class MulBy(Operator):
    """Multiplication by a fixed polynomial."""

    factor: XSPoly

    def _apply(self, p):
        return self.factor * p

    def __repr__(self):
        return f"M({self.factor})"


@dataclass(frozen=True, eq=False)
class Sum(Operator):
    terms: tuple

    def _apply(self, p):
        return reduce(lambda acc, t: acc + t._apply(p), self.terms, XSPoly(()))

    def __repr__(self):
        return "(" + " + ".join(map(repr, self.terms)) + ")"


@dataclass(frozen=True, eq=False)
class Compose(Operator):
    factors: tuple

    def _apply(self, p):
        for f in reversed(self.factors):
            p = f._apply(p)
        return p

    def __repr__(self):
        return "".join(map(repr, self.factors))


@dataclass(frozen=True, eq=False)
class Power(Operator):
    base: Operator
    n: int

    def _apply(self, p):
        for _ in range(self.n):
            p = self.base._apply(p)
        return p

    def __repr__(self):
        return f"({self.base!r})^{self.n}"


X = _XOp()
DQ = _DqOp()
EPS = _EpsOp(1)
EPS_INV = _EpsOp(-1)
IDENTITY = Scalar(SPoly((ONE,)))

_S = SPoly.s()


def apply(op: Operator, p) -> XSPoly:
    return op(p)


def _s_value(s) -> SPoly:
    if s is None:
        return _S
    return s if isinstance(s, SPoly) else SPoly._from_tuple((SPoly._lift_coeff(s),))


def _qs(k: int, s: SPoly) -> SPoly:
    return s.scale(LaurentQ.q(k))


def agree_on_monomials(a: Operator, b: Operator, max_degree: int) -> bool:
    """Operator equality restricted to x**0 .. x**max_degree."""
    return all(a(XSPoly.x(m)) == b(XSPoly.x(m)) for m in range(max_degree + 1))


def product_rule_check(j: int, m: int) -> bool:
    """Dq M_f = M_{f(qx)} Dq + M_{Dq f} on x**m for f = x**j."""
    f = XSPoly.x(j)
    lhs = DQ * MulBy(f)
    rhs = MulBy(f.dilate(Q)) * DQ + MulBy(f.q_derivative())
    return lhs(XSPoly.x(m)) == rhs(XSPoly.x(m))


def commutation_check(j: int, m: int) -> bool:
    """Dq M_f = M_f Dq + M_{Dq f} Eps on x**m for f = x**j."""
    f = XSPoly.x(j)
    lhs = DQ * MulBy(f)
    rhs = MulBy(f) * DQ + MulBy(f.q_derivative()) * EPS
    return lhs(XSPoly.x(m)) == rhs(XSPoly.x(m))


def rodrigues_product_descending(n: int, s=None) -> XSPoly:
    """(x - q^(n-1) s Dq) ... (x - s Dq) 1."""
    s = _s_value(s)
    factors = [X - Scalar(_qs(k, s)) * DQ for k in range(n - 1, -1, -1)]
    return Compose(tuple(factors))(1) if factors else XSPoly.const(1)


def rodrigues_product_ascending(n: int, s=None) -> XSPoly:
    """(x - q s Dq)(x - q^3 s Dq) ... (x - q^(2n-1) s Dq) 1."""
    s = _s_value(s)
    factors = [X - Scalar(_qs(2 * k + 1, s)) * DQ for k in range(n)]
    return Compose(tuple(factors))(1) if factors else XSPoly.const(1)


def rodrigues_K(n: int, s=None) -> XSPoly:
    """(x Eps - s Dq)^n 1."""
    s = _s_value(s)
    return ((X * EPS - Scalar(s) * DQ) ** n)(1)


def rodrigues_hbar(n: int, s=None) -> XSPoly:
    """(x - s Eps Dq)^n 1."""
    s = _s_value(s)
    return ((X - Scalar(s) * EPS * DQ) ** n)(1)


def scaled_power_identity(n: int) -> bool:
    """q^C(n,2) ((x - q s Dq) Eps^-1)^n 1 reproduces H_n."""
    op = (X - Scalar(_qs(1, _S)) * DQ) * EPS_INV
    return (op ** n)(1) * LaurentQ.q(n * (n - 1) // 2) == poly(Family.H, n)


def burchnall_operators(n: int) -> tuple[Operator, Operator]:
    lhs = Compose(tuple(X - Scalar(_qs(2 * k + 1, _S)) * DQ for k in range(n))) if n else IDENTITY
    minus_s_dq = Scalar(-_S) * DQ
    terms = []
    for k in range(n + 1):
        c = SPoly((q_binomial(n, k) * LaurentQ.q(k * n),))
        terms.append(Scalar(c) * MulBy(poly(Family.H, n - k)) * minus_s_dq ** k)
    return lhs, Sum(tuple(terms))


def burchnall_check(n: int, max_degree: int | None = None) -> bool:
    """Ascending product against its binomial expansion, on monomials."""
    max_degree = 2 * n + 4 if max_degree is None else max_degree
    if max_degree < n:
        raise ValueError("degree bound must be >= n")
    lhs, rhs = burchnall_operators(n)
    return agree_on_monomials(lhs, rhs, max_degree)


def umbral_substitute(p: XSPoly, op: Operator) -> XSPoly:
    """Replace x**k in ``p`` by op**k applied to 1; coefficients act as scalars."""
    total = XSPoly(())
    term = XSPoly.const(1)
    for k, c in enumerate(p.coeffs):
        if k:
            term = op(term)
        if c:
            total = total + term.scale(c)
    return total


def umbral_inverse_check(n: int) -> bool:
    """H_n(x + q s Eps Dq) 1 == x**n."""
    a = X + Scalar(_qs(1, _S)) * EPS * DQ
    return umbral_substitute(poly(Family.H, n), a) == XSPoly.x(n)


# -- truncated weight series in x --------------------------------------------


def weight_hi(order: int) -> XSPoly:
    """(q^2 x^2; q^2)_inf through x**order, times (q^2; q^2)_M with M = order // 2."""
    m = order // 2
    top = q_pochhammer_finite("q2;q2", m)
    coeffs = []
    for k in range(m + 1):
        c = LaurentQ.q(k * k + k) * (top / q_pochhammer_finite("q2;q2", k)) * (-1) ** k
        coeffs.extend([c, 0] if k < m else [c])
    return XSPoly(coeffs).truncate(order)


def weight_k(order: int) -> XSPoly:
    """e_{q^2}(-x^2/([2] s)) through x**order, times s^M [2][4]...[2M]."""
    m = order // 2
    coeffs = []
    for k in range(m + 1):
        c = LaurentQ(1)
        for j in range(k + 1, m + 1):
            c = c * q_int(2 * j)
        coeffs.append(SPoly.s(m - k, c * (-1) ** k))
        if k < m:
            coeffs.append(SPoly(()))
    return XSPoly(coeffs).truncate(order)


def weight_hii(order: int) -> XSPoly:
    """1/(-x^2; q^2)_inf through x**order, times (q^2; q^2)_M."""
    m = order // 2
    top = q_pochhammer_finite("q2;q2", m)
    coeffs = []
    for k in range(m + 1):
        coeffs.append((top / q_pochhammer_finite("q2;q2", k)) * (-1) ** k)
        if k < m:
            coeffs.append(0)
    return XSPoly(coeffs).truncate(order)


class CannotCertify(ValueError):
    """The truncation order is too small to decide the identity."""


def series_rodrigues_sides(kind, n: int, order: int) -> tuple[XSPoly, XSPoly, int]:
    """Cross-multiplied sides (p_n * w, prefactor * op^n w) and the valid degree."""
    family = Family.parse(kind)
    if order < n + 4:
        raise CannotCertify(f"truncation order {order} < n + 4 = {n + 4}")
    if family is Family.HI:
        w = weight_hi(order)
        op = EPS_INV * DQ
        pre = LaurentQ.q(n * (n - 1) // 2 - n) * (Q - 1) ** n
    elif family is Family.K:
        w = weight_k(order)
        op = DQ
        pre = SPoly.s(n, LaurentQ((-1) ** n))
    elif family is Family.HII:
        w = weight_hii(order)
        op = DQ
        pre = LaurentQ.q(-n * (n - 1) // 2) * (Q - 1) ** n
    else:
        raise ValueError(f"no Rodrigues series check for {family.value}")
    lhs = (poly(family, n) * w).truncate(order)
    rhs = (op ** n)(w) * pre
    return lhs, rhs, order - n


def series_rodrigues_check(kind, n: int, order: int) -> bool:
    lhs, rhs, valid = series_rodrigues_sides(kind, n, order)
    return lhs.truncate(valid) == rhs.truncate(valid)


def ladder_relation_sides(n: int, order: int) -> tuple[XSPoly, XSPoly]:
    """(1-q) Eps^-1 Dq (w h_n) and -q^(1-n) w h_{n+1}, truncated to order - 2."""
    w = weight_hi(order)
    lhs = (EPS_INV * DQ)((w * poly(Family.HI, n)).truncate(order)) * (1 - Q)
    rhs = (w * poly(Family.HI, n + 1)) * (-LaurentQ.q(1 - n))
    return lhs.truncate(order - 2), rhs.truncate(order - 2)


def weighted_ladder_check(n: int, order: int) -> bool:
    if order < n + 4:
        raise CannotCertify(f"truncation order {order} < n + 4")
    lhs, rhs = ladder_relation_sides(n, order)
    return lhs == rhs


def conjugated_step_check(f: XSPoly, order: int) -> bool:
    """(q-1) Eps^-1 Dq (w f) == q w (x Eps^-1 - (1-q) Dq Eps^-1) f below degree order."""
    w = weight_hi(order)
    lhs = (EPS_INV * DQ)((w * f).truncate(order)) * (Q - 1)
    inner = (X * EPS_INV - Scalar(SPoly((1 - Q,))) * DQ * EPS_INV)(f)
    rhs = (w * inner) * Q
    return lhs.truncate(order - 1) == rhs.truncate(order - 1)
