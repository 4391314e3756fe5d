"""Truncated power series in z with XSPoly coefficients.

Coefficients are stored *cleared*: the true coefficient of z**n is
``coeffs[n] / profile.denom(n)``, where the profile is e.g. [n]! or
(q;q)_n. With these normalizations products and reciprocals only need the
exact weights d_n / (d_k d_{n-k}), so everything stays in the Laurent ring.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .exactalg import (
    ONE,
    Q,
    S,
    X,
    InexactDivision,
    LaurentQ,
    SPoly,
    XSPoly,
    q_factorial,
    q_int,
    q_odd_double_factorial,
    q_pochhammer_finite,
)
from .families import Family, monomial_expansion, poly


class Profile:
    """Named denominator sequence d_0, d_1, ... for cleared coefficients."""

    def __init__(self, name: str, denom_fn):
        self.name = name
        self._fn = denom_fn
        self._denoms: list[LaurentQ] = []
        self._weights: dict[tuple[int, int], LaurentQ] = {}

    def denom(self, n: int) -> LaurentQ:
        while len(self._denoms) <= n:
            self._denoms.append(LaurentQ(self._fn(len(self._denoms))))
        return self._denoms[n]

    def weight(self, n: int, k: int) -> LaurentQ:
        """d_n / (d_k d_{n-k}), exact."""
        key = (n, k) if k <= n - k else (n, n - k)
        w = self._weights.get(key)
        if w is None:
            w = self.denom(n) / (self.denom(k) * self.denom(n - k))
            self._weights[key] = w
        return w

    def ratio(self, n: int) -> LaurentQ:
        """d_n / d_{n-1}."""
        return self.denom(n) / self.denom(n - 1)

    def __eq__(self, other):
        return isinstance(other, Profile) and other.name == self.name

    def __hash__(self):
        return hash(self.name)

    def __repr__(self):
        return f"Profile({self.name!r})"


def _even_denom(k: int) -> LaurentQ:
    d = ONE
    for j in range(1, k + 1):
        d = d * q_int(2 * j)
    return d


QFACT = Profile("[n]!", q_factorial)
QPOCH = Profile("(q;q)_n", lambda n: q_pochhammer_finite("q;q", n))
EVEN = Profile("[2][4]...[2n]", _even_denom)
PLAIN = Profile("1", lambda n: ONE)
FACT = Profile("n!", math.factorial)


def _lift(v) -> XSPoly:
    return v if isinstance(v, XSPoly) else XSPoly.const(v)


@dataclass(frozen=True)
class TruncSeries:
    """Series in z through z**order, coefficients cleared by ``profile``."""

    order: int
    coeffs: tuple
    profile: Profile = QFACT

    def __post_init__(self):
        c = tuple(_lift(v) for v in self.coeffs[: self.order + 1])
        c = c + (XSPoly(()),) * (self.order + 1 - len(c))
        object.__setattr__(self, "coeffs", c)

    @property
    def denom_profile(self) -> str:
        return self.profile.name

    @classmethod
    def from_fn(cls, order, fn, profile=QFACT):
        return cls(order, tuple(fn(n) for n in range(order + 1)), profile)

    @classmethod
    def one(cls, order, profile=QFACT):
        return cls(order, (XSPoly.const(1),), profile)

    def __getitem__(self, n):
        return self.coeffs[n]

    def _check(self, other):
        if not isinstance(other, TruncSeries):
            raise TypeError("expected a TruncSeries")
        if other.profile != self.profile:
            raise ValueError(f"profile mismatch: {self.profile} vs {other.profile}")
        return min(self.order, other.order)

    def __eq__(self, other):
        if not isinstance(other, TruncSeries):
            return NotImplemented
        n = self._check(other)
        return self.coeffs[: n + 1] == other.coeffs[: n + 1]

    def __hash__(self):
        return hash((self.order, self.coeffs, self.profile))

    def __add__(self, other):
        n = self._check(other)
        return TruncSeries(n, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)), self.profile)

    def __neg__(self):
        return TruncSeries(self.order, tuple(-c for c in self.coeffs), self.profile)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, TruncSeries):
            return self.map(lambda c: c * other)
        order = self._check(other)
        w = self.profile.weight
        a, b = self.coeffs, other.coeffs
        out = []
        for n in range(order + 1):
            acc = XSPoly(())
            for k in range(n + 1):
                if a[k] and b[n - k]:
                    acc = acc + a[k] * b[n - k] * w(n, k)
            out.append(acc)
        return TruncSeries(order, tuple(out), self.profile)

    def __rmul__(self, other):
        return self.map(lambda c: c * other)

    def reciprocal(self) -> "TruncSeries":
        c0 = self.coeffs[0]
        if not c0.is_constant() or not c0.coeff(0).is_constant() or not c0.coeff(0).coeff(0).is_unit():
            raise InexactDivision("constant term is not a unit scalar")
        inv0 = c0.coeff(0).coeff(0).inverse()
        w = self.profile.weight
        a = self.coeffs
        b = [XSPoly.const(inv0)]
        for n in range(1, self.order + 1):
            acc = XSPoly(())
            for k in range(1, n + 1):
                if a[k] and b[n - k]:
                    acc = acc + a[k] * b[n - k] * w(n, k)
            b.append(-acc * inv0)
        return TruncSeries(self.order, tuple(b), self.profile)

    def __truediv__(self, other):
        if isinstance(other, TruncSeries):
            return self * other.reciprocal()
        return self.map(lambda c: c.div_scalar(LaurentQ(other)))

    def map(self, fn) -> "TruncSeries":
        return TruncSeries(self.order, tuple(fn(c) for c in self.coeffs), self.profile)

    def times_z(self) -> "TruncSeries":
        """Multiply by z (cleared: c'_n = c_{n-1} d_n / d_{n-1})."""
        out = [XSPoly(())]
        for n in range(1, self.order + 1):
            out.append(self.coeffs[n - 1] * self.profile.ratio(n))
        return TruncSeries(self.order, tuple(out), self.profile)

    def times_poly_in_z(self, poly_coeffs) -> "TruncSeries":
        """Multiply by c_0 + c_1 z + ... with XSPoly (or scalar) c_j."""
        total = self.map(lambda c: c * XSPoly(()))
        term = self
        for j, c in enumerate(poly_coeffs):
            if j:
                term = term.times_z()
            if c:
                total = total + term * _lift(c)
        return total

    def scale_z(self, c) -> "TruncSeries":
        """Substitute z -> c z."""
        c = _lift(c)
        out, p = [], XSPoly.const(1)
        for v in self.coeffs:
            out.append(v * p)
            p = p * c
        return TruncSeries(self.order, tuple(out), self.profile)

    def subs_q_inverse(self, profile: Profile) -> "TruncSeries":
        """Apply q -> 1/q to coefficients and denominators, re-expressed over ``profile``."""
        out = []
        for n, c in enumerate(self.coeffs):
            inv = c.subs_q("1/q")
            out.append(inv * profile.denom(n) / self.profile.denom(n).subs_inverse())
        return TruncSeries(self.order, tuple(out), profile)

    def renormalize(self, profile: Profile) -> "TruncSeries":
        out = [
            c * profile.denom(n) / self.profile.denom(n) for n, c in enumerate(self.coeffs)
        ]
        return TruncSeries(self.order, tuple(out), profile)

    def truncate(self, order: int) -> "TruncSeries":
        return TruncSeries(min(order, self.order), self.coeffs, self.profile)

    def to_json(self) -> dict:
        return {
            "order": self.order,
            "denom_profile": self.profile.name,
            "coeffs": [c.to_json() for c in self.coeffs],
        }


# -- q-exponentials ----------------------------------------------------------

_KINDS = {
    # kind: (profile, coefficient of z**n given a**k factor builder)
    "e_q": QFACT,
    "E_q": QFACT,
    "e": QPOCH,
    "E": QPOCH,
    "e_q2": QFACT,
    "E_q2": QFACT,
    "e_sq": QPOCH,
    "E_sq": QPOCH,
}


def q_exp(kind: str, order: int, a=1) -> TruncSeries:
    """q-exponential series in z with argument multiplier ``a``.

    ``e_q``/``E_q``: e_q(a z), E_q(a z) over [n]!.
    ``e``/``E``: e(a z, q), E(a z, q) over (q;q)_n.
    ``e_q2``/``E_q2``: e_{q^2}(a z^2/[2]), E_{q^2}(a z^2/[2]) over [n]!.
    ``e_sq``/``E_sq``: e(a z^2, q^2), E(a z^2, q^2) over (q;q)_n.
    """
    if kind not in _KINDS:
        raise ValueError(f"unknown q-exponential kind {kind!r}")
    profile = _KINDS[kind]
    a = _lift(a)
    coeffs = [XSPoly(())] * (order + 1)
    if kind in ("e_q", "E_q", "e", "E"):
        p = XSPoly.const(1)
        for n in range(order + 1):
            coeffs[n] = p * LaurentQ.q(n * (n - 1) // 2) if kind.startswith("E") else p
            p = p * a
    else:
        p = XSPoly.const(1)
        for k in range(order // 2 + 1):
            base = q_odd_double_factorial(k) if kind.endswith("q2") else q_pochhammer_finite("q;q2", k)
            if kind.startswith("E"):
                base = base * LaurentQ.q(k * (k - 1))
            coeffs[2 * k] = p * base
            p = p * a
    return TruncSeries(order, tuple(coeffs), profile)


def family_series(family, order: int, profile: Profile = QFACT, s_scale=None, extra=None):
    """sum_n p_n z**n / d_n, optionally with s -> s_scale * s and p_n times extra(n)."""
    family = Family.parse(family)

    def coeff(n):
        p = poly(family, n)
        if s_scale is not None:
            p = p.scale_s(s_scale)
        if extra is not None:
            p = p * extra(n)
        return p

    return TruncSeries.from_fn(order, coeff, profile)


# -- identity checks -----------------------------------------------------------


def identity_219_check(order: int) -> bool:
    """e_q(z) E_q(-z) = 1."""
    return q_exp("e_q", order) * q_exp("E_q", order, -1) == TruncSeries.one(order)


def inverted_base_exp_check(order: int) -> bool:
    """e_{1/q}(z) = E_q(z)."""
    return q_exp("e_q", order).subs_q_inverse(QFACT) == q_exp("E_q", order)


def inverted_base_product_check(order: int) -> bool:
    """e(z, 1/q) = E(-q z, q)."""
    return q_exp("e", order).subs_q_inverse(QPOCH) == q_exp("E", order, -Q)


def functional_equation_checks(order: int) -> dict[str, bool]:
    """e_q(z)(1 - (1-q) z) = e_q(qz) and E_q(z) = (1 + (1-q) z) E_q(qz)."""
    e, big = q_exp("e_q", order), q_exp("E_q", order)
    return {
        "e_q": e.times_poly_in_z([1, Q - 1]) == e.scale_z(Q),
        "E_q": big == big.scale_z(Q).times_poly_in_z([1, 1 - Q]),
    }


def dq_exponential_checks(order: int) -> dict[str, bool]:
    """The four q-derivative rules for q-exponentials, z-coefficients as x-polynomials."""
    dq = lambda ser: ser.map(XSPoly.q_derivative)  # noqa: E731
    e = q_exp("e_q", order, X)
    big = q_exp("E_q", order, X)
    even_e = TruncSeries.from_fn(order, lambda k: XSPoly.x(2 * k), EVEN)
    even_big = TruncSeries.from_fn(order, lambda k: XSPoly.x(2 * k, LaurentQ.q(k * (k - 1))), EVEN)
    return {
        "e_q(ax)": dq(e) == e.times_z(),
        "E_q(ax)": dq(big) == big.scale_z(Q).times_z(),
        "e_q2(ax^2/[2])": dq(even_e) == even_e.times_z() * X,
        "E_q2(ax^2/[2])": dq(even_big) == even_big.scale_z(Q ** 2).times_z() * X,
    }


def ratio_expansion_sides(order: int, a) -> tuple[TruncSeries, TruncSeries]:
    """e_q(xz)/e_q(az) against sum (x-a)(x-qa)...(x-q^{n-1}a) z^n/[n]!."""
    a = S if a == "s" else _lift(a)
    lhs = q_exp("e_q", order, X) / q_exp("e_q", order, a)

    def coeff(n):
        p = XSPoly.const(1)
        for j in range(n):
            p = p * (X - a * LaurentQ.q(j))
        return p

    return lhs, TruncSeries.from_fn(order, coeff)


def ratio_expansion_check(order: int, a) -> bool:
    lhs, rhs = ratio_expansion_sides(order, a)
    return lhs == rhs


def _genfun_table():
    one_minus_q = 1 - Q
    return {
        # name: (family, lhs builder kwargs, rhs builder)
        "H": (Family.H, {}, lambda N: q_exp("e_q", N, X) * q_exp("E_q2", N, S * -Q)),
        "H/quotient": (Family.H, {}, lambda N: q_exp("e_q", N, X) / q_exp("e_q2", N, S * Q)),
        "H/(q;q)": (
            Family.H, {"profile": QPOCH, "s_scale": one_minus_q},
            lambda N: q_exp("e", N, X) * q_exp("E_sq", N, S * -Q),
        ),
        "K": (Family.K, {}, lambda N: q_exp("e_q2", N, -S) * q_exp("E_q", N, X)),
        "K/(q;q)": (
            Family.K, {"profile": QPOCH, "s_scale": one_minus_q},
            lambda N: q_exp("e_sq", N, -S) * q_exp("E", N, X),
        ),
        "HBAR": (Family.HBAR, {}, lambda N: q_exp("e_q", N, X) * q_exp("e_q2", N, -S)),
        "HBAR/(q;q)": (
            Family.HBAR, {"profile": QPOCH, "s_scale": one_minus_q},
            lambda N: q_exp("e", N, X) * q_exp("e_sq", N, -S),
        ),
        "HI": (Family.HI, {"profile": QPOCH}, lambda N: q_exp("e", N, X) * q_exp("E_sq", N, -1)),
        "HI/quotient": (
            Family.HI, {"profile": QPOCH}, lambda N: q_exp("e", N, X) / q_exp("e_sq", N, 1),
        ),
        "HII": (
            Family.HII, {"profile": QPOCH, "extra": lambda n: LaurentQ.q(n * (n - 1) // 2)},
            lambda N: q_exp("E", N, X) * q_exp("e_sq", N, -1),
        ),
    }


GENFUN_VARIANTS = tuple(_genfun_table())


def genfun_sides(variant: str, order: int) -> tuple[TruncSeries, TruncSeries]:
    table = _genfun_table()
    if variant not in table:
        raise ValueError(f"unknown generating function {variant!r}")
    family, kwargs, rhs = table[variant]
    return family_series(family, order, **kwargs), rhs(order)


def genfun_check(family, order: int) -> bool:
    """The primary generating function of ``family`` through z**order."""
    family = Family.parse(family)
    if family is Family.CLASSICAL:
        return classical_genfun_check(order)
    lhs, rhs = genfun_sides(family.value, order)
    return lhs == rhs


def classical_genfun_check(order: int) -> bool:
    """sum H_n(x, s) z^n/n! = e^{xz} e^{-s z^2/2} over plain factorials."""
    lhs = family_series(Family.CLASSICAL, order, FACT)
    exz = TruncSeries.from_fn(order, lambda n: XSPoly.x(n), FACT)
    gauss = TruncSeries.from_fn(
        order,
        lambda n: 0 if n % 2 else S ** (n // 2) * LaurentQ(
            Fraction((-1) ** (n // 2) * math.factorial(n), 2 ** (n // 2) * math.factorial(n // 2))
        ),
        FACT,
    )
    return lhs == exz * gauss


def shifted_genfun_sides(variant: str, order: int) -> tuple[TruncSeries, TruncSeries]:
    """Cross-multiplied forms of the shifted generating functions.

    In every variant the unshifted series on the right is taken at q z;
    dropping that dilation breaks the identity already at z**1.
    """
    if variant == "H":
        shifted = TruncSeries.from_fn(order, lambda n: poly(Family.H, n + 1))
        base = family_series(Family.H, order).scale_z(Q)
        return shifted.times_poly_in_z([1, X * (Q - 1)]), base.times_poly_in_z([X, S * -Q])
    if variant == "H/(q;q)":
        sc = 1 - Q
        shifted = TruncSeries.from_fn(order, lambda n: poly(Family.H, n + 1).scale_s(sc), QPOCH)
        base = family_series(Family.H, order, QPOCH, s_scale=sc).scale_z(Q)
        return shifted.times_poly_in_z([1, -X]), base.times_poly_in_z([X, S * -Q])
    if variant == "K/(q;q)":
        sc = 1 - Q
        shifted = TruncSeries.from_fn(order, lambda n: poly(Family.K, n + 1).scale_s(sc), QPOCH)
        base = family_series(Family.K, order, QPOCH, s_scale=sc).scale_z(Q)
        return shifted.times_poly_in_z([1, 0, S]), base.times_poly_in_z([X, -S])
    raise ValueError(f"unknown shifted generating function {variant!r}")


SHIFTED_VARIANTS = ("H", "H/(q;q)", "K/(q;q)")


def shifted_genfun_check(family, order: int) -> bool:
    variant = "K/(q;q)" if Family.parse(family) is Family.K else "H"
    lhs, rhs = shifted_genfun_sides(variant, order)
    return lhs == rhs


def inversion_via_genfun(n: int) -> bool:
    """x**n from e_q(xz) = e_{q^2}(q s z^2/[2]) sum H_j z^j/[j]!, termwise."""
    ser = q_exp("e_q2", n, S * Q)
    expansion = monomial_expansion(Family.H, n)
    total = XSPoly(())
    for c, m in expansion:
        k = (n - m) // 2
        term = ser[2 * k] * QFACT.weight(n, 2 * k)
        if term != XSPoly.const(c):
            return False
        total = total + term * poly(Family.H, m)
    return total == XSPoly.x(n)


# -- q-tangent and q-Euler numbers -----------------------------------------------


@dataclass(frozen=True)
class QNumberTable:
    tangent: tuple  # T_1(q), T_3(q), ...
    euler: tuple  # E_0(q), E_2(q), ...

    def at(self, q) -> tuple[list, list]:
        return [t(q) for t in self.tangent], [e(q) for e in self.euler]

    def to_json(self) -> dict:
        return {
            "tangent": [t.to_json() for t in self.tangent],
            "euler": [e.to_json() for e in self.euler],
        }


def _scalar(c: XSPoly) -> LaurentQ:
    if not c:
        return LaurentQ(0)
    if not c.is_constant() or not c.coeff(0).is_constant():
        raise ValueError("expected a scalar series coefficient")
    return c.coeff(0).coeff(0)


def q_tangent_euler(n_max: int) -> QNumberTable:
    order = 2 * n_max + 1
    plus = q_exp("e_q", order)
    minus = plus.scale_z(-1)
    tan = (plus - minus) / (plus + minus)
    sech = (plus + minus).reciprocal() * 2
    tangent = tuple(_scalar(tan[2 * n + 1]) * (-1) ** n for n in range(n_max + 1))
    euler = tuple(_scalar(sech[2 * n]) * (-1) ** n for n in range(n_max + 1))
    return QNumberTable(tangent, euler)


def classical_tangent_euler(n_max: int) -> tuple[list[int], list[int]]:
    """Tangent and Euler numbers from tanh and sech with plain rationals."""
    order = 2 * n_max + 1
    cosh = [Fraction(0 if n % 2 else 1, math.factorial(n)) for n in range(order + 1)]
    sinh = [Fraction(n % 2, math.factorial(n)) for n in range(order + 1)]
    inv = [Fraction(0)] * (order + 1)
    inv[0] = Fraction(1)
    for n in range(1, order + 1):
        inv[n] = -sum(cosh[k] * inv[n - k] for k in range(1, n + 1))
    tanh = [sum(sinh[k] * inv[n - k] for k in range(n + 1)) for n in range(order + 1)]
    tangent = [int(tanh[2 * n + 1] * math.factorial(2 * n + 1)) * (-1) ** n for n in range(n_max + 1)]
    euler = [int(inv[2 * n] * math.factorial(2 * n)) * (-1) ** n for n in range(n_max + 1)]
    return tangent, euler


def hermite_at_one(n: int) -> SPoly:
    """H_n(1, s, q) as a polynomial in s."""
    total = SPoly(())
    for c in poly(Family.H, n).coeffs:
        total = total + c
    return total


@dataclass(frozen=True)
class PhiReport:
    scale: LaurentQ  # common denominator D
    moments: tuple  # D * Phi(s^n)
    euler_ok: bool
    tangent_ok: bool
    classical_ok: bool

    @property
    def ok(self) -> bool:
        return self.euler_ok and self.tangent_ok and self.classical_ok


def phi_moments(n_max: int) -> tuple[LaurentQ, list[LaurentQ]]:
    """Solve Phi(H_{2n}(1, s, q)) = [n = 0] for D * Phi(s^n), n <= n_max.

    D = q^(N^2) [2N-1]!! clears every denominator, so the triangular solve
    stays in the Laurent ring; a nonzero remainder is an internal error.
    """
    scale = LaurentQ.q(n_max * n_max) * q_odd_double_factorial(n_max)
    ys: list[LaurentQ] = []
    for n in range(n_max + 1):
        row = hermite_at_one(2 * n)
        if row.degree != n:
            raise ArithmeticError(f"H_{2 * n}(1, s, q) has s-degree {row.degree}")
        acc = scale if n == 0 else LaurentQ(0)
        for j in range(n):
            acc = acc - row.coeff(j) * ys[j]
        ys.append(acc / row.coeff(n))
    return scale, ys


def phi_functional_check(n_max: int) -> PhiReport:
    if n_max > 8:
        raise ValueError("phi_functional_check supports n_max <= 8")
    scale, ys = phi_moments(n_max)
    table = q_tangent_euler(n_max)
    euler_ok = all(
        ys[n] == scale * table.euler[n] / (LaurentQ.q(n * n) * q_odd_double_factorial(n))
        for n in range(n_max + 1)
    )
    tangent_ok = True
    for n in range(n_max + 1):
        row = hermite_at_one(2 * n + 1)
        val = sum((row.coeff(j) * ys[j] for j in range(n + 1)), LaurentQ(0))
        tangent_ok &= val == scale * table.tangent[n] * (-1) ** n
    return PhiReport(scale, tuple(ys), euler_ok, tangent_ok, classical_phi_check(n_max))


def classical_phi_check(n_max: int) -> bool:
    """The q = 1 functional: F(s^n) = E_2n/(2n-1)!! and F(H_2n+1(1, s)) = (-1)^n T_2n+1."""
    tangent, euler = classical_tangent_euler(n_max)
    rows = [hermite_at_one(m).subs_q(1) for m in range(2 * n_max + 2)]
    consts = [[c.constant() for c in r.coeffs] for r in rows]
    f: list[Fraction] = []
    for n in range(n_max + 1):
        row = consts[2 * n]
        acc = Fraction(1 if n == 0 else 0) - sum(row[j] * f[j] for j in range(n))
        f.append(acc / row[n])
    ok = all(
        f[n] == Fraction(euler[n], math.prod(range(1, 2 * n, 2))) for n in range(n_max + 1)
    )
    for n in range(n_max + 1):
        row = consts[2 * n + 1]
        ok &= sum(row[j] * f[j] for j in range(n + 1)) == (-1) ** n * tangent[n]
    return ok
