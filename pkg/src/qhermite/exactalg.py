"""Exact arithmetic tower: Laurent polynomials in q, then s, then x.

``LaurentQ`` is stored densely as ``q**val * (c0 + c1 q + ...) / den`` with
integer ``c_i`` and a positive common denominator, kept in lowest terms.
``SPoly`` and ``XSPoly`` are dense coefficient tuples over the level below.
All values are immutable.
"""

from __future__ import annotations

import json
import math
from fractions import Fraction
from functools import lru_cache
from numbers import Rational

from . import _backend

NEG_INF = float("-inf")


class InexactDivision(ArithmeticError):
    """An exact division left a nonzero remainder."""


def _normalize(val: int, coeffs: list, den: int):
    lo = 0
    n = len(coeffs)
    while lo < n and not coeffs[lo]:
        lo += 1
    if lo == n:
        return 0, (), 1
    hi = n
    while not coeffs[hi - 1]:
        hi -= 1
    c = coeffs[lo:hi]
    if den != 1:
        g = math.gcd(math.gcd(*c), den)
        if g != 1:
            c = [v // g for v in c]
            den //= g
    return val + lo, tuple(c), den


class LaurentQ:
    """Laurent polynomial in ``q`` with rational coefficients."""

    __slots__ = ("_val", "_c", "_den")

    def __init__(self, value=0):
        if isinstance(value, LaurentQ):
            self._val, self._c, self._den = value._val, value._c, value._den
        elif isinstance(value, dict):
            self._set_terms(value)
        elif isinstance(value, int):
            self._val, self._c, self._den = (0, (value,), 1) if value else (0, (), 1)
        elif isinstance(value, Rational):
            f = Fraction(value)
            self._val, self._c, self._den = (
                (0, (f.numerator,), f.denominator) if f else (0, (), 1)
            )
        else:
            raise TypeError(f"cannot build LaurentQ from {type(value).__name__}")

    def _set_terms(self, terms):
        terms = {int(e): Fraction(c) for e, c in terms.items() if c}
        if not terms:
            self._val, self._c, self._den = 0, (), 1
            return
        lo, hi = min(terms), max(terms)
        den = math.lcm(*(c.denominator for c in terms.values()))
        coeffs = [0] * (hi - lo + 1)
        for e, c in terms.items():
            coeffs[e - lo] = c.numerator * (den // c.denominator)
        self._val, self._c, self._den = _normalize(lo, coeffs, den)

    @classmethod
    def _make(cls, val, coeffs, den=1):
        obj = cls.__new__(cls)
        obj._val, obj._c, obj._den = _normalize(val, coeffs, den)
        return obj

    @classmethod
    def monomial(cls, coeff=1, exp: int = 1) -> "LaurentQ":
        return cls({exp: coeff})

    @classmethod
    def q(cls, exp: int = 1) -> "LaurentQ":
        return cls._make(exp, [1])

    # -- inspection ---------------------------------------------------------

    def terms(self) -> dict[int, Fraction]:
        return {
            self._val + i: Fraction(c, self._den) for i, c in enumerate(self._c) if c
        }

    def coeffs_nonzero(self) -> tuple:
        return tuple(c for c in self._c if c)

    def is_zero(self) -> bool:
        return not self._c

    def __bool__(self):
        return bool(self._c)

    def is_constant(self) -> bool:
        return not self._c or (len(self._c) == 1 and self._val == 0)

    def is_unit(self) -> bool:
        """Invertible in the ring: a single nonzero term."""
        return len(self._c) == 1

    def constant(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} is not a constant")
        return Fraction(self._c[0], self._den) if self._c else Fraction(0)

    @property
    def degree(self):
        return self._val + len(self._c) - 1 if self._c else NEG_INF

    @property
    def low_degree(self):
        return self._val if self._c else NEG_INF

    # -- ring operations ----------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, LaurentQ):
            return (self._val, self._c, self._den) == (other._val, other._c, other._den)
        if isinstance(other, Rational):
            return self == LaurentQ(other)
        return NotImplemented

    def __hash__(self):
        if self.is_constant():
            return hash(self.constant())
        return hash((self._val, self._c, self._den))

    def __neg__(self):
        obj = LaurentQ.__new__(LaurentQ)
        obj._val, obj._c, obj._den = self._val, tuple(-c for c in self._c), self._den
        return obj

    def __pos__(self):
        return self

    def __add__(self, other):
        if not isinstance(other, LaurentQ):
            if not isinstance(other, Rational):
                return NotImplemented
            other = LaurentQ(other)
        if not other._c:
            return self
        if not self._c:
            return other
        da, db = self._den, other._den
        if da == db:
            den, fa, fb = da, 1, 1
        else:
            den = math.lcm(da, db)
            fa, fb = den // da, den // db
        lo = min(self._val, other._val)
        hi = max(self._val + len(self._c), other._val + len(other._c))
        out = [0] * (hi - lo)
        off = self._val - lo
        for i, c in enumerate(self._c):
            out[off + i] = c * fa
        off = other._val - lo
        for i, c in enumerate(other._c):
            out[off + i] += c * fb
        return LaurentQ._make(lo, out, den)

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, (LaurentQ, Rational)):
            return NotImplemented
        return self + (-LaurentQ(other))

    def __rsub__(self, other):
        return LaurentQ(other) - self

    def __mul__(self, other):
        if not isinstance(other, LaurentQ):
            if not isinstance(other, Rational):
                return NotImplemented
            other = LaurentQ(other)
        if not self._c or not other._c:
            return ZERO
        if len(other._c) == 1 and other._c[0] == 1 and other._den == 1:
            obj = LaurentQ.__new__(LaurentQ)
            obj._val, obj._c, obj._den = self._val + other._val, self._c, self._den
            return obj
        prod = _backend.mul(self._c, other._c)
        return LaurentQ._make(self._val + other._val, prod, self._den * other._den)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result, base = ONE, self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def inverse(self) -> "LaurentQ":
        if not self.is_unit():
            raise InexactDivision(f"{self} is not a unit")
        f = Fraction(self._den, self._c[0])
        return LaurentQ._make(-self._val, [f.numerator], f.denominator)

    def __truediv__(self, other):
        """Exact division; raises ``InexactDivision`` on a nonzero remainder."""
        if isinstance(other, Rational):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return self * (1 / Fraction(other))
        if not isinstance(other, LaurentQ):
            return NotImplemented
        if not other._c:
            raise ZeroDivisionError("division by zero LaurentQ")
        if not self._c:
            return ZERO
        if other.is_unit():
            return self * other.inverse()
        quo = _backend.divexact(self._c, other._c)
        if quo is not None:
            return LaurentQ._make(
                self._val - other._val,
                [c * other._den for c in quo],
                self._den,
            )
        return self._rational_div(other)

    def _rational_div(self, other):
        num = [Fraction(c) for c in self._c]
        den = [Fraction(c) for c in other._c]
        nb = len(den)
        if len(num) < nb:
            raise InexactDivision(f"({self}) / ({other}) is not a Laurent polynomial")
        quo = [Fraction(0)] * (len(num) - nb + 1)
        for i in range(len(num) - nb, -1, -1):
            c = num[i + nb - 1] / den[-1]
            quo[i] = c
            if c:
                for j in range(nb):
                    num[i + j] -= c * den[j]
        if any(num):
            raise InexactDivision(f"({self}) / ({other}) is not a Laurent polynomial")
        scale = Fraction(other._den, self._den)
        return LaurentQ({self._val - other._val + i: c * scale for i, c in enumerate(quo)})

    # -- substitution and evaluation ---------------------------------------

    def subs_inverse(self) -> "LaurentQ":
        """Substitute q -> 1/q."""
        if not self._c:
            return self
        top = self._val + len(self._c) - 1
        return LaurentQ._make(-top, list(reversed(self._c)), self._den)

    def subs_power(self, k: int) -> "LaurentQ":
        """Substitute q -> q**k for a nonzero integer k."""
        if k == 0:
            raise ValueError("q -> q**0 is not a ring endomorphism here")
        if k < 0:
            return self.subs_inverse().subs_power(-k)
        if not self._c or k == 1:
            return self
        out = [0] * ((len(self._c) - 1) * k + 1)
        for i, c in enumerate(self._c):
            out[i * k] = c
        return LaurentQ._make(self._val * k, out, self._den)

    def __call__(self, q):
        """Evaluate at q: exact for rationals, float for floats."""
        if isinstance(q, float):
            acc = 0.0
            for c in reversed(self._c):
                acc = acc * q + c
            return acc * q ** self._val / self._den if self._c else 0.0
        q = Fraction(q)
        if q == 0 and self._val < 0 and self._c:
            raise ZeroDivisionError("negative power of q at q = 0")
        acc = Fraction(0)
        for c in reversed(self._c):
            acc = acc * q + c
        return acc * q ** self._val / self._den if self._c else Fraction(0)

    # -- rendering ----------------------------------------------------------

    def _render(self, times, power, q="q"):
        if not self._c:
            return "0"
        parts = []
        for e, c in sorted(self.terms().items()):
            mag = abs(c)
            if e == 0:
                body = str(mag)
            elif mag == 1:
                body = q if e == 1 else power(q, e)
            else:
                body = str(mag) + times + (q if e == 1 else power(q, e))
            parts.append(("-" if c < 0 else "+", body))
        head = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        return head + "".join(f" {sign} {body}" for sign, body in parts[1:])

    def __str__(self):
        return self._render("*", lambda v, e: f"{v}^{e}")

    def __repr__(self):
        return f"LaurentQ('{self}')"

    def latex(self) -> str:
        return self._render(" ", lambda v, e: f"{v}^{{{e}}}")

    def to_json(self) -> dict:
        return {
            str(e): f"{c.numerator}/{c.denominator}" for e, c in sorted(self.terms().items())
        }

    @classmethod
    def from_json(cls, data: dict) -> "LaurentQ":
        return cls({int(e): Fraction(v) for e, v in data.items()})


ZERO = LaurentQ(0)
ONE = LaurentQ(1)
Q = LaurentQ.q()


def _as_laurent(value) -> LaurentQ:
    if isinstance(value, LaurentQ):
        return value
    if isinstance(value, Rational):
        return LaurentQ(value)
    raise TypeError(f"expected a LaurentQ scalar, got {type(value).__name__}")


class _DensePoly:
    """Dense univariate polynomial over the next ring down the tower."""

    __slots__ = ("_c",)
    _ring = None
    _var = "?"

    def __init__(self, coeffs=()):
        if isinstance(coeffs, type(self)):
            self._c = coeffs._c
            return
        if not isinstance(coeffs, (list, tuple)):
            coeffs = (coeffs,)
        c = [self._lift_coeff(v) for v in coeffs]
        while c and not c[-1]:
            c.pop()
        self._c = tuple(c)

    @classmethod
    def _lift_coeff(cls, v):
        raise NotImplementedError

    @classmethod
    def _from_tuple(cls, c):
        c = list(c)
        while c and not c[-1]:
            c.pop()
        obj = cls.__new__(cls)
        obj._c = tuple(c)
        return obj

    @classmethod
    def _coerce(cls, other):
        if isinstance(other, cls):
            return other
        try:
            return cls._from_tuple((cls._lift_coeff(other),))
        except TypeError:
            return None

    @property
    def coeffs(self) -> tuple:
        return self._c

    @property
    def degree(self):
        return len(self._c) - 1 if self._c else NEG_INF

    def coeff(self, k: int):
        return self._c[k] if 0 <= k < len(self._c) else self._ring._zero()

    def __len__(self):
        return len(self._c)

    def __bool__(self):
        return bool(self._c)

    def is_zero(self):
        return not self._c

    def is_constant(self):
        return len(self._c) <= 1

    def __eq__(self, other):
        other_c = self._coerce(other)
        if other_c is None:
            return NotImplemented
        return self._c == other_c._c

    def __hash__(self):
        if len(self._c) <= 1:
            return hash(self._c[0]) if self._c else 0
        return hash(self._c)

    def __neg__(self):
        return self._from_tuple(tuple(-c for c in self._c))

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self._c, other._c
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, v in enumerate(b):
            out[i] = out[i] + v
        return self._from_tuple(out)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def scale(self, c):
        """Multiply every coefficient by a scalar from the coefficient ring (or below)."""
        if not c:
            return self._from_tuple(())
        return self._from_tuple(tuple(v * c for v in self._c))

    def __mul__(self, other):
        if not isinstance(other, type(self)):
            try:
                c = self._lift_coeff(other)
            except TypeError:
                return NotImplemented
            return self.scale(c)
        a, b = self._c, other._c
        if not a or not b:
            return self._from_tuple(())
        if len(b) == 1:
            return self.scale(b[0])
        if len(a) == 1:
            return other.scale(a[0])
        out = [None] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if not ai:
                continue
            for j, bj in enumerate(b):
                if not bj:
                    continue
                t = ai * bj
                k = i + j
                out[k] = t if out[k] is None else out[k] + t
        zero = self._ring._zero()
        return self._from_tuple(tuple(zero if v is None else v for v in out))

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = self._from_tuple((self._ring._one(),))
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def div_scalar(self, c):
        """Exact coefficientwise division by a scalar."""
        return self._from_tuple(tuple(v / c for v in self._c))

    __truediv__ = div_scalar

    def map_coeffs(self, fn):
        return self._from_tuple(tuple(fn(v) for v in self._c))

    def shift(self, k: int):
        """Multiply by the variable to the power k (k may be negative if exact)."""
        if k >= 0:
            return self._from_tuple((self._ring._zero(),) * k + self._c)
        if any(self._c[:-k]):
            raise InexactDivision("negative shift drops nonzero terms")
        return self._from_tuple(self._c[-k:])

    def truncate(self, n: int):
        """Drop every term of degree > n."""
        return self._from_tuple(self._c[: n + 1])

    def subs_var(self, value):
        """Substitute the variable by ``value`` (Horner; value from the same ring)."""
        acc = self._from_tuple(())
        for c in reversed(self._c):
            acc = acc * value + self._from_tuple((c,))
        return acc

    def scale_var(self, c):
        """Substitute var -> c * var for a scalar c."""
        out, p = [], self._ring._one()
        for v in self._c:
            out.append(v * p)
            p = p * c
        return self._from_tuple(out)


class SPoly(_DensePoly):
    """Polynomial in ``s`` with ``LaurentQ`` coefficients."""

    __slots__ = ()
    _var = "s"

    @classmethod
    def _lift_coeff(cls, v):
        return _as_laurent(v)

    @staticmethod
    def _zero():
        return SPoly(())

    @staticmethod
    def _one():
        return SPoly((ONE,))

    @classmethod
    def s(cls, power: int = 1, coeff=1) -> "SPoly":
        return cls._from_tuple((ZERO,) * power + (_as_laurent(coeff),))

    def subs_q(self, value) -> "SPoly":
        return self.map_coeffs(lambda c: substitute_q(c, value))

    def __call__(self, s, q):
        if isinstance(s, float) or isinstance(q, float):
            s, q = float(s), float(q)
            acc = 0.0
        else:
            acc = Fraction(0)
        for c in reversed(self._c):
            acc = acc * s + c(q)
        return acc

    def __str__(self):
        return _render_poly(self, "s", str, "*", lambda v, e: f"{v}^{e}")

    def __repr__(self):
        return f"SPoly('{self}')"

    def latex(self):
        return _render_poly(self, "s", lambda c: c.latex(), " ", lambda v, e: f"{v}^{{{e}}}")


class _LaurentRing:
    @staticmethod
    def _zero():
        return ZERO

    @staticmethod
    def _one():
        return ONE


SPoly._ring = _LaurentRing


class XSPoly(_DensePoly):
    """Polynomial in ``x`` with ``SPoly`` coefficients."""

    __slots__ = ()
    _var = "x"

    @classmethod
    def _lift_coeff(cls, v):
        if isinstance(v, SPoly):
            return v
        if isinstance(v, (LaurentQ, Rational)):
            return SPoly._from_tuple((_as_laurent(v),))
        raise TypeError(f"cannot lift {type(v).__name__} into SPoly")

    @classmethod
    def x(cls, power: int = 1, coeff=1) -> "XSPoly":
        return cls._from_tuple((SPoly(()),) * power + (cls._lift_coeff(coeff),))

    @classmethod
    def s(cls, power: int = 1) -> "XSPoly":
        return cls._from_tuple((SPoly.s(power),))

    @classmethod
    def const(cls, value) -> "XSPoly":
        return cls._from_tuple((cls._lift_coeff(value),))

    # -- calculus ---------------------------------------------------------

    def q_derivative(self) -> "XSPoly":
        """D_q: x**k -> [k] x**(k-1)."""
        return self._from_tuple(
            tuple(c.scale(q_int(k)) for k, c in enumerate(self._c) if k)
        )

    def dilate(self, c) -> "XSPoly":
        """x -> c*x for a LaurentQ scalar c (c = q gives the dilation operator)."""
        return self.scale_var(SPoly._lift_coeff(c))

    def subs_s(self, value) -> "XSPoly":
        """Substitute s -> value, value an SPoly (or scalar)."""
        value = value if isinstance(value, SPoly) else SPoly._from_tuple((_as_laurent(value),))
        return self.map_coeffs(lambda c: c.subs_var(value))

    def scale_s(self, c) -> "XSPoly":
        """s -> c*s for a LaurentQ scalar c."""
        c = _as_laurent(c)
        return self.map_coeffs(lambda v: v.scale_var(c))

    def subs_q(self, value) -> "XSPoly":
        return self.map_coeffs(lambda c: c.subs_q(value))

    def s_degree(self):
        return max((c.degree for c in self._c), default=NEG_INF)

    def leading(self) -> SPoly:
        return self._c[-1] if self._c else SPoly(())

    def parity_ok(self, n: int) -> bool:
        """True iff p(-x) = (-1)**n p(x)."""
        return all(not c for k, c in enumerate(self._c) if (n - k) % 2)

    def __call__(self, x, s, q):
        """Numeric evaluation (floats if any argument is a float)."""
        use_float = any(isinstance(v, float) for v in (x, s, q))
        acc = 0.0 if use_float else Fraction(0)
        if use_float:
            x, s, q = float(x), float(s), float(q)
        for c in reversed(self._c):
            acc = acc * x + c(s, q)
        return acc

    def coefficients(self, q, s=0):
        """Float/rational coefficient list at fixed (s, q), lowest degree first."""
        return [c(s, q) for c in self._c]

    def __str__(self):
        return _render_poly(self, "x", _paren_str, "*", lambda v, e: f"{v}^{e}", descending=True)

    def __repr__(self):
        return f"XSPoly('{self}')"

    def latex(self) -> str:
        return _render_poly(
            self, "x", lambda c: c.latex(), " ", lambda v, e: f"{v}^{{{e}}}",
            descending=True,
        )

    def to_json(self) -> list:
        return [[lc.to_json() for lc in sc.coeffs] for sc in self._c]

    @classmethod
    def from_json(cls, data: list) -> "XSPoly":
        return cls._from_tuple(
            tuple(SPoly._from_tuple(tuple(LaurentQ.from_json(t) for t in row)) for row in data)
        )


XSPoly._ring = SPoly


def _term_count(c):
    if isinstance(c, LaurentQ):
        return len(c.coeffs_nonzero())
    return sum(_term_count(v) for v in c.coeffs if v)


def _paren_str(c):
    return str(c)


def _render_poly(p, var, fmt, times, power, descending=False):
    items = [(k, c) for k, c in enumerate(p.coeffs) if c]
    if not items:
        return "0"
    if descending:
        items.reverse()
    parts = []
    for k, c in items:
        sign, text = "+", fmt(c)
        if text.startswith("-"):
            sign, text = "-", fmt(-c)
        mono = "" if k == 0 else (var if k == 1 else power(var, k))
        if _term_count(c) > 1 and (mono or sign == "-"):
            text = f"({text})"
        if not mono:
            body = text
        elif text == "1":
            body = mono
        else:
            body = f"{text}{times}{mono}"
        parts.append((sign, body))
    head = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    return head + "".join(f" {sign} {body}" for sign, body in parts[1:])


# -- q-combinatorial scalars ------------------------------------------------


@lru_cache(maxsize=None)
def q_int(n: int) -> LaurentQ:
    """[n] = 1 + q + ... + q**(n-1)."""
    if n < 0:
        raise ValueError("q_int needs n >= 0")
    return LaurentQ._make(0, [1] * n)


@lru_cache(maxsize=None)
def q_factorial(n: int) -> LaurentQ:
    if n < 0:
        raise ValueError("q_factorial needs n >= 0")
    return ONE if n == 0 else q_factorial(n - 1) * q_int(n)


@lru_cache(maxsize=None)
def q_binomial(n: int, k: int) -> LaurentQ:
    """Gaussian binomial coefficient, computed as an exact quotient of q-factorials."""
    if not 0 <= k <= n:
        if k < 0 or k > n >= 0:
            return ZERO
        raise ValueError(f"q_binomial({n}, {k}) undefined")
    return q_factorial(n) / (q_factorial(k) * q_factorial(n - k))


@lru_cache(maxsize=None)
def q_odd_double_factorial(k: int) -> LaurentQ:
    """[1][3]...[2k-1]."""
    if k < 0:
        raise ValueError("q_odd_double_factorial needs k >= 0")
    return ONE if k == 0 else q_odd_double_factorial(k - 1) * q_int(2 * k - 1)


def q_pochhammer(a, n: int, step: int = 1) -> LaurentQ:
    """prod_{j<n} (1 - a q**(j*step)) for a LaurentQ (or rational) ``a``."""
    if n < 0:
        raise ValueError("q_pochhammer needs n >= 0")
    a = _as_laurent(a)
    return _qpoch_cached(a, n, step)


@lru_cache(maxsize=4096)
def _qpoch_cached(a, n, step):
    if n == 0:
        return ONE
    return _qpoch_cached(a, n - 1, step) * (ONE - a * LaurentQ.q((n - 1) * step))


def q_pochhammer_finite(kind: str, n: int, a=None) -> LaurentQ:
    """Finite q-Pochhammer symbols by kind.

    ``"q;q"`` gives (q;q)_n, ``"q;q2"`` gives (q;q^2)_n and ``"a;q"`` gives
    (a;q)_n for the rational (or LaurentQ) ``a``.
    """
    if kind == "q;q":
        return q_pochhammer(Q, n, 1)
    if kind == "q;q2":
        return q_pochhammer(Q, n, 2)
    if kind == "q2;q2":
        return q_pochhammer(Q ** 2, n, 2)
    if kind == "a;q":
        if a is None:
            raise ValueError("kind 'a;q' needs a")
        return q_pochhammer(a, n, 1)
    raise ValueError(f"unknown Pochhammer kind {kind!r}")


INV_Q = "1/q"


def substitute_q(p, value):
    """Substitute q by a nonzero rational or by the symbol ``"1/q"``.

    Rational substitution returns an object of the same kind whose
    coefficients are constants.
    """
    if isinstance(p, (SPoly, XSPoly)):
        return p.subs_q(value)
    p = _as_laurent(p)
    if value == INV_Q:
        return p.subs_inverse()
    if isinstance(value, str):
        raise ValueError(f"unknown symbolic substitution {value!r}")
    if value == 0:
        raise ValueError("cannot substitute q = 0")
    return LaurentQ(p(Fraction(value)))


# -- serialization ----------------------------------------------------------


def dumps(obj) -> str:
    """JSON text for a LaurentQ or XSPoly."""
    if isinstance(obj, (LaurentQ, XSPoly)):
        return json.dumps(obj.to_json(), sort_keys=True)
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def loads_laurent(text: str) -> LaurentQ:
    return LaurentQ.from_json(json.loads(text))


def loads_xspoly(text: str) -> XSPoly:
    return XSPoly.from_json(json.loads(text))


X = XSPoly.x()
S = XSPoly.s()
