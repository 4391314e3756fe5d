"""The q-Hermite polynomial families, each built along independent routes."""

from __future__ import annotations

import enum
import itertools
import math
from dataclasses import dataclass
from functools import lru_cache

from .exactalg import (
    ONE,
    Q,
    S,
    X,
    LaurentQ,
    SPoly,
    XSPoly,
    q_binomial,
    q_factorial,
    q_int,
    q_odd_double_factorial,
    q_pochhammer_finite,
)


class Family(str, enum.Enum):
    H = "H"
    K = "K"
    HI = "HI"
    HII = "HII"
    HBAR = "HBAR"
    CLASSICAL = "CLASSICAL"

    @classmethod
    def parse(cls, value) -> "Family":
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).upper())
        except ValueError:
            raise ValueError(
                f"unknown family {value!r}; expected one of {[f.value for f in cls]}"
            ) from None


class RouteMismatch(AssertionError):
    """Two constructions of the same polynomial disagree."""


def _qpow(e: int) -> LaurentQ:
    return LaurentQ.q(e)


def _binom2(n: int) -> int:
    return n * (n - 1) // 2


def _hi_s() -> LaurentQ:
    """s = (1 - q)/q, the specialization giving the discrete family I."""
    return _qpow(-1) - 1


def leading_coefficient(family, n: int) -> LaurentQ:
    return _qpow(_binom2(n)) if Family.parse(family) is Family.K else ONE


@dataclass(frozen=True)
class PolyTable:
    family: Family
    max_n: int
    polys: tuple

    def __getitem__(self, n):
        return self.polys[n]

    def __len__(self):
        return len(self.polys)

    def __iter__(self):
        return iter(self.polys)

    def invariant_violations(self) -> list[str]:
        """Degree, leading coefficient and parity problems (empty when sound)."""
        bad = []
        for n, p in enumerate(self.polys):
            if p.degree != n:
                bad.append(f"{self.family.value}_{n}: degree {p.degree}")
                continue
            if p.leading() != SPoly((leading_coefficient(self.family, n),)):
                bad.append(f"{self.family.value}_{n}: leading coefficient {p.leading()}")
            if not p.parity_ok(n):
                bad.append(f"{self.family.value}_{n}: parity")
        return bad

    def to_json(self) -> list[dict]:
        return [
            {"family": self.family.value, "n": n, "coeffs": p.to_json()}
            for n, p in enumerate(self.polys)
        ]

    @classmethod
    def from_json(cls, rows: list[dict]) -> "PolyTable":
        rows = sorted(rows, key=lambda r: r["n"])
        family = Family.parse(rows[0]["family"])
        polys = tuple(XSPoly.from_json(r["coeffs"]) for r in rows)
        return cls(family, len(polys) - 1, polys)


# -- recurrences -------------------------------------------------------------


def _three_term(max_n, step):
    """Generic p_{n+1} = step(n, p_n, p_{n-1}) starting from p_{-1} = 0, p_0 = 1."""
    polys = [XSPoly.const(1)]
    prev = XSPoly(())
    for n in range(max_n):
        nxt = step(n, polys[n], prev)
        prev = polys[n]
        polys.append(nxt)
    return polys


def _rec_H(max_n):
    return _three_term(max_n, lambda n, p, pm: X * p - pm * (S * (_qpow(n) * q_int(n))))


def _rec_K(max_n):
    return _three_term(max_n, lambda n, p, pm: X * p * _qpow(n) - pm * (S * q_int(n)))


def _rec_HI(max_n):
    return _three_term(
        max_n, lambda n, p, pm: X * p - pm * (_qpow(n - 1) * (1 - _qpow(n)))
    )


def _rec_HII(max_n):
    return _three_term(
        max_n, lambda n, p, pm: X * p - pm * (_qpow(1 - 2 * n) * (1 - _qpow(n)))
    )


def _rec_classical(max_n):
    return _three_term(max_n, lambda n, p, pm: X * p - pm * (S * n))


def hbar_three_term(max_n: int) -> list[XSPoly]:
    """h-bar via the four-term form that carries an extra x-term."""
    polys = [XSPoly.const(1)]
    if max_n >= 1:
        polys.append(X)
    for n in range(1, max_n):
        nxt = X * polys[n] - polys[n - 1] * (S * q_int(n))
        if n >= 2:
            nxt = nxt + X * polys[n - 2] * (S * (q_int(n) * (1 - _qpow(n - 1))))
        polys.append(nxt)
    return polys


def hbar_dilated(max_n: int) -> list[XSPoly]:
    """h-bar via the recurrence with the dilated argument qx."""
    return _three_term(
        max_n, lambda n, p, pm: X * p - pm.dilate(Q) * (S * q_int(n))
    )


def _rec_HBAR(max_n):
    a, b = hbar_three_term(max_n), hbar_dilated(max_n)
    for n, (u, v) in enumerate(zip(a, b)):
        if u != v:
            raise RouteMismatch(f"h-bar recurrences disagree at n={n}: {u} vs {v}")
    return a


_RECURRENCES = {
    Family.H: _rec_H,
    Family.K: _rec_K,
    Family.HI: _rec_HI,
    Family.HII: _rec_HII,
    Family.HBAR: _rec_HBAR,
    Family.CLASSICAL: _rec_classical,
}


@lru_cache(maxsize=64)
def _recurrence_table(family: Family, max_n: int) -> PolyTable:
    return PolyTable(family, max_n, tuple(_RECURRENCES[family](max_n)))


def build_by_recurrence(family, max_n: int) -> PolyTable:
    if max_n < 0:
        raise ValueError("max_n must be >= 0")
    return _recurrence_table(Family.parse(family), max_n)


def poly(family, n: int) -> XSPoly:
    """The n-th member of a family (recurrence route, cached)."""
    family = Family.parse(family)
    size = max(16, 1 << (n.bit_length()))
    return _recurrence_table(family, size)[n]


# -- explicit coefficient formulas ----------------------------------------


def _formula_term(family: Family, n: int, k: int):
    """Coefficient of x**(n-2k) as an SPoly."""
    sign = -1 if k % 2 else 1
    m = n - 2 * k
    if family is Family.H:
        c = q_binomial(n, 2 * k) * q_odd_double_factorial(k) * _qpow(k * k) * sign
        return SPoly.s(k, c)
    if family is Family.K:
        c = q_binomial(n, 2 * k) * q_odd_double_factorial(k) * _qpow(_binom2(m)) * sign
        return SPoly.s(k, c)
    if family is Family.HI:
        c = q_binomial(n, 2 * k) * q_pochhammer_finite("q;q2", k) * _qpow(k * k - k) * sign
        return SPoly((c,))
    if family is Family.HII:
        c = (
            q_binomial(n, 2 * k)
            * q_pochhammer_finite("q;q2", k)
            * _qpow(_binom2(m) - _binom2(n))
            * sign
        )
        return SPoly((c,))
    if family is Family.HBAR:
        return SPoly.s(k, q_binomial(n, 2 * k) * q_odd_double_factorial(k) * sign)
    if family is Family.CLASSICAL:
        c = math.comb(n, 2 * k) * _odd_double_factorial(k) * sign
        return SPoly.s(k, LaurentQ(c))
    raise ValueError(family)


def _odd_double_factorial(k: int) -> int:
    return math.prod(range(1, 2 * k, 2))


def formula_poly(family, n: int) -> XSPoly:
    family = Family.parse(family)
    coeffs = [SPoly(())] * (n + 1)
    for k in range(n // 2 + 1):
        coeffs[n - 2 * k] = _formula_term(family, n, k)
    return XSPoly(coeffs)


def build_by_formula(family, max_n: int) -> PolyTable:
    if max_n < 0:
        raise ValueError("max_n must be >= 0")
    family = Family.parse(family)
    return PolyTable(family, max_n, tuple(formula_poly(family, n) for n in range(max_n + 1)))


# -- determinant oracle -------------------------------------------------------


def leibniz_det(matrix) -> XSPoly:
    """Determinant by the permutation sum, pruning zero entries.

    Only permutations whose entries are all nonzero are visited, so sparse
    (e.g. tridiagonal) matrices stay cheap.
    """
    n = len(matrix)
    if n == 0:
        return XSPoly.const(1)
    total = XSPoly(())
    nonzero = [[j for j in range(n) if matrix[i][j]] for i in range(n)]

    def walk(row, used, perm, acc):
        nonlocal total
        if row == n:
            inversions = sum(
                1 for a, b in itertools.combinations(range(n), 2) if perm[a] > perm[b]
            )
            total = total - acc if inversions % 2 else total + acc
            return
        for j in nonzero[row]:
            if j not in used:
                used.add(j)
                perm.append(j)
                walk(row + 1, used, perm, acc * matrix[row][j])
                perm.pop()
                used.discard(j)

    walk(0, set(), [], XSPoly.const(1))
    return total


def hermite_matrix(n: int) -> list[list[XSPoly]]:
    """Tridiagonal matrix with x on the diagonal, [k] q^k s above and 1 below."""
    zero = XSPoly(())
    m = [[zero] * n for _ in range(n)]
    for i in range(n):
        m[i][i] = X
        if i + 1 < n:
            k = i + 1
            m[i][i + 1] = S * (q_int(k) * _qpow(k))
            m[i + 1][i] = XSPoly.const(1)
    return m


def determinant_oracle(n: int, family="H") -> XSPoly:
    if Family.parse(family) is not Family.H:
        raise ValueError("the determinant representation is only available for H")
    if not 0 <= n <= 12:
        raise ValueError("determinant oracle limited to 0 <= n <= 12")
    return leibniz_det(hermite_matrix(n))


def q_derivative(p: XSPoly) -> XSPoly:
    return p.q_derivative()


# -- inversions ---------------------------------------------------------------


def monomial_expansion(family, n: int) -> list[tuple[SPoly, int]]:
    """Coefficients c_k with x**n = sum_k c_k * p_{n-2k}, as (c_k, n-2k) pairs."""
    family = Family.parse(family)
    if family is Family.HBAR:
        raise ValueError("no monomial expansion is available for HBAR")
    out = []
    for k in range(n // 2 + 1):
        m = n - 2 * k
        if family is Family.H:
            c = SPoly.s(k, _qpow(k) * q_binomial(n, 2 * k) * q_odd_double_factorial(k))
        elif family is Family.HI:
            c = SPoly((q_binomial(n, 2 * k) * q_pochhammer_finite("q;q2", k),))
        elif family is Family.HII:
            c = SPoly(
                (_qpow(3 * k * k - 2 * k * n) * q_binomial(n, 2 * k)
                 * q_pochhammer_finite("q;q2", k),)
            )
        elif family is Family.K:
            # q -> 1/q image of the H expansion, rescaled by the K leading powers
            e = -k - 2 * k * m - k * (k - 1) - _binom2(m)
            c = SPoly.s(k, _qpow(e) * q_binomial(n, 2 * k) * q_odd_double_factorial(k))
        else:
            c = SPoly.s(k, LaurentQ(math.comb(n, 2 * k) * _odd_double_factorial(k)))
        out.append((c, m))
    return out


def reconstruct(family, expansion) -> XSPoly:
    total = XSPoly(())
    for c, m in expansion:
        total = total + poly(family, m) * c
    return total


def _falling_q_product(j: int) -> XSPoly:
    """(x - 1)(x - q)...(x - q**(j-1))."""
    p = XSPoly.const(1)
    for i in range(j):
        p = p * (X - _qpow(i))
    return p


def newton_like_basis(n: int) -> tuple[XSPoly, XSPoly]:
    """Right-hand sums of the two Newton-type expansions.

    Returns ``(h_sum, hbar_sum)``: the first should equal the family I
    polynomial h_n, the second h-bar_n evaluated at s = q - 1.
    """
    if n > 20:
        raise ValueError("newton_like_basis supports n <= 20")
    h_sum = XSPoly(())
    for j in range(n + 1):
        h_sum = h_sum + _falling_q_product(j) * (_qpow(_binom2(n - j)) * q_binomial(n, j))
    hbar_sum = XSPoly(())
    for k in range(n + 1):
        inner = XSPoly(())
        for j in range(k + 1):
            sign = -1 if (k - j) % 2 else 1
            inner = inner + XSPoly.x(j, q_binomial(k, j) * sign)
        hbar_sum = hbar_sum + inner * q_binomial(n, k)
    return h_sum, hbar_sum


# -- product identities -------------------------------------------------------


def nielsen_sides(n: int, m: int) -> tuple[XSPoly, XSPoly, XSPoly]:
    """(H_{n+m}, s-rescaled product sum, x-rescaled product sum)."""
    lhs = poly(Family.H, n + m)
    rhs_s = XSPoly(())
    rhs_x = XSPoly(())
    inv_qn = _qpow(-n)
    for k in range(min(n, m) + 1):
        c = q_binomial(n, k) * q_binomial(m, k) * q_factorial(k) * (-1) ** k
        left = poly(Family.H, n - k) * SPoly.s(k, c)
        right_s = poly(Family.H, m - k).scale_s(_qpow(2 * n))
        right_x = poly(Family.H, m - k).dilate(inv_qn)
        rhs_s = rhs_s + left * right_s * _qpow(k * n)
        rhs_x = rhs_x + left * right_x
    return lhs, rhs_s, rhs_x * _qpow(m * n)


def nielsen_identity_check(n: int, m: int) -> bool:
    if n < 0 or m < 0:
        raise ValueError("n, m must be >= 0")
    lhs, rhs_s, rhs_x = nielsen_sides(n, m)
    return lhs == rhs_s and lhs == rhs_x


def convolution_sides(n: int) -> tuple[list[XSPoly], list[XSPoly]]:
    """Both sides of the two-variable binomial convolution, indexed by y-degree."""
    lhs = [XSPoly(())] * (n + 1)
    rhs = [XSPoly(())] * (n + 1)
    for k in range(n + 1):
        lhs[n - k] = lhs[n - k] + XSPoly.x(k, q_binomial(n, k))
    for k in range(n + 1):
        # h-bar_k(y, -q s) with y kept as the outer index
        hbar_y = poly(Family.HBAR, k).scale_s(-Q)
        h = poly(Family.H, n - k) * q_binomial(n, k)
        for j, cj in enumerate(hbar_y.coeffs):
            if cj:
                rhs[j] = rhs[j] + h * cj
    return lhs, rhs


def convolution_identity_check(n: int) -> bool:
    lhs, rhs = convolution_sides(n)
    return lhs == rhs


# -- ladder and scaling links ------------------------------------------------


def ladder_check(family, n: int) -> bool:
    """q-derivative of p_n against the family's lowering relation."""
    family = Family.parse(family)
    if n == 0:
        return poly(family, 0).q_derivative().is_zero()
    p, pm = poly(family, n), poly(family, n - 1)
    d = p.q_derivative()
    if family in (Family.H, Family.HI, Family.HBAR):
        return d == pm * q_int(n)
    if family is Family.K:
        return d == pm.dilate(Q) * q_int(n)
    if family is Family.HII:
        return d == pm.dilate(Q) * (q_int(n) * _qpow(1 - n))
    if family is Family.CLASSICAL:
        return d.subs_q(1) == pm * n
    raise ValueError(family)


def inverted_base_ladder_check(n: int) -> bool:
    """D_q H_n(x, s, 1/q) = q**(1-n) [n] H_{n-1}(qx, s, 1/q)."""
    if n == 0:
        return True
    p = poly(Family.H, n).subs_q("1/q")
    pm = poly(Family.H, n - 1).subs_q("1/q")
    return p.q_derivative() == pm.dilate(Q) * (q_int(n) * _qpow(1 - n))


def k_from_inverted_h(n: int) -> XSPoly:
    return poly(Family.H, n).subs_q("1/q") * _qpow(_binom2(n))


def hii_from_k(n: int) -> XSPoly:
    return poly(Family.K, n).subs_s(SPoly((1 - Q,))) * _qpow(-_binom2(n))


def hi_from_h(n: int) -> XSPoly:
    return poly(Family.H, n).subs_s(SPoly((_hi_s(),)))


def s_rescaling_check(n: int) -> bool:
    """H_n(x, q^2 s, q) = q^n H_n(x/q, s, q)."""
    p = poly(Family.H, n)
    return p.scale_s(_qpow(2)) == p.dilate(_qpow(-1)) * _qpow(n)


def dilated_recurrence_check(n: int) -> bool:
    """H_{n+1}(x) = q^n x H_n(x/q) - q^n [n] s H_{n-1}(x/q)."""
    inv = _qpow(-1)
    rhs = X * poly(Family.H, n).dilate(inv) * _qpow(n)
    if n >= 1:
        rhs = rhs - poly(Family.H, n - 1).dilate(inv) * (S * (_qpow(n) * q_int(n)))
    return poly(Family.H, n + 1) == rhs


def rescaled_s_recurrence_check(n: int) -> bool:
    """H_{n+1}(x, s) = x H_n(x, q^2 s) - q s [n] H_{n-1}(x, q^2 s)."""
    q2 = _qpow(2)
    rhs = X * poly(Family.H, n).scale_s(q2)
    if n >= 1:
        rhs = rhs - poly(Family.H, n - 1).scale_s(q2) * (S * (Q * q_int(n)))
    return poly(Family.H, n + 1) == rhs


def classical_limit_check(family, n: int) -> bool:
    """q -> 1 of H_n or h-bar_n against the classical polynomial."""
    return poly(family, n).subs_q(1) == poly(Family.CLASSICAL, n)


HI_FIRST_TERMS = (
    XSPoly.const(1),
    X,
    X ** 2 - (1 - Q),
    X ** 3 - X * (1 - Q ** 3),
    X ** 4 - X ** 2 * ((1 - Q) * q_binomial(4, 2)) + Q ** 2 * (1 - Q) * (1 - Q ** 3),
)
