"""Numeric Jackson q-integration and validation of the two discrete measures.

Plain double precision. Every sum stops once its terms fall below
``tolerance * TRUNCATION_GUARD`` times the accumulated absolute sum (after
a minimum number of terms), so truncation error stays well under the
reporting tolerance even for q close to 1.
"""

from __future__ import annotations

import ast
import math
import operator
from dataclasses import asdict, dataclass, field
from typing import Callable

from .exactalg import XSPoly
from .families import Family, poly
from .functionals import LAMBDA_HI, L_HII

TRUNCATION_GUARD = 1e-4
Q_RANGE = (0.05, 0.95)


class NonConvergence(ArithmeticError):
    """A series did not settle within max_terms."""

    def __init__(self, what: str, partial: float, last_term: float, terms: int):
        super().__init__(
            f"{what}: no convergence after {terms} terms "
            f"(partial sum {partial!r}, last term {last_term!r})"
        )
        self.partial = partial
        self.last_term = last_term
        self.terms = terms


@dataclass(frozen=True)
class NumericConfig:
    q: float
    tolerance: float = 1e-9
    max_terms: int = 4000
    min_terms: int = 50
    c: float = 1.0

    def __post_init__(self):
        lo, hi = Q_RANGE
        if not lo <= self.q <= hi:
            raise ValueError(f"q must lie in [{lo}, {hi}], got {self.q}")
        if self.c <= 0:
            raise ValueError("the anchor c must be positive")
        if self.tolerance <= 0 or self.max_terms < self.min_terms:
            raise ValueError("bad tolerance or term limits")

    @property
    def stop(self) -> float:
        return self.tolerance * TRUNCATION_GUARD

    def with_c(self, c: float) -> "NumericConfig":
        return NumericConfig(self.q, self.tolerance, self.max_terms, self.min_terms, c)


def qproduct_infinite(a: float, base: float, max_terms: int = 4000) -> float:
    """(a; base)_inf = prod_{j>=0} (1 - a base^j)."""
    if not abs(base) < 1:
        raise ValueError("(a; base)_inf needs |base| < 1")
    prod, t = 1.0, a
    for j in range(max_terms):
        if abs(t) < 1e-18:
            return prod
        prod *= 1 - t
        t *= base
    raise NonConvergence("q-product", prod, t, max_terms)


def log_qproduct_plus(x: float, base: float, max_terms: int = 4000) -> float:
    """log (-x; base)_inf for x >= 0, safe for very large x."""
    acc, t = 0.0, x
    for _ in range(max_terms):
        if t < 1e-18:
            return acc
        acc += math.log1p(t)
        t *= base
    raise NonConvergence("log q-product", acc, t, max_terms)


def weight_I(x: float, q: float) -> float:
    """(q^2 x^2; q^2)_inf."""
    return qproduct_infinite(q * q * x * x, q * q)


def weight_II(x: float, q: float) -> float:
    """1/(-x^2; q^2)_inf."""
    return math.exp(-log_qproduct_plus(x * x, q * q))


def _sum_outward(term: Callable[[int], float], step: int, cfg: NumericConfig, what: str):
    """sum_{j>=0} term(step * j); returns (sum, absolute sum)."""
    total = scale = 0.0
    small = 0
    prev = math.inf
    for j in range(cfg.max_terms):
        t = term(step * j)
        total += t
        scale += abs(t)
        if j >= cfg.min_terms and abs(t) <= cfg.stop * scale and abs(t) <= prev:
            small += 1
            if small >= 3:
                return total, scale
        else:
            small = 0
        prev = abs(t)
    raise NonConvergence(what, total, t, cfg.max_terms)


def jackson_integral(f, b: float, cfg: NumericConfig, with_scale: bool = False):
    """int_0^b f d_q x = (1-q) b sum_j q^j f(q^j b)."""
    q = cfg.q
    total, scale = _sum_outward(lambda j: q ** j * f(q ** j * b), 1, cfg, "Jackson integral")
    k = (1 - q) * b
    return (k * total, abs(k) * scale) if with_scale else k * total


def jackson_integral_ab(f, a: float, b: float, cfg: NumericConfig) -> float:
    return jackson_integral(f, b, cfg) - jackson_integral(f, a, cfg)


def jackson_symmetric(f, cfg: NumericConfig, with_scale: bool = False):
    """int_{-1}^1 f d_q x."""
    return jackson_integral(lambda x: f(x) + f(-x), 1.0, cfg, with_scale)


def jackson_improper_bilateral(f, cfg: NumericConfig, with_scale: bool = False):
    """(1-q) sum_{j in Z} (f(q^j c) + f(-q^j c)) q^j c, summed from j = 0 outward."""
    q, c = cfg.q, cfg.c

    def term(j):
        x = q ** j * c
        return (f(x) + f(-x)) * x

    up, s_up = _sum_outward(term, 1, cfg, "bilateral sum (j >= 0)")
    down, s_down = _sum_outward(term, -1, cfg, "bilateral sum (j < 0)")
    t0 = term(0)
    total = (1 - q) * (up + down - t0)
    scale = (1 - q) * (s_up + s_down - abs(t0))
    return (total, scale) if with_scale else total


def _weighted(p: Callable[[float], float], w: Callable[[float, float], float], q: float):
    def f(x):
        wx = w(x, q)
        return 0.0 if wx == 0.0 else p(x) * wx

    return f


def _poly_fn(p: XSPoly, q: float, s: float = 0.0):
    coeffs = p.coefficients(q, s)

    def f(x):
        acc = 0.0
        for c in reversed(coeffs):
            acc = acc * x + c
        return acc

    return f


# -- reports --------------------------------------------------------------------


@dataclass
class CheckResult:
    identity: str
    parameters: dict
    lhs: float
    rhs: float
    abs_diff: float
    rel_diff: float
    passed: bool
    note: str = ""

    def to_json(self) -> dict:
        d = asdict(self)
        d["pass"] = d.pop("passed")
        if not d["note"]:
            del d["note"]
        return d


def _compare(identity, params, lhs, rhs, tol, scale=None, note="") -> CheckResult:
    diff = abs(lhs - rhs)
    denom = scale if scale is not None else max(abs(lhs), abs(rhs))
    rel = diff / denom if denom else diff
    return CheckResult(identity, params, lhs, rhs, diff, rel, rel < tol, note)


@dataclass
class ValidationReport:
    name: str
    results: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(r.passed for r in self.results)

    def failures(self) -> list:
        return [r for r in self.results if not r.passed]

    def to_json(self) -> dict:
        return {"report": self.name, "pass": self.ok, "results": [r.to_json() for r in self.results]}


def theta_sum(q: float) -> float:
    """sum over all integers n of q^binom(n+1, 2) (each value is hit twice)."""
    total, n = 0.0, 0
    while True:
        t = q ** (n * (n + 1) / 2)
        total += 2 * t
        if t < 1e-18:
            return total
        n += 1


def measureI_normalization(cfg: NumericConfig) -> float:
    return jackson_symmetric(lambda x: weight_I(x, cfg.q), cfg)


def lambda_I(f, cfg: NumericConfig) -> float:
    """Lambda(f) as the ratio of two Jackson integrals on [-1, 1]."""
    return jackson_symmetric(_weighted(f, weight_I, cfg.q), cfg) / measureI_normalization(cfg)


def measureI_validation(cfg: NumericConfig, n_max: int = 8, m_max: int = 5) -> ValidationReport:
    if n_max > 10:
        raise ValueError("measureI_validation supports n_max <= 10")
    q, tol = cfg.q, cfg.tolerance
    rep = ValidationReport(f"measure I, q={q}")
    norm = measureI_normalization(cfg)
    for n in range(1, n_max + 1):
        val = jackson_symmetric(_weighted(_poly_fn(poly(Family.HI, n), q), weight_I, q), cfg)
        rep.results.append(
            _compare("int h_n w d_qx = 0", {"q": q, "n": n}, val, 0.0, tol, scale=norm,
                     note="integral relative to the normalization; not an endpoint test")
        )
    rep.results.append(
        _compare("normalization = (1-q) theta sum", {"q": q}, norm, (1 - q) * theta_sum(q), tol)
    )
    product = 2 * (1 - q) * qproduct_infinite(q * q, q * q) * qproduct_infinite(-q, q)
    rep.results.append(_compare("normalization = product form", {"q": q}, norm, product, tol))
    half_theta = theta_sum(q) / 2
    for m in range(m_max + 1):
        exact = float(LAMBDA_HI.moment(2 * m)(0, q))
        ratio = lambda_I(lambda x, m=m: x ** (2 * m), cfg)
        rep.results.append(_compare("Lambda(x^2m) = (q;q^2)_m", {"q": q, "m": m}, ratio, exact, tol))
        cfg_sum, _ = _sum_outward(
            lambda j, m=m: q ** ((2 * m + 1) * j) * qproduct_infinite(q ** (2 + 2 * j), q * q),
            1, cfg, "moment sum",
        )
        rep.results.append(
            _compare("moment sum / theta = (q;q^2)_m", {"q": q, "m": m}, cfg_sum / half_theta, exact, tol)
        )
    return rep


def psi_normalization(q: float, c: float) -> float:
    """int w_II over the grid +-q^j c, from Ramanujan's 1psi1 sum (note the factor c)."""
    q2 = q * q
    num = (qproduct_infinite(-c * c * q, q2) * qproduct_infinite(-q / (c * c), q2)
           * qproduct_infinite(q2, q2))
    den = (qproduct_infinite(-c * c, q2) * qproduct_infinite(q, q2)
           * qproduct_infinite(-q2 / (c * c), q2))
    return 2 * (1 - q) * c * num / den


def measureII_normalization(cfg: NumericConfig) -> float:
    return jackson_improper_bilateral(lambda x: weight_II(x, cfg.q), cfg)


def L_II(f, cfg: NumericConfig) -> float:
    return jackson_improper_bilateral(_weighted(f, weight_II, cfg.q), cfg) / measureII_normalization(cfg)


def measureII_validation(cfg: NumericConfig, cs=(0.5, 1.0, 2.0), n_max: int = 8,
                         m_max: int = 4, tolerance: float = 1e-8) -> ValidationReport:
    q = cfg.q
    rep = ValidationReport(f"measure II, q={q}")
    moments: dict[int, list[float]] = {m: [] for m in range(m_max + 1)}
    for c in cs:
        cc = cfg.with_c(c)
        norm = measureII_normalization(cc)
        rep.results.append(
            _compare("bilateral normalization = 1psi1 product", {"q": q, "c": c},
                     norm, psi_normalization(q, c), tolerance)
        )
        for n in range(1, n_max + 1):
            f = _weighted(_poly_fn(poly(Family.HII, n), q), weight_II, q)
            val, scale = jackson_improper_bilateral(f, cc, with_scale=True)
            rep.results.append(
                _compare("L(hhat_n) = 0", {"q": q, "c": c, "n": n}, val / norm, 0.0, tolerance,
                         scale=scale / norm, note="relative to the integral of |hhat_n| w")
            )
        for m in range(m_max + 1):
            exact = float(L_HII.moment(2 * m)(0, q))
            val = L_II(lambda x, m=m: x ** (2 * m), cc)
            moments[m].append(val)
            rep.results.append(
                _compare("L(x^2m) = (q;q^2)_m / q^(m^2)", {"q": q, "c": c, "m": m}, val, exact, tolerance)
            )
    for m, vals in moments.items():
        lo, hi = min(vals), max(vals)
        rep.results.append(
            _compare("L(x^2m) independent of c", {"q": q, "m": m, "c": list(cs)}, hi, lo, tolerance)
        )
    return rep


def integration_by_parts_check(f: XSPoly, g: XSPoly, a: float, b: float, cfg: NumericConfig) -> bool:
    """int_a^b f D_q g = f g |_a^b - int_a^b g(qx) D_q f, numerically."""
    q = cfg.q
    ff, gg = _poly_fn(f, q), _poly_fn(g, q)
    dg, df = _poly_fn(g.q_derivative(), q), _poly_fn(f.q_derivative(), q)
    lhs = jackson_integral_ab(lambda x: ff(x) * dg(x), a, b, cfg)
    rhs = ff(b) * gg(b) - ff(a) * gg(a) - jackson_integral_ab(lambda x: gg(q * x) * df(x), a, b, cfg)
    return abs(lhs - rhs) <= cfg.tolerance * max(1.0, abs(lhs), abs(rhs))


def polynomial_integral_exact(p: XSPoly, q: float) -> float:
    """int_0^1 p d_q x = sum_k coeff_k / [k+1]."""
    return sum(c * (1 - q) / (1 - q ** (k + 1)) for k, c in enumerate(p.coefficients(q, 0.0)))


# -- expressions for the command line ------------------------------------------

_BINOPS = {
    ast.Add: operator.add, ast.Sub: operator.sub, ast.Mult: operator.mul,
    ast.Div: operator.truediv, ast.Pow: operator.pow,
}
_UNARY = {ast.UAdd: operator.pos, ast.USub: operator.neg}
_NAMES = {"pi": math.pi, "e": math.e}
_FUNCS = {"exp": math.exp, "sin": math.sin, "cos": math.cos, "sqrt": math.sqrt, "log": math.log}


def parse_expression(text: str) -> Callable[[float], float]:
    """A function of x from an arithmetic expression such as ``"x**2 - 1"``."""
    tree = ast.parse(text, mode="eval")

    def ev(node, x):
        if isinstance(node, ast.Expression):
            return ev(node.body, x)
        if isinstance(node, ast.Constant) and isinstance(node.value, (int, float)):
            return node.value
        if isinstance(node, ast.Name):
            if node.id == "x":
                return x
            if node.id in _NAMES:
                return _NAMES[node.id]
        if isinstance(node, ast.BinOp) and type(node.op) in _BINOPS:
            return _BINOPS[type(node.op)](ev(node.left, x), ev(node.right, x))
        if isinstance(node, ast.UnaryOp) and type(node.op) in _UNARY:
            return _UNARY[type(node.op)](ev(node.operand, x))
        if (isinstance(node, ast.Call) and isinstance(node.func, ast.Name)
                and node.func.id in _FUNCS and len(node.args) == 1):
            return _FUNCS[node.func.id](ev(node.args[0], x))
        raise ValueError(f"unsupported expression element: {ast.dump(node)}")

    ev(tree, 0.5)  # reject bad syntax before use
    return lambda x: float(ev(tree, x))
