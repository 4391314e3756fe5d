"""Identity suites behind ``qhermite verify``.

A suite is a list of tasks. Each task names an identity, carries a stable
reference tag (``paper_ref``) and a parameter dict, and points at a
module-level check function, so tasks can be shipped to worker processes.
Reports are sorted, hence identical for any worker count.
"""

from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from . import families as fam
from . import functionals as fn
from . import opcalc as op
from . import series as ser
from .exactalg import XSPoly
from .families import Family

SUITES = (
    "ladder", "routes", "genfun", "inversion", "rodrigues", "burchnall", "nielsen",
    "umbral", "orthogonality", "shifted-genfun", "series-rodrigues", "tangent-euler",
)


@dataclass(frozen=True)
class Task:
    suite: str
    identity: str
    paper_ref: str
    params: tuple  # sorted (key, value) pairs
    func: str
    args: tuple = ()

    def run(self) -> dict:
        entry = {
            "suite": self.suite,
            "identity": self.identity,
            "paper_ref": self.paper_ref,
            "params": dict(self.params),
        }
        try:
            result = _CHECKS[self.func](*self.args)
        except Exception as exc:  # reported, never swallowed silently
            entry["status"] = "error"
            entry["witness"] = f"{type(exc).__name__}: {exc}"
            return entry
        ok, witness = result if isinstance(result, tuple) else (result, None)
        entry["status"] = "pass" if ok else "fail"
        if witness is not None:
            entry["witness"] = witness
        return entry


def _task(suite, identity, ref, func, *args, **params) -> Task:
    return Task(suite, identity, ref, tuple(sorted(params.items())), func, args)


# -- check functions (module level so they pickle) -------------------------------


def _routes(family, n):
    return fam.formula_poly(family, n) == fam.poly(family, n)


def _determinant(n):
    return fam.determinant_oracle(n) == fam.poly(Family.H, n)


def _hbar_routes(n):
    return fam.hbar_three_term(n)[n] == fam.hbar_dilated(n)[n] == fam.poly(Family.HBAR, n)


def _first_terms():
    return all(fam.poly(Family.HI, n) == p for n, p in enumerate(fam.HI_FIRST_TERMS))


def _link(which, n):
    target, built = {
        "K": (Family.K, fam.k_from_inverted_h),
        "HII": (Family.HII, fam.hii_from_k),
        "HI": (Family.HI, fam.hi_from_h),
    }[which]
    return built(n) == fam.poly(target, n)


def _reconstruct(family, n):
    return fam.reconstruct(family, fam.monomial_expansion(family, n)) == XSPoly.x(n)


def _newton(which, n):
    h_sum, hbar_sum = fam.newton_like_basis(n)
    if which == "HI":
        return h_sum == fam.poly(Family.HI, n)
    from .exactalg import Q, SPoly
    return hbar_sum == fam.poly(Family.HBAR, n).subs_s(SPoly((Q - 1,)))


def _rodrigues(which, n):
    if which == "descending":
        return op.rodrigues_product_descending(n) == fam.poly(Family.H, n)
    if which == "ascending":
        return op.rodrigues_product_ascending(n) == fam.poly(Family.H, n)
    if which == "K":
        return op.rodrigues_K(n) == fam.poly(Family.K, n)
    if which == "HBAR":
        return op.rodrigues_hbar(n) == fam.poly(Family.HBAR, n)
    return op.scaled_power_identity(n)


def _genfun(variant, order):
    lhs, rhs = ser.genfun_sides(variant, order)
    return lhs == rhs


def _shifted(variant, order):
    lhs, rhs = ser.shifted_genfun_sides(variant, order)
    return lhs == rhs


def _exp_rule(name, order):
    if name in ("e_q", "E_q"):
        return ser.functional_equation_checks(order)[name]
    return ser.dq_exponential_checks(order)[name]


def _ratio(a, order):
    return ser.ratio_expansion_check(order, Fraction(a) if a != "s" else "s")


def _gram(family, max_n):
    g = fn.orthogonality_matrix(family, max_n)
    if not fn.is_diagonal(g):
        bad = next((i, j) for i in range(len(g)) for j in range(len(g)) if i != j and g[i][j])
        return False, f"G{list(bad)} = {g[bad[0]][bad[1]]}"
    for n in range(max_n + 1):
        if g[n][n] != fn.norm_closed_form(family, n):
            return False, f"G[{n}][{n}] = {g[n][n]}"
    return True


def _hbar_witness():
    val, expected = fn.hbar_witness()
    return (val == expected and not val.is_zero()), f"lambda(hbar_1 hbar_3) = {val}"


def _moment_routes(family, m_max):
    inv = fn.moments_from_inversion(family)
    f = fn.functional_for(family)
    return all(inv.moment(2 * m) == f.moment(2 * m) for m in range(m_max + 1))


def _hbar_moments(m_max):
    solved = fn.moments_from_defining_property(Family.HBAR, m_max)
    return solved == [fn.LAMBDA_HBAR.moment(2 * m) for m in range(m_max + 1)]


def _series_rodrigues(kind, n, order):
    return op.series_rodrigues_check(kind, n, order)


def _conjugated(k, order):
    return op.conjugated_step_check(XSPoly.x(k), order)


def _tangent_q1(n_max):
    table = ser.q_tangent_euler(n_max)
    t, e = table.at(1)
    ct, ce = ser.classical_tangent_euler(n_max)
    return (t == ct and e == ce), f"T = {[int(v) for v in t]}, E = {[int(v) for v in e]}"


def _phi(n_max):
    r = ser.phi_functional_check(n_max)
    return r.euler_ok and r.tangent_ok


_CHECKS = {
    f.__name__: f
    for f in (
        _routes, _determinant, _hbar_routes, _first_terms, _link, _reconstruct, _newton,
        _rodrigues, _genfun, _shifted, _exp_rule, _ratio, _gram, _hbar_witness,
        _moment_routes, _hbar_moments, _series_rodrigues, _conjugated, _tangent_q1, _phi,
    )
}
_CHECKS.update({
    "ladder": fam.ladder_check,
    "inverted_ladder": fam.inverted_base_ladder_check,
    "s_rescaling": fam.s_rescaling_check,
    "dilated_recurrence": fam.dilated_recurrence_check,
    "rescaled_s_recurrence": fam.rescaled_s_recurrence_check,
    "classical_limit": fam.classical_limit_check,
    "nielsen": fam.nielsen_identity_check,
    "convolution": fam.convolution_identity_check,
    "burchnall": op.burchnall_check,
    "umbral": op.umbral_inverse_check,
    "product_rule": op.product_rule_check,
    "commutation": op.commutation_check,
    "weighted_ladder": op.weighted_ladder_check,
    "e219": ser.identity_219_check,
    "inverted_exp": ser.inverted_base_exp_check,
    "inverted_product": ser.inverted_base_product_check,
    "classical_genfun": ser.classical_genfun_check,
    "inversion_genfun": ser.inversion_via_genfun,
    "defining": fn.defining_property_check,
    "specialization": fn.specialization_check,
    "classical_moments": fn.classical_moment_check,
    "classical_phi": ser.classical_phi_check,
})


# -- suite builders ---------------------------------------------------------------

_EXACT_FAMILIES = (Family.H, Family.K, Family.HI, Family.HII, Family.HBAR, Family.CLASSICAL)
_ORTHO_FAMILIES = (Family.H, Family.HI, Family.HII, Family.CLASSICAL)


def _families(family):
    return _EXACT_FAMILIES if family is None else (Family.parse(family),)


def _ladder(n_max, family):
    out = []
    for f in _families(family):
        out += [_task("ladder", f"q-derivative ladder {f.value}", f"ladder:{f.value}", "ladder", f, n, n=n)
                for n in range(n_max + 1)]
    if family is None:
        out += [_task("ladder", "ladder for H at base 1/q", "ladder:H(1/q)", "inverted_ladder", n, n=n)
                for n in range(n_max + 1)]
    return out


def _route_tasks(n_max, family):
    n_max = min(n_max, 12)
    out = []
    for f in _families(family):
        if f is not Family.HBAR:
            out += [_task("routes", f"explicit formula = recurrence {f.value}", f"routes:{f.value}",
                          "_routes", f, n, n=n) for n in range(n_max + 1)]
        else:
            out += [_task("routes", "hbar: formula, four-term and dilated recurrences",
                          "routes:HBAR", "_hbar_routes", n, n=n) for n in range(n_max + 1)]
            out += [_task("routes", "hbar formula = recurrence", "routes:HBAR-formula",
                          "_routes", f, n, n=n) for n in range(n_max + 1)]
        if f in (Family.H, Family.HBAR):
            out += [_task("routes", f"q -> 1 limit of {f.value}", f"q1:{f.value}",
                          "classical_limit", f, n, n=n) for n in range(n_max + 1)]
    if family in (None, Family.H):
        out += [_task("routes", "tridiagonal determinant = H_n", "routes:determinant",
                      "_determinant", n, n=n) for n in range(min(n_max, 9) + 1)]
        out += [_task("routes", name, ref, func, n, n=n) for n in range(n_max + 1)
                for name, ref, func in (
                    ("H_n(x, q^2 s) = q^n H_n(x/q, s)", "routes:s-rescaling", "s_rescaling"),
                    ("recurrence in dilated x", "routes:dilated-recurrence", "dilated_recurrence"),
                    ("recurrence in rescaled s", "routes:rescaled-s-recurrence", "rescaled_s_recurrence"),
                )]
    if family is None:
        out.append(_task("routes", "first terms of family I", "routes:HI-first-terms", "_first_terms"))
        for which, ref in (("K", "link:K-from-H(1/q)"), ("HII", "link:HII-from-K"), ("HI", "link:HI-from-H")):
            out += [_task("routes", f"{which} from its parent family", ref, "_link", which, n, n=n)
                    for n in range(n_max + 1)]
    return out


def _genfun_tasks(n_max, family):
    order = max(2, min(n_max, 24))
    out = [
        _task("genfun", "e_q(z) E_q(-z) = 1", "genfun:exp-reciprocal", "e219", 2 * order, order=2 * order),
        _task("genfun", "e_{1/q}(z) = E_q(z)", "genfun:exp-inverted-base", "inverted_exp", order, order=order),
        _task("genfun", "e(z, 1/q) = E(-qz, q)", "genfun:product-inverted-base", "inverted_product", order, order=order),
        _task("genfun", "classical generating function", "genfun:CLASSICAL", "classical_genfun", order, order=order),
    ]
    for name in ("e_q", "E_q"):
        out.append(_task("genfun", f"functional equation {name}", f"genfun:functional-eq:{name}",
                         "_exp_rule", name, order, order=order))
    for name in ("e_q(ax)", "E_q(ax)", "e_q2(ax^2/[2])", "E_q2(ax^2/[2])"):
        out.append(_task("genfun", f"q-derivative of {name}", f"genfun:dq:{name}",
                         "_exp_rule", name, order, order=order))
    for a in ("s", "3/2", "-1"):
        out.append(_task("genfun", "e_q(xz)/e_q(az) expansion", "genfun:ratio", "_ratio", a, order,
                         a=a, order=order))
    for variant in ser.GENFUN_VARIANTS:
        if family is None or variant.split("/")[0] == Family.parse(family).value:
            out.append(_task("genfun", f"generating function {variant}", f"genfun:{variant}",
                             "_genfun", variant, order, order=order))
    return out


def _inversion_tasks(n_max, family):
    n_max = min(n_max, 16)
    out = []
    for f in (Family.H, Family.HI, Family.HII, Family.K, Family.CLASSICAL):
        if family is None or Family.parse(family) is f:
            out += [_task("inversion", f"x^n in the {f.value} basis", f"inversion:{f.value}",
                          "_reconstruct", f, n, n=n) for n in range(n_max + 1)]
    if family is None:
        out += [_task("inversion", "inversion read off the generating function",
                      "inversion:genfun", "inversion_genfun", n, n=n) for n in range(n_max + 1)]
        for which in ("HI", "HBAR"):
            out += [_task("inversion", f"Newton-type expansion of {which}", f"inversion:newton:{which}",
                          "_newton", which, n, n=n) for n in range(n_max + 1)]
    return out


def _rodrigues_tasks(n_max, family):
    n_max = min(n_max, 15)
    kinds = {
        "descending": "rodrigues:H-descending", "ascending": "rodrigues:H-ascending",
        "K": "rodrigues:K", "HBAR": "rodrigues:HBAR", "scaled": "rodrigues:H-scaled-power",
    }
    return [_task("rodrigues", f"Rodrigues product {k}", ref, "_rodrigues", k, n, n=n)
            for k, ref in kinds.items() for n in range(n_max + 1)]


def _burchnall_tasks(n_max, family):
    return [_task("burchnall", "Burchnall expansion on monomials", "burchnall", "burchnall", n,
                  n=n, max_degree=2 * n + 4) for n in range(min(n_max, 8) + 1)]


def _nielsen_tasks(n_max, family):
    top = min(n_max, 14)
    out = [_task("nielsen", "H_{n+m} as a product sum", "nielsen:product", "nielsen", n, m, n=n, m=m)
           for n in range(top + 1) for m in range(top + 1 - n)]
    out += [_task("nielsen", "binomial convolution with hbar", "nielsen:convolution", "convolution", n, n=n)
            for n in range(min(n_max, 10) + 1)]
    return out


def _umbral_tasks(n_max, family):
    out = [_task("umbral", "H_n(x + q s Eps Dq) 1 = x^n", "umbral:inverse", "umbral", n, n=n)
           for n in range(min(n_max, 12) + 1)]
    top = min(n_max, 6)
    for j in range(top + 1):
        for m in range(top + 1):
            out.append(_task("umbral", "q-product rule", "operator:product-rule", "product_rule", j, m, j=j, m=m))
            out.append(_task("umbral", "commutation rule", "operator:commutation", "commutation", j, m, j=j, m=m))
    return out


def _ortho_tasks(n_max, family):
    top = min(n_max, 10)
    fams = _ORTHO_FAMILIES if family is None else (Family.parse(family),)
    out = []
    for f in fams:
        if f is Family.HBAR:
            continue
        out.append(_task("orthogonality", f"Gram matrix diagonal with closed-form norms ({f.value})",
                         f"orthogonality:{f.value}", "_gram", f, top, max_n=top))
        out.append(_task("orthogonality", f"functional vanishes on p_n, n > 0 ({f.value})",
                         f"functional:{f.value}", "defining", f, 2 * top, n_max=2 * top))
        out.append(_task("orthogonality", f"moments from the inversion ({f.value})",
                         f"moments:{f.value}", "_moment_routes", f, top, m_max=top))
    if family is None or Family.parse(family) is Family.HBAR:
        out.append(_task("orthogonality", "hbar is not orthogonal", "orthogonality:HBAR-witness", "_hbar_witness"))
        out.append(_task("orthogonality", "lambda vanishes on hbar_n, n > 0", "functional:HBAR",
                         "defining", Family.HBAR, 12, n_max=12))
        out.append(_task("orthogonality", "hbar moments from the defining property", "moments:HBAR",
                         "_hbar_moments", top, m_max=top))
    if family is None:
        out.append(_task("orthogonality", "Lambda_H at s = (1-q)/q is Lambda_HI", "moments:specialization",
                         "specialization", 15, m_max=15))
        out.append(_task("orthogonality", "Lambda_H at q = 1 is the classical functional",
                         "q1:moments", "classical_moments", 12, m_max=12))
    return out


def _shifted_tasks(n_max, family):
    order = max(1, min(n_max, 20))
    return [_task("shifted-genfun", f"shifted generating function {v}", f"shifted-genfun:{v}",
                  "_shifted", v, order, order=order) for v in ser.SHIFTED_VARIANTS]


def _series_rodrigues_tasks(n_max, family):
    top = min(n_max, 6)
    out = []
    for kind in (Family.HI, Family.K, Family.HII):
        out += [_task("series-rodrigues", f"truncated Rodrigues formula {kind.value}",
                      f"series-rodrigues:{kind.value}", "_series_rodrigues", kind, n, n + 8, n=n, order=n + 8)
                for n in range(top + 1)]
    out += [_task("series-rodrigues", "weighted lowering of h_n", "series-rodrigues:weighted-ladder",
                  "weighted_ladder", n, n + 8, n=n, order=n + 8) for n in range(top + 1)]
    out += [_task("series-rodrigues", "conjugated q-derivative step", "series-rodrigues:conjugation",
                  "_conjugated", k, k + 8, k=k, order=k + 8) for k in range(top + 3)]
    return out


def _tangent_tasks(n_max, family):
    top = min(n_max, 6)
    return [
        _task("tangent-euler", "q = 1 tangent and Euler numbers", "tangent:q1", "_tangent_q1", max(top, 4), n_max=max(top, 4)),
        _task("tangent-euler", "Phi from the triangular solve", "tangent:phi", "_phi", top, n_max=top),
        _task("tangent-euler", "classical functional F", "tangent:classical-F", "classical_phi", top, n_max=top),
    ]


_BUILDERS = {
    "ladder": _ladder, "routes": _route_tasks, "genfun": _genfun_tasks, "inversion": _inversion_tasks,
    "rodrigues": _rodrigues_tasks, "burchnall": _burchnall_tasks, "nielsen": _nielsen_tasks,
    "umbral": _umbral_tasks, "orthogonality": _ortho_tasks, "shifted-genfun": _shifted_tasks,
    "series-rodrigues": _series_rodrigues_tasks, "tangent-euler": _tangent_tasks,
}


def tasks_for(suite: str, n_max: int = 8, family=None) -> list[Task]:
    if suite == "all":
        return [t for s in SUITES for t in _BUILDERS[s](n_max, family)]
    if suite not in _BUILDERS:
        raise ValueError(f"unknown suite {suite!r}; choose from {', '.join(SUITES + ('all',))}")
    return _BUILDERS[suite](n_max, None if family is None else Family.parse(family))


def _sort_key(entry):
    return entry["suite"], entry["identity"], json.dumps(entry["params"], sort_keys=True, default=str)


def _run(task: Task) -> dict:
    return task.run()


def run_suite(suite: str, n_max: int = 8, family=None, workers: int = 1) -> list[dict]:
    tasks = tasks_for(suite, n_max, family)
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            entries = list(pool.map(_run, tasks, chunksize=8))
    else:
        entries = [t.run() for t in tasks]
    for e in entries:
        e["params"] = {k: (v.value if isinstance(v, Family) else v) for k, v in e["params"].items()}
    return sorted(entries, key=_sort_key)


def all_passed(entries) -> bool:
    return all(e["status"] == "pass" for e in entries)


# every tag the full suite is expected to emit (checked by the test suite)
EXPECTED_TAGS = frozenset(
    [f"ladder:{f.value}" for f in _EXACT_FAMILIES] + ["ladder:H(1/q)"]
    + [f"routes:{f.value}" for f in _EXACT_FAMILIES if f is not Family.HBAR]
    + ["routes:HBAR", "routes:HBAR-formula", "routes:determinant", "routes:s-rescaling",
       "routes:dilated-recurrence", "routes:rescaled-s-recurrence", "routes:HI-first-terms",
       "link:K-from-H(1/q)", "link:HII-from-K", "link:HI-from-H", "q1:H", "q1:HBAR", "q1:moments"]
    + ["genfun:exp-reciprocal", "genfun:exp-inverted-base", "genfun:product-inverted-base",
       "genfun:CLASSICAL", "genfun:functional-eq:e_q", "genfun:functional-eq:E_q", "genfun:ratio"]
    + [f"genfun:dq:{n}" for n in ("e_q(ax)", "E_q(ax)", "e_q2(ax^2/[2])", "E_q2(ax^2/[2])")]
    + [f"genfun:{v}" for v in ser.GENFUN_VARIANTS]
    + [f"inversion:{f}" for f in ("H", "HI", "HII", "K", "CLASSICAL", "genfun", "newton:HI", "newton:HBAR")]
    + ["rodrigues:H-descending", "rodrigues:H-ascending", "rodrigues:K", "rodrigues:HBAR",
       "rodrigues:H-scaled-power", "burchnall", "nielsen:product", "nielsen:convolution",
       "umbral:inverse", "operator:product-rule", "operator:commutation"]
    + [f"orthogonality:{f.value}" for f in _ORTHO_FAMILIES]
    + [f"functional:{f.value}" for f in _ORTHO_FAMILIES + (Family.HBAR,)]
    + [f"moments:{f.value}" for f in _ORTHO_FAMILIES + (Family.HBAR,)]
    + ["orthogonality:HBAR-witness", "moments:specialization"]
    + [f"shifted-genfun:{v}" for v in ser.SHIFTED_VARIANTS]
    + [f"series-rodrigues:{k}" for k in ("HI", "K", "HII", "weighted-ladder", "conjugation")]
    + ["tangent:q1", "tangent:phi", "tangent:classical-F"]
)
