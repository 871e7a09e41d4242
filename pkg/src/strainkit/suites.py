"""Named identity-check suites with exact residual reporting.

Every check computes an exact residual: the string "0" means the identity
held on every trial, anything else is an exact description of the first
failure.  No tolerances anywhere.  Check names are stable identifiers used
by the command-line runner and by reports.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from fractions import Fraction

from . import exactlin, fieldio
from .calculus import (curl, curl_curl, curl_curl_direct, div, div_sym, grad,
                       homotopy_antiderivative, sym_grad)
from .complexes import (GradedSpace, Slot, SkewMat4, build_elasticity_complex,
                        build_grad_curl_div_complex, build_w_complex,
                        derive_elasticity, lambda2_split, matrix_of,
                        random_skew4, random_vec4, verify_complex,
                        wedge_with_vector, interior_product, OPERATOR_IDS)
from .connection import (WField, WOneForm, flat_sections_basis,
                         normalize_rigid, random_w_field, random_w_one_form,
                         rigid_motion, saint_venant_reconstruct, w_curl,
                         w_div, w_grad, w_poincare)
from .errors import CompatibilityError
from .fields import (AXES, Mat3Field, SYM_INDEX_PAIRS, SymField, VecField,
                     delta, eps, random_field, random_point)
from .poly import Poly3
from .riemannian import (MetricJet, PolyMetric, bianchi_check, jet_inverse,
                         linearized_einstein, pointwise_curvature, ricci_jet)

SUITE_NAMES = ("calculus", "connection", "riemannian", "complex")


@dataclass(frozen=True)
class SuiteConfig:
    """Parameters of one verification run."""

    suite: str = "all"
    degree: int = 3
    trials: int = 2
    seed: int = 0
    corrupt: str | None = None


@dataclass(frozen=True)
class CheckRecord:
    name: str
    status: str
    residual: str
    elapsed: float

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_dict(self) -> dict:
        return {"name": self.name, "status": self.status,
                "residual": self.residual, "elapsed": self.elapsed}


@dataclass
class VerificationReport:
    """Outcome of a suite run; records are sorted by check name."""

    config: SuiteConfig
    records: list[CheckRecord] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.records)

    @property
    def failures(self) -> list[CheckRecord]:
        return [r for r in self.records if not r.passed]

    def to_dict(self) -> dict:
        return {
            "suite": self.config.suite,
            "degree": self.config.degree,
            "trials": self.config.trials,
            "seed": self.config.seed,
            "passed": self.passed,
            "checks": [r.to_dict() for r in self.records],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)


def _trial_seed(cfg: SuiteConfig, salt: int, trial: int) -> int:
    return cfg.seed * 1009 + salt * 101 + trial


def residual_text(value) -> str:
    """Exact, human-readable residual text for any field-like value."""
    if isinstance(value, Poly3):
        return str(value)
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, VecField):
        return "(" + "; ".join(str(c) for c in value.components) + ")"
    if isinstance(value, SymField):
        parts = [f"[{i}{j}] {p}" for (i, j), p in
                 zip(SYM_INDEX_PAIRS, value.upper) if not p.is_zero()]
        return "; ".join(parts) if parts else "0"
    if isinstance(value, Mat3Field):
        parts = [f"[{i}{j}] {value.entry(i, j)}" for i in AXES for j in AXES
                 if not value.entry(i, j).is_zero()]
        return "; ".join(parts) if parts else "0"
    if isinstance(value, WField):
        return f"X: {residual_text(value.x)}; Y: {residual_text(value.y)}"
    if isinstance(value, WOneForm):
        return f"sigma: {residual_text(value.sigma)}; xi: {residual_text(value.xi)}"
    if isinstance(value, SkewMat4):
        parts = [f"[{i}{j}] {value.entry(i, j)}" for i in range(1, 5)
                 for j in range(i + 1, 5) if value.entry(i, j) != 0]
        return "; ".join(parts) if parts else "0"
    return str(value)


def _res(value) -> str:
    """\"0\" when the residual vanishes exactly, else its exact text."""
    if isinstance(value, Fraction):
        return "0" if value == 0 else str(value)
    return "0" if value.is_zero() else residual_text(value)


# -- calculus suite ----------------------------------------------------------

def _check_mixed_partials(cfg: SuiteConfig) -> str:
    for t in range(cfg.trials):
        f = random_field("scalar", cfg.degree, _trial_seed(cfg, 1, t))
        for i in AXES:
            for j in AXES:
                r = f.partial(i).partial(j) - f.partial(j).partial(i)
                if not r.is_zero():
                    return residual_text(r)
    return "0"


def _check_product_rule(cfg: SuiteConfig) -> str:
    for t in range(cfg.trials):
        f = random_field("scalar", cfg.degree, _trial_seed(cfg, 2, t))
        g = random_field("scalar", cfg.degree, _trial_seed(cfg, 3, t))
        for i in AXES:
            r = (f * g).partial(i) - f * g.partial(i) - g * f.partial(i)
            if not r.is_zero():
                return residual_text(r)
    return "0"


def _check_eval_homomorphism(cfg: SuiteConfig) -> str:
    for t in range(cfg.trials):
        f = random_field("scalar", cfg.degree, _trial_seed(cfg, 4, t))
        g = random_field("scalar", cfg.degree, _trial_seed(cfg, 5, t))
        p = random_point(_trial_seed(cfg, 6, t))
        r = (f * g).evaluate(p) - f.evaluate(p) * g.evaluate(p)
        if r != 0:
            return str(r)
        r = (f + g).evaluate(p) - f.evaluate(p) - g.evaluate(p)
        if r != 0:
            return str(r)
    return "0"


def _check_epsilon_delta(cfg: SuiteConfig) -> str:
    for t in range(cfg.trials):
        xi = random_field("mat", cfg.degree, _trial_seed(cfg, 7, t))
        tr = xi.trace()
        for i in AXES:
            for l in AXES:
                lhs = sum((eps(i, j, k) * eps(j, l, m) * xi.entry(k, m)
                           for j in AXES for k in AXES for m in AXES), Poly3())
                rhs = xi.entry(l, i) - delta(i, l) * tr
                if not (lhs - rhs).is_zero():
                    return residual_text(lhs - rhs)
    return "0"


def _check_curl_grad(cfg: SuiteConfig) -> str:
    for t in range(cfg.trials):
        f = random_field("scalar", cfg.degree + 1, _trial_seed(cfg, 8, t))
        r = curl(grad(f))
        if not r.is_zero():
            return residual_text(r)
    return "0"


def _check_div_curl(cfg: SuiteConfig) -> str:
    for t in range(cfg.trials):
        x = random_field("vec", cfg.degree + 1, _trial_seed(cfg, 9, t))
        r = div(curl(x))
        if not r.is_zero():
            return residual_text(r)
    return "0"


def _check_compat_annihilates_strains(cfg: SuiteConfig) -> str:
    for t in range(cfg.trials):
        x = random_field("vec", cfg.degree + 1, _trial_seed(cfg, 10, t))
        r = curl_curl(sym_grad(x))
        if not r.is_zero():
            return residual_text(r)
    return "0"


def _check_div_after_compat(cfg: SuiteConfig) -> str:
    for t in range(cfg.trials):
        s = random_field("sym", cfg.degree + 1, _trial_seed(cfg, 11, t))
        r = div_sym(curl_curl(s))
        if not r.is_zero():
            return residual_text(r)
    return "0"


def _check_compat_two_routes(cfg: SuiteConfig) -> str:
    for t in range(cfg.trials):
        s = random_field("sym", cfg.degree, _trial_seed(cfg, 12, t))
        r = curl_curl(s) - curl_curl_direct(s)
        if not r.is_zero():
            return residual_text(r)
    return "0"


def _check_homotopy_inverts_grad(cfg: SuiteConfig) -> str:
    origin = (Fraction(0), Fraction(0), Fraction(0))
    for t in range(cfg.trials):
        f = random_field("scalar", cfg.degree, _trial_seed(cfg, 13, t))
        r = homotopy_antiderivative(grad(f)) - (f - f.evaluate(origin))
        if not r.is_zero():
            return residual_text(r)
    return "0"


def _check_homotopy_rejects(cfg: SuiteConfig) -> str:
    for t in range(cfg.trials):
        seed = _trial_seed(cfg, 14, t)
        x = random_field("vec", max(cfg.degree, 1), seed)
        while curl(x).is_zero():
            seed += 17
            x = random_field("vec", max(cfg.degree, 1), seed)
        try:
            homotopy_antiderivative(x)
        except CompatibilityError as exc:
            if exc.residual is None or (exc.residual - curl(x)).is_zero():
                continue
            return "reported residual differs from curl: " + residual_text(exc.residual)
        return "no compatibility error for a field with nonzero curl"
    return "0"


def _check_random_field_deterministic(cfg: SuiteConfig) -> str:
    for kind in ("scalar", "vec", "sym", "mat"):
        a = random_field(kind, cfg.degree, cfg.seed)
        b = random_field(kind, cfg.degree, cfg.seed)
        if not (a - b).is_zero():
            return f"kind {kind!r} not reproducible at seed {cfg.seed}"
    return "0"


def _check_serialization_round_trip(cfg: SuiteConfig) -> str:
    for kind in ("scalar", "vec", "sym", "mat"):
        f = random_field(kind, cfg.degree, _trial_seed(cfg, 15, 0))
        text = fieldio.dumps(f)
        back = fieldio.loads(text, expect_kind=kind)
        if back != f:
            return f"kind {kind!r} did not round-trip"
        if fieldio.dumps(back) != text:
            return f"kind {kind!r} serialization not canonical"
    w = random_w_field(cfg.degree, _trial_seed(cfg, 15, 1))
    if fieldio.loads(fieldio.dumps(w), expect_kind="w") != w:
        return "kind 'w' did not round-trip"
    psi = random_w_one_form(cfg.degree, _trial_seed(cfg, 15, 2))
    if fieldio.loads(fieldio.dumps(psi), expect_kind="wform") != psi:
        return "kind 'wform' did not round-trip"
    return "0"


# -- connection suite --------------------------------------------------------

def _check_w_curl_after_grad(cfg: SuiteConfig) -> str:
    for t in range(cfg.trials):
        f = random_w_field(cfg.degree, _trial_seed(cfg, 21, t))
        r = w_curl(w_grad(f))
        if not r.is_zero():
            return residual_text(r)
    return "0"


def _check_w_div_after_curl(cfg: SuiteConfig) -> str:
    for t in range(cfg.trials):
        psi = random_w_one_form(cfg.degree, _trial_seed(cfg, 22, t))
        r = w_div(w_curl(psi))
        if not r.is_zero():
            return residual_text(r)
    return "0"


def _check_flat_sections_in_kernel(cfg: SuiteConfig) -> str:
    for k, section in enumerate(flat_sections_basis()):
        r = w_grad(section)
        if not r.is_zero():
            return f"section {k}: " + residual_text(r)
    return "0"


def _check_flat_sections_independent(cfg: SuiteConfig) -> str:
    space = GradedSpace([Slot("x", "vec", 1), Slot("y", "vec", 0)])
    cols = [space.to_coords((s.x, s.y)) for s in flat_sections_basis()]
    rank = exactlin.sparse_rank(cols, space.dim)
    if rank != 6:
        return f"rank {rank} of 6"
    return "0"


def _check_poincare_inverts(cfg: SuiteConfig) -> str:
    for t in range(cfg.trials):
        f = random_w_field(cfg.degree, _trial_seed(cfg, 23, t))
        form = w_grad(f)
        g = w_poincare(form)
        back = w_grad(g)
        r_sigma = back.sigma - form.sigma
        r_xi = back.xi - form.xi
        if not (r_sigma.is_zero() and r_xi.is_zero()):
            return residual_text(WOneForm(r_sigma, r_xi))
        residual = f - g
        if residual.y.degree > 0 or not sym_grad(residual.x).is_zero():
            return "potential differs by a non-flat section: " + residual_text(residual)
    return "0"


def _check_poincare_rejects(cfg: SuiteConfig) -> str:
    for t in range(cfg.trials):
        seed = _trial_seed(cfg, 24, t)
        psi = random_w_one_form(max(cfg.degree, 1), seed)
        while w_curl(psi).is_zero():
            seed += 17
            psi = random_w_one_form(max(cfg.degree, 1), seed)
        try:
            w_poincare(psi)
        except CompatibilityError:
            continue
        return "no compatibility error for a non-closed form"
    return "0"


def _check_saint_venant_round_trip(cfg: SuiteConfig) -> str:
    for t in range(cfg.trials):
        u = random_field("vec", cfg.degree + 1, _trial_seed(cfg, 25, t))
        strain = sym_grad(u)
        v = saint_venant_reconstruct(strain)
        r = sym_grad(v) - strain
        if not r.is_zero():
            return residual_text(r)
    return "0"


def _check_saint_venant_rejects(cfg: SuiteConfig) -> str:
    for t in range(cfg.trials):
        seed = _trial_seed(cfg, 26, t)
        s = random_field("sym", max(cfg.degree, 2), seed)
        while curl_curl(s).is_zero():
            seed += 17
            s = random_field("sym", max(cfg.degree, 2), seed)
        try:
            saint_venant_reconstruct(s)
        except CompatibilityError as exc:
            if exc.residual is None or (exc.residual - curl_curl(s)).is_zero():
                continue
            return "reported residual differs from the compatibility tensor"
        return "no compatibility error for an incompatible strain"
    return "0"


def _check_normalize_rigid_gauge(cfg: SuiteConfig) -> str:
    origin = (Fraction(0), Fraction(0), Fraction(0))
    for t in range(cfg.trials):
        u = random_field("vec", cfg.degree + 1, _trial_seed(cfg, 27, t))
        shift = rigid_motion((Fraction(1, 2), Fraction(-3), Fraction(t + 1)),
                             (Fraction(2), Fraction(1, 3), Fraction(-t - 1)))
        v = normalize_rigid(u + shift)
        if any(c != 0 for c in v.evaluate(origin)):
            return "value at the origin: " + str(v.evaluate(origin))
        jac = Mat3Field.from_entries(lambda i, j: v.comp(j).partial(i))
        skew0 = jac.skew_part()
        vals = [skew0.entry(i, j).evaluate(origin) for i in AXES for j in AXES]
        if any(vals):
            return "skew Jacobian at the origin: " + str(vals)
        r = sym_grad(v) - sym_grad(u)
        if not r.is_zero():
            return residual_text(r)
    return "0"


def _check_rigid_motions_flat(cfg: SuiteConfig) -> str:
    for t in range(cfg.trials):
        a = random_point(_trial_seed(cfg, 28, t))
        b = random_point(_trial_seed(cfg, 29, t))
        r = sym_grad(rigid_motion(a, b))
        if not r.is_zero():
            return residual_text(r)
    return "0"


# -- riemannian suite --------------------------------------------------------

def _check_metric_jet_inverse(cfg: SuiteConfig) -> str:
    for t in range(cfg.trials):
        sigma = random_field("sym", cfg.degree, _trial_seed(cfg, 31, t))
        g = MetricJet.from_strain(sigma)
        ginv = jet_inverse(g)
        for i in AXES:
            for j in AXES:
                prod = sum((g.entry(i, k) * ginv.entry(k, j) for k in AXES),
                           g.entry(1, 1) - g.entry(1, 1))
                want_p0 = Poly3.constant(1) if i == j else Poly3()
                if prod.p0 != want_p0 or not prod.p1.is_zero():
                    return f"entry ({i},{j}): {prod}"
    return "0"


def _check_einstein_matches_compat(cfg: SuiteConfig) -> str:
    for t in range(cfg.trials):
        sigma = random_field("sym", cfg.degree, _trial_seed(cfg, 32, t))
        r = linearized_einstein(sigma) - curl_curl(sigma)
        if not r.is_zero():
            return residual_text(r)
    return "0"


def _check_einstein_kills_strains(cfg: SuiteConfig) -> str:
    for t in range(cfg.trials):
        u = random_field("vec", cfg.degree + 1, _trial_seed(cfg, 33, t))
        r = linearized_einstein(sym_grad(u))
        if not r.is_zero():
            return residual_text(r)
    return "0"


def _check_bianchi_linearized(cfg: SuiteConfig) -> str:
    for t in range(cfg.trials):
        sigma = random_field("sym", cfg.degree + 1, _trial_seed(cfg, 34, t))
        r = bianchi_check(sigma)
        if not r.is_zero():
            return residual_text(r)
    return "0"


def _check_einstein_trace(cfg: SuiteConfig) -> str:
    for t in range(cfg.trials):
        sigma = random_field("sym", cfg.degree, _trial_seed(cfg, 35, t))
        curvature = ricci_jet(MetricJet.from_strain(sigma))
        trace = sum((curvature.einstein[k][k] for k in range(3)),
                    curvature.scalar - curvature.scalar)
        # on a three-dimensional background, tr(R g - 2 Ric) = 3R - 2R = R
        r = trace - curvature.scalar
        if not r.is_zero():
            return str(r)
    return "0"


_FLAT_MAPS: list[list[Poly3]] = []


def _flat_test_maps() -> list[list[Poly3]]:
    if not _FLAT_MAPS:
        x1, x2, x3 = Poly3.variable(1), Poly3.variable(2), Poly3.variable(3)
        _FLAT_MAPS.extend([
            [x1 + x2 * x2, x2, x3],
            [x1, x2 + x1 * x3, x3],
            [x1 + x2 * x3, x2 + x3 * x3 * x3, x3],
            [x1, x2, x3 + x1 * x1 * x2],
            [x1 + Fraction(1, 2) * x2 * x2 + x3, x2 - 2 * x3 * x3, x3],
        ])
    return _FLAT_MAPS


def _check_flat_pullback_pointwise(cfg: SuiteConfig) -> str:
    for k, phi in enumerate(_flat_test_maps()):
        metric = PolyMetric.from_map_jacobian(phi)
        for t in range(max(cfg.trials, 2)):
            point = random_point(_trial_seed(cfg, 36 + k, t))
            values = pointwise_curvature(metric, point)
            if not values.ricci_is_zero():
                return (f"map {k} at {tuple(str(c) for c in point)}: ricci "
                        + str([[str(v) for v in row] for row in values.ricci]))
    return "0"


def _check_curvature_example(cfg: SuiteConfig) -> str:
    one = Poly3.constant(1)
    x1 = Poly3.variable(1)
    metric = PolyMetric.from_matrix(Mat3Field.from_entries(
        lambda i, j: one + x1 * x1 if i == j == 3 else (one if i == j else Poly3())))
    values = pointwise_curvature(
        metric, (Fraction(0), Fraction(0), Fraction(0)))
    want_ricci = ((Fraction(1), Fraction(0), Fraction(0)),
                  (Fraction(0), Fraction(0), Fraction(0)),
                  (Fraction(0), Fraction(0), Fraction(1)))
    want_einstein = ((Fraction(0), Fraction(0), Fraction(0)),
                     (Fraction(0), Fraction(2), Fraction(0)),
                     (Fraction(0), Fraction(0), Fraction(0)))
    if values.ricci != want_ricci:
        return "ricci " + str([[str(v) for v in row] for row in values.ricci])
    if values.scalar != 2:
        return "scalar " + str(values.scalar)
    if values.einstein != want_einstein:
        return "einstein " + str([[str(v) for v in row] for row in values.einstein])
    return "0"


# -- complex suite -----------------------------------------------------------

def _complex_degree(cfg: SuiteConfig) -> int:
    # complex constructions need all truncation bounds nonnegative
    return max(cfg.degree, 3)


def _report_residual(report) -> str:
    bad = [r for r in report.composition_residuals if r != "0"]
    if bad:
        return bad[0]
    if not report.is_exact_interior:
        return f"exactness defects {report.defects}"
    return "0"


def _check_gcd_complex(cfg: SuiteConfig) -> str:
    report = verify_complex(build_grad_curl_div_complex(_complex_degree(cfg)))
    return _report_residual(report)


def _check_elasticity_complex(cfg: SuiteConfig) -> str:
    report = verify_complex(build_elasticity_complex(_complex_degree(cfg)))
    return _report_residual(report)


def _check_elasticity_kernel(cfg: SuiteConfig) -> str:
    c = build_elasticity_complex(_complex_degree(cfg))
    k = c.maps[0].kernel_dim()
    return "0" if k == 6 else f"kernel dimension {k} of 6"


def _check_coupled_complex(cfg: SuiteConfig) -> str:
    report = verify_complex(build_w_complex(_complex_degree(cfg)))
    return _report_residual(report)


def _check_coupled_kernel(cfg: SuiteConfig) -> str:
    c = build_w_complex(_complex_degree(cfg))
    k = c.maps[0].kernel_dim()
    return "0" if k == 6 else f"kernel dimension {k} of 6"


def _check_derivation(cfg: SuiteConfig) -> str:
    result = derive_elasticity(_complex_degree(cfg))
    if not result.factors_ok:
        return f"stage factors {result.stage_factors}"
    if not result.reduced_report.compositions_zero:
        return _report_residual(result.reduced_report)
    if not result.defects_preserved:
        return (f"defects changed: {result.full_report.defects} -> "
                f"{result.reduced_report.defects}")
    return "0"


def _check_matrix_operator_agreement(cfg: SuiteConfig) -> str:
    d = _complex_degree(cfg)
    plain = {"grad": ("scalar", grad), "curl": ("vec", curl),
             "div": ("vec", div), "sym_grad": ("vec", sym_grad),
             "curl_curl": ("sym", curl_curl), "div_sym": ("sym", div_sym)}
    for t in range(cfg.trials):
        seed = _trial_seed(cfg, 41, t)
        for op_id in OPERATOR_IDS:
            m = matrix_of(op_id, d)
            if op_id in plain:
                kind, fn = plain[op_id]
                f = random_field(kind, d, seed)
                got = m.apply_coords(m.domain.to_coords((f,)))
                want = m.codomain.to_coords((fn(f),))
            elif op_id == "w_grad":
                f = random_w_field(d, seed)
                out = w_grad(f)
                got = m.apply_coords(m.domain.to_coords((f.x, f.y)))
                want = m.codomain.to_coords((out.sigma, out.xi))
            else:
                psi = random_w_one_form(d, seed)
                got = m.apply_coords(m.domain.to_coords((psi.sigma, psi.xi)))
                if op_id == "w_curl":
                    out = w_curl(psi)
                    want = m.codomain.to_coords((out.sigma, out.xi))
                else:
                    out = w_div(psi)
                    want = m.codomain.to_coords((out.x, out.y))
            if got != want:
                return f"operator {op_id!r} disagrees with its matrix"
    return "0"


def _check_lambda2_split(cfg: SuiteConfig) -> str:
    for t in range(max(cfg.trials, 3)):
        v = random_vec4(_trial_seed(cfg, 42, t))
        omega = random_skew4(_trial_seed(cfg, 43, t))
        alpha, beta = lambda2_split(v, omega)
        r = alpha + beta - omega
        if not r.is_zero():
            return residual_text(r)
        if any(c != 0 for c in interior_product(v, beta)):
            return "contraction of beta: " + str(interior_product(v, beta))
        if any(c != 0 for c in wedge_with_vector(v, alpha).values()):
            return "wedge of alpha nonzero"
        neg = tuple(-c for c in v)
        alpha2, beta2 = lambda2_split(neg, omega)
        if not ((alpha - alpha2).is_zero() and (beta - beta2).is_zero()):
            return "split depends on the sign of the direction"
        u = random_vec4(_trial_seed(cfg, 44, t))
        wedge = SkewMat4.from_wedge(v, u)
        _, beta3 = lambda2_split(v, wedge)
        if not beta3.is_zero():
            return "decomposable form has a nonzero residual part: " + residual_text(beta3)
    return "0"


_CHECKS: dict[str, list[tuple[str, callable]]] = {
    "calculus": [
        ("calculus.mixed_partials", _check_mixed_partials),
        ("calculus.product_rule", _check_product_rule),
        ("calculus.evaluation_homomorphism", _check_eval_homomorphism),
        ("calculus.epsilon_delta_contraction", _check_epsilon_delta),
        ("calculus.curl_of_grad", _check_curl_grad),
        ("calculus.div_of_curl", _check_div_curl),
        ("calculus.compat_kills_strains", _check_compat_annihilates_strains),
        ("calculus.div_after_compat", _check_div_after_compat),
        ("calculus.compat_two_routes", _check_compat_two_routes),
        ("calculus.homotopy_inverts_grad", _check_homotopy_inverts_grad),
        ("calculus.homotopy_rejects_incompatible", _check_homotopy_rejects),
        ("calculus.random_field_deterministic", _check_random_field_deterministic),
        ("calculus.serialization_round_trip", _check_serialization_round_trip),
    ],
    "connection": [
        ("connection.curl_after_grad", _check_w_curl_after_grad),
        ("connection.div_after_curl", _check_w_div_after_curl),
        ("connection.flat_sections_in_kernel", _check_flat_sections_in_kernel),
        ("connection.flat_sections_independent", _check_flat_sections_independent),
        ("connection.poincare_inverts_grad", _check_poincare_inverts),
        ("connection.poincare_rejects_incompatible", _check_poincare_rejects),
        ("connection.saint_venant_round_trip", _check_saint_venant_round_trip),
        ("connection.saint_venant_rejects_incompatible", _check_saint_venant_rejects),
        ("connection.normalize_rigid_gauge", _check_normalize_rigid_gauge),
        ("connection.rigid_motions_are_flat", _check_rigid_motions_flat),
    ],
    "riemannian": [
        ("riemannian.metric_jet_inverse", _check_metric_jet_inverse),
        ("riemannian.einstein_matches_compat", _check_einstein_matches_compat),
        ("riemannian.einstein_kills_strains", _check_einstein_kills_strains),
        ("riemannian.bianchi_linearized", _check_bianchi_linearized),
        ("riemannian.einstein_trace_identity", _check_einstein_trace),
        ("riemannian.flat_pullback_pointwise", _check_flat_pullback_pointwise),
        ("riemannian.curvature_example", _check_curvature_example),
    ],
    "complex": [
        ("complex.grad_curl_div_exact", _check_gcd_complex),
        ("complex.elasticity_exact", _check_elasticity_complex),
        ("complex.elasticity_kernel_rigid", _check_elasticity_kernel),
        ("complex.coupled_exact", _check_coupled_complex),
        ("complex.coupled_kernel_flat", _check_coupled_kernel),
        ("complex.derivation_matches_hand_coded", _check_derivation),
        ("complex.matrix_operator_agreement", _check_matrix_operator_agreement),
        ("complex.lambda2_split", _check_lambda2_split),
    ],
}


def check_names(suite: str = "all") -> list[str]:
    suites = SUITE_NAMES if suite == "all" else (suite,)
    names = []
    for s in suites:
        names.extend(name for name, _ in _CHECKS[s])
    return sorted(names)


def run_suite(config: SuiteConfig) -> VerificationReport:
    """Run every check of the configured suite and collect exact residuals."""
    if config.suite != "all" and config.suite not in _CHECKS:
        raise ValueError(f"unknown suite {config.suite!r}; expected one of "
                         f"{SUITE_NAMES + ('all',)}")
    if config.degree < 1:
        raise ValueError("degree must be >= 1")
    if config.trials < 1:
        raise ValueError("trials must be >= 1")
    suites = SUITE_NAMES if config.suite == "all" else (config.suite,)
    pairs = []
    for s in suites:
        pairs.extend(_CHECKS[s])
    pairs.sort(key=lambda item: item[0])

    records = []
    for name, fn in pairs:
        start = time.perf_counter()
        residual = fn(config)
        if config.corrupt == name and residual == "0":
            residual = "1 (forced by the corruption hook)"
        elapsed = time.perf_counter() - start
        status = "pass" if residual == "0" else "fail"
        records.append(CheckRecord(name=name, status=status,
                                   residual=residual, elapsed=elapsed))
    return VerificationReport(config=config, records=records)
