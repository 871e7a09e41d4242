from fractions import Fraction

import pytest
import sympy

from strainkit.calculus import curl_curl, sym_grad
from strainkit.errors import SingularMetricError
from strainkit.fields import AXES, Mat3Field, SymField, random_field
from strainkit.poly import ONE, X1, X2, X3, Poly3
from strainkit.riemannian import (ChristoffelJet, CurvatureJet, JetPoly,
                                  MetricJet, PolyMetric, bianchi_check,
                                  christoffel_jet, jet_inverse,
                                  linearized_einstein, pointwise_curvature,
                                  ricci_jet)

SX = sympy.symbols("x1 x2 x3")


def to_sympy(p: Poly3):
    expr = sympy.Integer(0)
    for exp, coef in p.terms.items():
        term = sympy.Rational(coef.numerator, coef.denominator)
        for s, a in zip(SX, exp):
            term *= s ** a
        expr += term
    return sympy.expand(expr)


def sympy_ricci(g: sympy.Matrix):
    """Independent nonlinear Ricci in the sign convention used here.

    R_ij = d_i Gamma_jk^k - d_k Gamma_ij^k + Gamma_ik^m Gamma_jm^k
           - Gamma_ij^m Gamma_mk^k, with the usual metric Christoffels.
    Entries are left unsimplified; callers substitute and then reduce.
    """
    ginv = g.adjugate() / g.det()
    idx = range(3)

    def gamma(i, j, k):
        return sympy.Rational(1, 2) * sum(
            ginv[k, l] * (sympy.diff(g[j, l], SX[i])
                          + sympy.diff(g[i, l], SX[j])
                          - sympy.diff(g[i, j], SX[l]))
            for l in idx)

    gam = [[[gamma(i, j, k) for k in idx] for j in idx] for i in idx]

    def ricci(i, j):
        term1 = sum(sympy.diff(gam[j][k][k], SX[i]) for k in idx)
        term2 = sum(sympy.diff(gam[i][j][k], SX[k]) for k in idx)
        term3 = sum(gam[i][k][m] * gam[j][m][k] for k in idx for m in idx)
        term4 = sum(gam[i][j][m] * gam[m][k][k] for k in idx for m in idx)
        return term1 - term2 + term3 - term4

    return sympy.Matrix(3, 3, lambda i, j: ricci(i, j))


def sym_to_sympy(s: SymField) -> sympy.Matrix:
    return sympy.Matrix(3, 3, lambda i, j: to_sympy(s.entry(i + 1, j + 1)))


def test_jet_arithmetic_truncates():
    a = JetPoly(X1, X2)
    b = JetPoly(X2, ONE)
    prod = a * b
    assert prod.p0 == X1 * X2
    assert prod.p1 == X1 * ONE + X2 * X2  # cross terms only; eps^2 drops
    assert (a - a).is_zero()
    assert a.partial(2).p0.is_zero()
    assert a.partial(2).p1 == ONE


def test_metric_jet_requires_flat_background():
    with pytest.raises(ValueError):
        MetricJet(tuple(tuple(JetPoly(X1 if i == j else Poly3(), Poly3())
                              for j in AXES) for i in AXES))


def test_metric_jet_strain_round_trip():
    sigma = random_field("sym", 3, 11)
    g = MetricJet.from_strain(sigma)
    assert g.strain() == sigma
    for i in AXES:
        for j in AXES:
            assert g.entry(i, j).p0 == (ONE if i == j else Poly3())
            assert g.entry(i, j).p1 == sigma.entry(i, j)


def test_jet_inverse_is_two_sided():
    for seed in range(8):
        sigma = random_field("sym", 3, seed + 20)
        g = MetricJet.from_strain(sigma)
        ginv = jet_inverse(g)
        for i in AXES:
            for j in AXES:
                # first-order inverse flips the sign of the strain
                assert ginv.entry(i, j).p1 == -sigma.entry(i, j)


def test_christoffel_background_vanishes():
    sigma = random_field("sym", 3, 31)
    gamma = christoffel_jet(MetricJet.from_strain(sigma))
    for i in AXES:
        for j in AXES:
            for k in AXES:
                assert gamma.entry(i, j, k).p0.is_zero()
                assert gamma.entry(i, j, k) == gamma.entry(j, i, k)


def test_christoffel_against_sympy():
    sigma = random_field("sym", 2, 37)
    gamma = christoffel_jet(MetricJet.from_strain(sigma))
    t = sympy.Symbol("t")
    g = sympy.eye(3) + t * sym_to_sympy(sigma)
    ginv = g.adjugate() / g.det()
    for i in range(3):
        for j in range(3):
            for k in range(3):
                expr = sympy.Rational(1, 2) * sum(
                    ginv[k, l] * (sympy.diff(g[j, l], SX[i])
                                  + sympy.diff(g[i, l], SX[j])
                                  - sympy.diff(g[i, j], SX[l]))
                    for l in range(3))
                first = sympy.cancel(sympy.diff(expr, t).subs(t, 0))
                ours = to_sympy(gamma.entry(i + 1, j + 1, k + 1).p1)
                assert sympy.expand(first - ours) == 0


def test_curvature_jet_defining_relation_enforced():
    sigma = random_field("sym", 2, 41)
    curv = ricci_jet(MetricJet.from_strain(sigma))
    bad = tuple(tuple(curv.einstein[i][j] + JetPoly(Poly3(), ONE)
                      for j in range(3)) for i in range(3))
    with pytest.raises(ValueError):
        CurvatureJet(metric=curv.metric, ricci=curv.ricci,
                     scalar=curv.scalar, einstein=bad)


def test_linearized_einstein_equals_compat():
    for seed in range(15):
        sigma = random_field("sym", 4, seed + 50)
        assert linearized_einstein(sigma) == curl_curl(sigma)


def test_linearized_einstein_against_sympy():
    # full nonlinear Einstein in sympy, derivative in the perturbation at 0;
    # after substituting t = 0 all denominators become det(identity) = 1
    t = sympy.Symbol("t")
    strains = [random_field("sym", 1, 3), random_field("sym", 1, 8),
               SymField.unit(1, 1, X2 * X2)]
    for which, sigma in enumerate(strains):
        g = sympy.eye(3) + t * sym_to_sympy(sigma)
        ric = sympy_ricci(g)
        # Ricci of the background vanishes, so at first order the scalar is
        # the plain trace and the Einstein entry needs no metric factor
        ric1 = sympy.Matrix(3, 3, lambda i, j: sympy.cancel(
            sympy.diff(ric[i, j], t).subs(t, 0)))
        scal1 = ric1.trace()
        einstein1 = scal1 * sympy.eye(3) - 2 * ric1
        ours = linearized_einstein(sigma)
        for i in range(3):
            for j in range(3):
                diff = sympy.expand(
                    einstein1[i, j] - to_sympy(ours.entry(i + 1, j + 1)))
                assert diff == 0, (which, i, j)


def test_linearized_einstein_kills_strains():
    for seed in range(10):
        u = random_field("vec", 4, seed + 70)
        assert linearized_einstein(sym_grad(u)).is_zero()


def test_bianchi_residual_zero():
    for seed in range(10):
        sigma = random_field("sym", 5, seed + 90)
        assert bianchi_check(sigma).is_zero()


def test_pointwise_frozen_example():
    metric = PolyMetric.from_matrix(Mat3Field.from_entries(
        lambda i, j: ONE + X1 * X1 if i == j == 3 else (ONE if i == j else Poly3())))
    values = pointwise_curvature(metric, (Fraction(0),) * 3)
    assert values.ricci == ((1, 0, 0), (0, 0, 0), (0, 0, 1))
    assert values.scalar == 2
    assert values.einstein == ((0, 0, 0), (0, 2, 0), (0, 0, 0))


def test_pointwise_against_sympy():
    cases = [
        (Mat3Field.from_entries(
            lambda i, j: ONE + X1 * X1 if i == j == 3 else (ONE if i == j else Poly3())),
         (Fraction(1, 2), Fraction(-3), Fraction(7, 5))),
        (Mat3Field.from_entries(
            lambda i, j: {(1, 1): 2 * ONE, (2, 2): ONE + X2 * X2,
                          (3, 3): 3 * ONE, (1, 2): X3, (2, 1): X3}.get(
                              (i, j), Poly3())),
         (Fraction(1, 3), Fraction(1), Fraction(-1))),
    ]
    for mat, point in cases:
        metric = PolyMetric.from_matrix(mat)
        values = pointwise_curvature(metric, point)
        g = sympy.Matrix(3, 3, lambda i, j: to_sympy(mat.entry(i + 1, j + 1)))
        subs = dict(zip(SX, [sympy.Rational(c.numerator, c.denominator)
                             for c in point]))
        ric = sympy_ricci(g)
        for i in range(3):
            for j in range(3):
                want = sympy.cancel(ric[i, j].subs(subs))
                got = values.ricci[i][j]
                assert sympy.Rational(got.numerator, got.denominator) == want


def test_pointwise_euclidean_zero():
    metric = PolyMetric.euclidean()
    values = pointwise_curvature(metric, (Fraction(5), Fraction(-2, 7), Fraction(3)))
    assert values.ricci_is_zero()
    assert values.scalar == 0


def test_pullback_metrics_are_flat():
    maps = [
        [X1 + X2 * X2, X2, X3],
        [X1, X2 + X1 * X3, X3],
        [X1 + X2 * X3, X2 + X3 * X3 * X3, X3],
    ]
    points = [(Fraction(1, 3), Fraction(2), Fraction(-1)),
              (Fraction(0), Fraction(0), Fraction(0)),
              (Fraction(-5, 2), Fraction(1, 7), Fraction(4))]
    for phi in maps:
        metric = PolyMetric.from_map_jacobian(phi)
        for point in points:
            values = pointwise_curvature(metric, point)
            assert values.ricci_is_zero()
            assert values.scalar == 0
            assert all(v == 0 for row in values.einstein for v in row)


def test_pointwise_singular_metric_raises():
    metric = PolyMetric.from_matrix(Mat3Field.from_entries(
        lambda i, j: X1 if i == j else Poly3()))
    with pytest.raises(SingularMetricError):
        pointwise_curvature(metric, (Fraction(0),) * 3)


def test_einstein_trace_is_scalar():
    for seed in range(6):
        sigma = random_field("sym", 3, seed + 110)
        curv = ricci_jet(MetricJet.from_strain(sigma))
        trace = sum((curv.einstein[k][k] for k in range(3)),
                    curv.scalar - curv.scalar)
        assert (trace - curv.scalar).is_zero()
