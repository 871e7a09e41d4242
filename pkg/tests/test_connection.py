from fractions import Fraction

import pytest

from strainkit.calculus import curl_curl, sym_grad
from strainkit.connection import (WField, WOneForm, flat_sections_basis,
                                  normalize_rigid, random_w_field,
                                  random_w_one_form, rigid_motion,
                                  saint_venant_reconstruct, w_curl, w_div,
                                  w_grad, w_poincare)
from strainkit.errors import CompatibilityError
from strainkit.fields import AXES, Mat3Field, SymField, VecField, random_field
from strainkit.poly import X1, X2, X3, Poly3

ORIGIN = (Fraction(0), Fraction(0), Fraction(0))


def test_w_grad_components():
    f = random_w_field(3, 0)
    form = w_grad(f)
    from strainkit.fields import eps
    for j in AXES:
        for l in AXES:
            coupling = sum((Poly3.constant(eps(j, l, m)) * f.y.comp(m)
                            for m in AXES), Poly3())
            assert form.sigma.entry(j, l) == f.x.comp(l).partial(j) - coupling
            assert form.xi.entry(j, l) == f.y.comp(l).partial(j)


def test_w_curl_after_w_grad_zero():
    for seed in range(20):
        f = random_w_field(4, seed)
        assert w_curl(w_grad(f)).is_zero()


def test_w_div_after_w_curl_zero():
    for seed in range(20):
        psi = random_w_one_form(4, seed + 40)
        assert w_div(w_curl(psi)).is_zero()


def test_flat_sections_are_flat_and_six():
    basis = flat_sections_basis()
    assert len(basis) == 6
    for section in basis:
        assert w_grad(section).is_zero()
    # translations first: X constant, Y zero
    for m in range(3):
        assert basis[m].x == VecField.basis(m + 1)
        assert basis[m].y.is_zero()
    # then rotations: X = e_m cross x, Y = e_m
    for m in range(3):
        rot = basis[3 + m]
        assert rot.y == VecField.basis(m + 1)
        assert rot.x == rigid_motion((0, 0, 0), tuple(1 if k == m else 0
                                                      for k in range(3)))


def test_rigid_motion_formula():
    a = (Fraction(1), Fraction(-2), Fraction(1, 3))
    b = (Fraction(2), Fraction(0), Fraction(-1))
    v = rigid_motion(a, b)
    # component j is a_j + (b cross x)_j
    pt = (Fraction(1, 2), Fraction(3), Fraction(-1))
    cross = (b[1] * pt[2] - b[2] * pt[1],
             b[2] * pt[0] - b[0] * pt[2],
             b[0] * pt[1] - b[1] * pt[0])
    assert v.evaluate(pt) == tuple(a[k] + cross[k] for k in range(3))
    assert sym_grad(v).is_zero()


def test_w_poincare_round_trip():
    for seed in range(12):
        f = random_w_field(4, seed + 80)
        form = w_grad(f)
        g = w_poincare(form)
        again = w_grad(g)
        assert (again.sigma - form.sigma).is_zero()
        assert (again.xi - form.xi).is_zero()
        # the ambiguity is exactly a flat section
        dx, dy = f.x - g.x, f.y - g.y
        assert dy.degree <= 0
        assert sym_grad(dx).is_zero()


def test_w_poincare_rejects_non_closed():
    # column 2 of sigma is (x2, 0, 0), which is not a gradient
    psi = WOneForm(Mat3Field.unit(1, 2, X2), Mat3Field.zero())
    assert not w_curl(psi).is_zero()
    with pytest.raises(CompatibilityError):
        w_poincare(psi)


def test_saint_venant_round_trip():
    for seed in range(20):
        u = random_field("vec", 5, seed + 120)
        strain = sym_grad(u)
        v = saint_venant_reconstruct(strain)
        assert sym_grad(v) == strain


def test_saint_venant_frozen_example():
    # off-diagonal strain x2 integrates to the displacement (x2^2, 0, 0)
    strain = SymField.unit(1, 2, X2)
    v = normalize_rigid(saint_venant_reconstruct(strain))
    assert v == VecField.of(X2 * X2, Poly3(), Poly3())


def test_saint_venant_rejects_incompatible():
    strain = SymField.unit(1, 1, X2 * X2)
    with pytest.raises(CompatibilityError) as info:
        saint_venant_reconstruct(strain)
    assert info.value.residual == curl_curl(strain)
    assert info.value.residual.entry(3, 3) == Poly3.constant(2)


def test_normalized_reconstruction_matches_normalized_input():
    for seed in range(20):
        u = random_field("vec", 5, seed + 160)
        v = saint_venant_reconstruct(sym_grad(u))
        assert normalize_rigid(v) == normalize_rigid(u)


def test_normalize_rigid_gauge_conditions():
    for seed in range(12):
        u = random_field("vec", 4, seed + 200)
        shifted = u + rigid_motion((Fraction(5), Fraction(-1, 2), Fraction(7)),
                                   (Fraction(1, 3), Fraction(2), Fraction(-4)))
        v = normalize_rigid(shifted)
        assert v.evaluate(ORIGIN) == (0, 0, 0)
        jac = Mat3Field.from_entries(lambda i, j: v.comp(j).partial(i))
        skew = jac.skew_part()
        for i in AXES:
            for j in AXES:
                assert skew.entry(i, j).evaluate(ORIGIN) == 0
        assert sym_grad(v) == sym_grad(u)


def test_normalize_rigid_idempotent():
    for seed in range(8):
        u = random_field("vec", 4, seed + 240)
        v = normalize_rigid(u)
        assert normalize_rigid(v) == v


def test_w_field_random_deterministic():
    assert random_w_field(3, 5) == random_w_field(3, 5)
    a = random_w_one_form(3, 5)
    b = random_w_one_form(3, 5)
    assert (a.sigma - b.sigma).is_zero() and (a.xi - b.xi).is_zero()


def test_w_structures_zero_and_arithmetic():
    z = WField.zero()
    assert z.is_zero()
    f = random_w_field(2, 9)
    assert (f - f).is_zero()
    assert (f + z).x == f.x
    psi = random_w_one_form(2, 9)
    assert (psi - psi).is_zero()
