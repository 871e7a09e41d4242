from fractions import Fraction

import pytest

from strainkit.calculus import (curl, curl_col, curl_curl, curl_curl_direct,
                                curl_row, div, div_sym, grad,
                                homotopy_antiderivative, sym_grad)
from strainkit.errors import CompatibilityError
from strainkit.fields import (AXES, Mat3Field, SymField, VecField,
                              random_field)
from strainkit.poly import ONE, X1, X2, X3, Poly3

ORIGIN = (Fraction(0), Fraction(0), Fraction(0))


def test_grad_explicit():
    f = X1 * X2 * X2 + 3 * X3
    g = grad(f)
    assert g.comp(1) == X2 * X2
    assert g.comp(2) == 2 * X1 * X2
    assert g.comp(3) == Poly3.constant(3)


def test_curl_explicit():
    # curl of (0, 0, x1*x2) is (x1, -x2, 0)
    x = VecField.of(0, 0, X1 * X2)
    c = curl(x)
    assert c.comp(1) == X1
    assert c.comp(2) == -X2
    assert c.comp(3).is_zero()


def test_div_explicit():
    x = VecField.of(X1 * X1, X2 * X3, X3)
    assert div(x) == 2 * X1 + X3 + 1


def test_curl_of_grad_zero():
    for seed in range(25):
        f = random_field("scalar", 5, seed)
        assert curl(grad(f)).is_zero()


def test_div_of_curl_zero():
    for seed in range(25):
        x = random_field("vec", 5, seed + 100)
        assert div(curl(x)).is_zero()


def test_sym_grad_definition():
    for seed in range(10):
        x = random_field("vec", 4, seed + 200)
        s = sym_grad(x)
        for i in AXES:
            for j in AXES:
                want = (x.comp(j).partial(i) + x.comp(i).partial(j)) / 2
                assert s.entry(i, j) == want


def test_curl_row_and_col_are_transposes():
    for seed in range(10):
        m = random_field("mat", 4, seed + 300)
        assert curl_row(m).transpose() == curl_col(m.transpose())
        assert curl_col(m).transpose() == curl_row(m.transpose())


def test_compat_annihilates_symmetric_gradients():
    for seed in range(25):
        x = random_field("vec", 5, seed + 400)
        assert curl_curl(sym_grad(x)).is_zero()


def test_compat_two_routes_agree():
    for seed in range(25):
        s = random_field("sym", 5, seed + 500)
        assert curl_curl(s) == curl_curl_direct(s)


def test_compat_is_symmetric():
    for seed in range(10):
        s = random_field("sym", 4, seed + 600)
        t = curl_curl(s)
        for i in AXES:
            for j in AXES:
                assert t.entry(i, j) == t.entry(j, i)


def test_compat_frozen_example():
    # diag(x2^2, 0, 0) has exactly one nonzero compatibility entry: (3,3) = 2
    s = SymField.unit(1, 1, X2 * X2)
    t = curl_curl(s)
    assert t.entry(3, 3) == Poly3.constant(2)
    for i in AXES:
        for j in AXES:
            if (i, j) != (3, 3):
                assert t.entry(i, j).is_zero()


def test_div_sym_after_compat_zero():
    for seed in range(25):
        s = random_field("sym", 5, seed + 700)
        assert div_sym(curl_curl(s)).is_zero()


def test_div_sym_definition():
    for seed in range(10):
        s = random_field("sym", 4, seed + 800)
        d = div_sym(s)
        for j in AXES:
            want = sum((s.entry(i, j).partial(i) for i in AXES), Poly3())
            assert d.comp(j) == want


def test_homotopy_inverts_grad():
    for seed in range(20):
        f = random_field("scalar", 5, seed + 900)
        g = homotopy_antiderivative(grad(f))
        assert g == f - Poly3.constant(f.evaluate(ORIGIN))


def test_homotopy_explicit_value():
    # x = grad of (x1^2 x2): (2 x1 x2, x1^2, 0)
    x = VecField.of(2 * X1 * X2, X1 * X1, Poly3())
    assert homotopy_antiderivative(x) == X1 * X1 * X2


def test_homotopy_rejects_incompatible():
    x = VecField.of(-X2, X1, Poly3())  # curl = (0, 0, 2)
    with pytest.raises(CompatibilityError) as info:
        homotopy_antiderivative(x)
    residual = info.value.residual
    assert residual == curl(x)
    assert residual.comp(3) == Poly3.constant(2)


def test_grad_returns_fresh_objects():
    f = X1 * X2
    g1 = grad(f)
    g2 = grad(f)
    assert g1 == g2
