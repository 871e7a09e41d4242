"""A coupled flat connection on the rank-6 bundle R^3 (+) R^3.

Sections pair a displacement-like vector field X with an auxiliary rotation
field Y.  The connection couples the two summands through the alternating
tensor; its flat sections are exactly the infinitesimal rigid motions
a + b x x (in the X component).  Inverting the connection gradient recovers a
displacement field from a compatible strain.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .calculus import curl, curl_curl, curl_row, homotopy_antiderivative
from .errors import CompatibilityError
from .fields import (AXES, Mat3Field, SymField, VecField, axial_vector, delta,
                     eps, random_field, skew_from_axial)
from .poly import Poly3


@dataclass(frozen=True)
class WField:
    """Section (X, Y) of the coupled bundle."""

    x: VecField
    y: VecField

    @classmethod
    def zero(cls) -> "WField":
        return cls(VecField.zero(), VecField.zero())

    def __add__(self, other: "WField") -> "WField":
        return WField(self.x + other.x, self.y + other.y)

    def __sub__(self, other: "WField") -> "WField":
        return WField(self.x - other.x, self.y - other.y)

    def scaled(self, c) -> "WField":
        return WField(self.x.scaled(c), self.y.scaled(c))

    def is_zero(self) -> bool:
        return self.x.is_zero() and self.y.is_zero()


@dataclass(frozen=True)
class WOneForm:
    """Bundle-valued one-form: matrices (sigma, xi).

    Entry (j, l) carries form index j (the direction of differentiation) and
    bundle index l, i.e. rows are form indices and columns bundle indices.
    """

    sigma: Mat3Field
    xi: Mat3Field

    @classmethod
    def zero(cls) -> "WOneForm":
        return cls(Mat3Field.zero(), Mat3Field.zero())

    def __add__(self, other: "WOneForm") -> "WOneForm":
        return WOneForm(self.sigma + other.sigma, self.xi + other.xi)

    def __sub__(self, other: "WOneForm") -> "WOneForm":
        return WOneForm(self.sigma - other.sigma, self.xi - other.xi)

    def is_zero(self) -> bool:
        return self.sigma.is_zero() and self.xi.is_zero()


def w_grad(f: WField) -> WOneForm:
    """Connection gradient: (d_j X_l - eps_{jl}^m Y_m ; d_j Y_l)."""
    sigma = Mat3Field.from_entries(
        lambda j, l: f.x.comp(l).partial(j)
        - sum((f.y.comp(m) * eps(j, l, m) for m in AXES), Poly3()))
    xi = Mat3Field.from_entries(lambda j, l: f.y.comp(l).partial(j))
    return WOneForm(sigma, xi)


def w_curl(psi: WOneForm) -> WOneForm:
    """Connection curl of a one-form.

    First slot: eps_i^{jk} d_j Sigma_{kl} - Xi_{li} + delta_{il} tr(Xi); in
    matrix terms curl_row(Sigma) - Xi^T + delta tr(Xi).  Second slot:
    curl_row(Xi).
    """
    tr = psi.xi.trace()
    slot1 = curl_row(psi.sigma) - psi.xi.transpose() \
        + Mat3Field.from_entries(lambda i, l: tr * delta(i, l))
    slot2 = curl_row(psi.xi)
    return WOneForm(slot1, slot2)


def w_div(theta: WOneForm) -> WField:
    """Connection divergence: (d^j T1_{jl} - eps^j_l^m T2_{jm} ; d^j T2_{jl})."""
    slot1 = VecField(tuple(
        sum((theta.sigma.entry(j, l).partial(j) for j in AXES), Poly3())
        - sum((theta.xi.entry(j, m) * eps(j, l, m) for j in AXES for m in AXES), Poly3())
        for l in AXES))
    slot2 = VecField(tuple(
        sum((theta.xi.entry(j, l).partial(j) for j in AXES), Poly3())
        for l in AXES))
    return WField(slot1, slot2)


def rigid_motion(a, b) -> VecField:
    """The infinitesimal rigid motion x -> a + b x x with rational a, b."""
    a = [Fraction(v) for v in a]
    b = [Fraction(v) for v in b]
    x = [Poly3.variable(i) for i in AXES]

    def comp(j: int) -> Poly3:
        cross = Poly3()
        for k in AXES:
            for l in AXES:
                e = eps(j, k, l)
                if e:
                    cross = cross + x[l - 1] * (e * b[k - 1])
        return cross + a[j - 1]

    return VecField(tuple(comp(j) for j in AXES))


def flat_sections_basis() -> list[WField]:
    """Six flat sections: three translations, then three rotations.

    Translation m: X = e_m, Y = 0.  Rotation m: X_l = eps_{jl}^m x_j (which is
    e_m x x), Y = e_m.  Together their X components span all rigid motions.
    """
    basis = []
    for m in AXES:
        basis.append(WField(VecField.basis(m), VecField.zero()))
    for m in AXES:
        xl = VecField(tuple(
            sum((Poly3.variable(j) * eps(j, l, m) for j in AXES), Poly3())
            for l in AXES))
        basis.append(WField(xl, VecField.basis(m)))
    return basis


def w_poincare(psi: WOneForm) -> WField:
    """Primitive of a connection-closed one-form, vanishing at the origin.

    Requires w_curl(psi) = 0 exactly.  The Y component is recovered first by
    integrating the columns of xi; the X component then comes from the
    columns of A = sigma + eps . Y, which the closedness condition makes
    curl-free.
    """
    residual = w_curl(psi)
    if not residual.is_zero():
        raise CompatibilityError("one-form is not connection-closed", residual=residual)
    y = VecField(tuple(homotopy_antiderivative(psi.xi.column(l)) for l in AXES))
    corrected = Mat3Field.from_entries(
        lambda j, l: psi.sigma.entry(j, l)
        + sum((y.comp(m) * eps(j, l, m) for m in AXES), Poly3()))
    x = VecField(tuple(homotopy_antiderivative(corrected.column(l)) for l in AXES))
    return WField(x, y)


def saint_venant_reconstruct(sigma: SymField) -> VecField:
    """Displacement field whose symmetrized gradient is the given strain.

    Requires the compatibility condition curl_curl(sigma) = 0; on failure a
    CompatibilityError carrying that exact residual is raised.  The strain is
    paired with the derived rotation-gradient matrix to form a one-form
    that the closedness check below certifies, then integrated.  The result
    vanishes at the origin and has symmetric Jacobian there.
    """
    residual = curl_curl(sigma)
    if not residual.is_zero():
        raise CompatibilityError("strain violates the compatibility equations",
                                 residual=residual)
    # xi_{jl} = eps_l^{im} d_i Sigma_{mj}, the transposed row-curl.
    xi = curl_row(sigma.as_matrix()).transpose()
    psi = WOneForm(sigma.as_matrix(), xi)
    check = w_curl(psi)
    if not check.sigma.is_zero():
        raise AssertionError("first curl slot must vanish for symmetric input")
    if not (check.xi - curl_curl(sigma).as_matrix()).is_zero():
        raise AssertionError("second curl slot must equal the compatibility residual")
    return w_poincare(psi).x


def normalize_rigid(x: VecField) -> VecField:
    """Remove the rigid-motion part: zero value and skew Jacobian at origin.

    Two fields with the same symmetrized gradient differ by a rigid motion,
    so this fixes a canonical representative without changing sym_grad.
    """
    origin = (0, 0, 0)
    a = x.evaluate(origin)
    jac = [[x.comp(j).partial(i).evaluate(origin) for j in AXES] for i in AXES]
    # Axial vector of the skew Jacobian: S_ij = eps_{jki} b_k has b1 = S_23 etc.
    skew = [[(jac[i - 1][j - 1] - jac[j - 1][i - 1]) / 2 for j in AXES] for i in AXES]
    b = (skew[1][2], skew[2][0], skew[0][1])
    return x - rigid_motion(a, b)


def random_w_field(degree: int, seed: int) -> WField:
    """Deterministic random section, built from two seeded vector fields."""
    return WField(random_field("vec", degree, seed * 2 + 1),
                  random_field("vec", degree, seed * 2 + 2))


def random_w_one_form(degree: int, seed: int) -> WOneForm:
    """Deterministic random one-form, built from two seeded matrix fields."""
    return WOneForm(random_field("mat", degree, seed * 2 + 1),
                    random_field("mat", degree, seed * 2 + 2))
