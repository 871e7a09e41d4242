"""First- and second-order differential operators on polynomial fields.

All operators are exact: coefficients stay rational and no truncation ever
occurs.  The second-order compatibility operator on symmetric fields is
computed by two distinct routes (an iterated first-order recipe and a direct
double-contraction formula); their agreement is a test target, so the two
implementations are deliberately kept independent.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import CompatibilityError
from .fields import AXES, Mat3Field, SymField, VecField, eps
from .poly import Poly3, poly_from_terms


def grad(f: Poly3) -> VecField:
    """Gradient of a scalar field."""
    return VecField(tuple(f.partial(i) for i in AXES))


def curl(x: VecField) -> VecField:
    """(curl X)_i = eps_i^{jk} d_j X_k."""
    return VecField.of(
        x.comp(3).partial(2) - x.comp(2).partial(3),
        x.comp(1).partial(3) - x.comp(3).partial(1),
        x.comp(2).partial(1) - x.comp(1).partial(2),
    )


def div(x: VecField) -> Poly3:
    return x.comp(1).partial(1) + x.comp(2).partial(2) + x.comp(3).partial(3)


def sym_grad(x: VecField) -> SymField:
    """Symmetrized gradient: Sigma_ij = (d_i X_j + d_j X_i) / 2."""
    return SymField.from_entries(
        lambda i, j: (x.comp(j).partial(i) + x.comp(i).partial(j)) / 2)


def curl_row(m: Mat3Field) -> Mat3Field:
    """Curl applied along rows: treat each column as a vector field.

    (curl_row M)_{il} = eps_i^{jk} d_j M_{kl}.
    """
    cols = [curl(m.column(l)) for l in AXES]
    return Mat3Field.from_entries(lambda i, l: cols[l - 1].comp(i))


def curl_col(m: Mat3Field) -> Mat3Field:
    """Curl applied along columns: treat each row as a vector field.

    (curl_col M)_{il} = eps_l^{jk} d_j M_{ik}.
    """
    rows = [curl(m.row(i)) for i in AXES]
    return Mat3Field.from_entries(lambda i, l: rows[i - 1].comp(l))


def curl_curl(sigma: SymField) -> SymField:
    """Row-curl followed by column-curl of a symmetric field.

    The intermediate matrix is generally not symmetric, but the final result
    must be; that is asserted rather than assumed.
    """
    out = curl_col(curl_row(sigma.as_matrix()))
    if not out.is_symmetric():
        raise AssertionError("curl_col(curl_row(.)) of a symmetric field must be symmetric")
    return SymField.from_entries(out.entry)


def curl_curl_direct(sigma: SymField) -> SymField:
    """Direct double contraction: eps_i^{km} eps_j^{ln} d_k d_l Sigma_{mn}.

    Kept separate from curl_curl on purpose; exact agreement of the two
    routes is a verification target, not an implementation shortcut.
    """
    def entry(i: int, j: int) -> Poly3:
        total = Poly3()
        for k in AXES:
            for m in AXES:
                e1 = eps(i, k, m)
                if not e1:
                    continue
                for l in AXES:
                    for n in AXES:
                        e2 = eps(j, l, n)
                        if not e2:
                            continue
                        total = total + sigma.entry(m, n).partial(k).partial(l) * (e1 * e2)
        return total

    return SymField.from_entries(entry)


def div_sym(s: SymField) -> VecField:
    """Row divergence of a symmetric field: component j is d^i S_{ij}."""
    return VecField(tuple(
        sum((s.entry(i, j).partial(i) for i in AXES), Poly3()) for j in AXES))


def homotopy_antiderivative(x: VecField) -> Poly3:
    """Scalar potential of a curl-free field, vanishing at the origin.

    Implements the radial homotopy f(x) = Int_0^1 sum_i x_i X_i(t x) dt: a
    monomial contribution of total degree d picks up a factor 1/d.  Requires
    curl X = 0 exactly; otherwise a CompatibilityError carrying the curl
    residual is raised.
    """
    residual = curl(x)
    if not residual.is_zero():
        raise CompatibilityError("field is not curl-free", residual=residual)
    pairs = []
    for i in AXES:
        for exp, coef in x.comp(i).terms.items():
            lifted = list(exp)
            lifted[i - 1] += 1
            d = exp[0] + exp[1] + exp[2] + 1
            pairs.append((tuple(lifted), coef * Fraction(1, d)))
    return poly_from_terms(pairs)
