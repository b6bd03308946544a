from fractions import Fraction

import numpy as np
import pytest

from polytrans.poly import Polynomial, boundary_polynomial, cheb_poly
from polytrans.model import (
    BasisSpec,
    NoPastError,
    SignalModel,
    chebyshev_basis,
    coords_in_basis,
    extension,
    extension_period,
    filter_matrix,
    model_from_matrix,
    monomial_basis,
    shift_matrix,
    subalgebra_of,
    symmetrizing_scales,
    visualize,
)


def cyclic_model(n, a=1):
    p = Polynomial([-a] + [0] * (n - 1) + [1])
    return SignalModel(p, monomial_basis())


def test_basis_validation():
    with pytest.raises(ValueError):
        BasisSpec("nope")
    with pytest.raises(ValueError):
        BasisSpec("chebyshev", "Q")
    with pytest.raises(ValueError):
        BasisSpec("custom", elements=(Polynomial.x(),))  # not graded


def test_coords_round_trip():
    n = 5
    basis = chebyshev_basis("V")
    s = Polynomial([1, -2, 3, 0, 5])
    coords = coords_in_basis(s, basis, n)
    rebuilt = Polynomial.zero()
    for k, c in enumerate(coords):
        rebuilt = rebuilt + c * basis.element(k)
    assert rebuilt.coeffs == s.coeffs


def test_shift_matrix_time_model():
    m = cyclic_model(4)
    S = shift_matrix(m)
    expect = np.roll(np.eye(4), 1, axis=0)
    assert np.allclose(S, expect)


def test_shift_matrix_space_model():
    # half-shift cosine model: tridiagonal halves with boundary self-loops
    m = SignalModel(boundary_polynomial("V", "hs", 4), chebyshev_basis("V"))
    S = shift_matrix(m)
    expect = 0.5 * (np.diag(np.ones(3), 1) + np.diag(np.ones(3), -1))
    expect[0, 0] = expect[3, 3] = 0.5
    assert np.allclose(S, expect)


def test_filter_matrix_is_polynomial_in_shift():
    m = SignalModel(boundary_polynomial("T", "wa", 5), chebyshev_basis("T"))
    h = Polynomial([1, 2, 0, -1])
    S = shift_matrix(m)
    H = filter_matrix(m, h)
    horner = np.zeros((5, 5))
    for c in reversed(h.as_floats()):
        horner = horner @ S + c * np.eye(5)
    assert np.allclose(H, horner)


def test_symmetrizing_scales():
    m = SignalModel(boundary_polynomial("T", "wa", 5), chebyshev_basis("T"))
    d = symmetrizing_scales(m)
    A = np.diag(d) @ shift_matrix(m) @ np.diag(1 / d)
    assert np.abs(A - A.T).max() < 1e-12
    assert d[2] == 1.0   # interior stays unit scale


def test_extension_monomial_and_no_past():
    m = cyclic_model(4, a=2)
    assert extension(m, 6) == [0, 0, Fraction(2), 0]
    assert extension(m, -1) == [0, 0, 0, Fraction(1, 2)]
    bad = SignalModel(Polynomial([0, 0, 1]), monomial_basis())  # x^2
    with pytest.raises(NoPastError):
        extension(bad, -1)


def test_extension_period():
    m = cyclic_model(6)
    assert extension_period(m) == 6
    m2 = SignalModel(boundary_polynomial("V", "hs", 4), chebyshev_basis("V"))
    assert extension_period(m2) == 8   # 2n
    aperiodic = cyclic_model(4, a=2)
    assert extension_period(aperiodic) is None


def test_visualize_dot():
    m = SignalModel(boundary_polynomial("V", "hs", 3), chebyshev_basis("V"))
    dot = visualize(m).to_dot()
    assert dot.startswith("graph")           # symmetric -> undirected
    assert "--" in dot and "0.5" in dot
    d2 = visualize(cyclic_model(3)).to_dot()
    assert d2.startswith("digraph") and "->" in d2


def test_visualize_product_labels():
    m = SignalModel(boundary_polynomial("V", "hs", 2), chebyshev_basis("V"))
    g = visualize([m, m])
    assert g.adjacency.shape == (4, 4)
    assert g.labels == ("0,0", "0,1", "1,0", "1,1")


def test_model_from_matrix_classification():
    S = shift_matrix(cyclic_model(4))
    c = model_from_matrix(S)
    assert c.kind == "regular"
    assert np.allclose(c.p.as_floats(), [-1, 0, 0, 0, 1])
    c2 = model_from_matrix(np.diag([1.0, 1.0]))
    assert c2.kind == "nonregular"
    J2 = np.array([[1.0, 1, 0, 0], [0, 1, 0, 0], [0, 0, 1, 1], [0, 0, 0, 1]])
    assert model_from_matrix(J2).kind == "unrealizable"


def test_subalgebra_dimension():
    p = Polynomial([-1, 0, 0, 0, 0, 0, 1])          # x^6 - 1
    q = (Polynomial.monomial(5) + Polynomial.x()) * Fraction(1, 2)
    rep = subalgebra_of(p, q)
    assert rep.dimension == 4 == rep.rank_dimension  # n/2 + 1
    assert not rep.injective
    full = subalgebra_of(p, Polynomial.x())
    assert full.dimension == 6 and full.injective
