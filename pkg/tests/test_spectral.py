import numpy as np
import pytest

import polytrans.spectral as sp
import polytrans.transforms as tf
from polytrans.model import SignalModel, chebyshev_basis, monomial_basis, shift_matrix
from polytrans.poly import Polynomial, boundary_polynomial, cheb_poly


def test_crt_base_change_splits_cyclic_module():
    # x^2 - 1 = (x - 1)(x + 1): base change maps coordinates to the two
    # one-dimensional residues, i.e. evaluation at +-1
    p = Polynomial([-1, 0, 1])
    B = sp.crt_base_change(p, [Polynomial([-1, 1]), Polynomial([1, 1])],
                           monomial_basis(), [monomial_basis(), monomial_basis()])
    assert np.allclose(B, [[1, 1], [1, -1]])


def test_crt_base_change_validates_factors():
    p = Polynomial([-1, 0, 1])
    with pytest.raises(ValueError):
        sp.crt_base_change(p, [Polynomial([-1, 1])], monomial_basis(),
                           [monomial_basis(), monomial_basis()])
    with pytest.raises(ValueError):
        sp.crt_base_change(p, [Polynomial([-1, 1]), Polynomial([-1, 1])],
                           monomial_basis(), [monomial_basis(), monomial_basis()])


def test_frequency_response_and_diagonalization():
    t = tf.generate("dct2:6")
    m = t.model
    h = Polynomial([0.3, -1.2, 0.5])
    rep = sp.check_diagonalization(np.asarray(t.entries), m, h)
    assert rep.ok and rep.residual < 1e-10
    assert np.allclose(rep.diagonal, sp.frequency_response(m, h))


def test_convolution_paths_agree():
    t = tf.generate("dst3:6")
    h = Polynomial([1.0, 0.5, -0.25])
    s = np.arange(6, dtype=float)
    assert sp.convolution_residual(t.model, np.asarray(t.entries, complex), h, s) < 1e-12


def test_xshape_masks_and_residuals():
    m = sp.xshape_mask(4, "paired")
    assert m[1, 3] and m[0, 0] and not m[1, 2]
    a = sp.xshape_mask(4, "anti")
    assert a[0, 3] and a[1, 2]
    with pytest.raises(ValueError):
        sp.xshape_mask(4, "weird")
    M = np.eye(4); M[0, 2] = 1.0
    assert sp.xshape_residual(M, "anti") == 1.0
    assert sp.offdiag_residual(np.diag([1.0, 2.0])) == 0.0


def test_block_diag_residual():
    M = np.eye(4); M[0, 3] = 0.5
    assert sp.block_diag_residual(M, [2, 2]) == 0.5
    assert sp.block_diag_residual(M, [4]) == 0.0
    with pytest.raises(ValueError):
        sp.block_diag_residual(M, [3])


def test_orthogonality_residual_complex():
    F = tf.dft_matrix(1, 5) / np.sqrt(5)
    assert sp.orthogonality_residual(F) < 1e-12
