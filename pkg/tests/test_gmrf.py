import numpy as np
import pytest

import polytrans.gmrf as gm
import polytrans.transforms as tf
from polytrans.model import shift_matrix


def tridiag(n, w=0.25):
    return w * (np.diag(np.ones(n - 1), 1) + np.diag(np.ones(n - 1), -1))


def test_model_validation():
    with pytest.raises(ValueError):
        gm.GmrfModel(np.zeros((3, 3)), sigma2=-1.0)
    with pytest.raises(ValueError):
        gm.GmrfModel(np.zeros((3, 3)), case="weird")
    with pytest.raises(gm.RankError):
        gm.GmrfModel(np.eye(3))                     # I - A singular
    with pytest.raises(ValueError):
        gm.GmrfModel(np.triu(np.ones((3, 3)), 1), case="sym-posdef")
    with pytest.raises(ValueError):
        gm.GmrfModel(2 * np.eye(3) - np.eye(3) * 0 + np.diag([2.0, 0, 0]),
                     case="sym-posdef")             # I - A indefinite


def test_covariance_cases():
    n = 6
    A = tridiag(n)
    for case in gm.CASES:
        m = gm.GmrfModel(A if case != "nonsym" else 0.5 * np.roll(np.eye(n), 1, 0),
                         1.5, case)
        S = gm.covariance(m)
        assert np.abs(S - S.T).max() == 0.0
        np.linalg.cholesky(S)                       # SPD
    m = gm.GmrfModel(np.zeros((4, 4)), 2.0)
    assert np.allclose(gm.covariance(m), 2.0 * np.eye(4))


def test_klt_properties():
    n = 6
    S = gm.covariance(gm.GmrfModel(tridiag(n)))
    F = gm.klt(S)
    assert np.abs(F @ F.T - np.eye(n)).max() < 1e-12
    D = F @ S @ F.T
    assert np.abs(D - np.diag(np.diag(D))).max() < 1e-12
    d = np.diag(D)
    assert np.all(np.diff(d) <= 1e-12)              # descending
    assert np.array_equal(gm.klt(np.eye(4)), np.eye(4))
    with pytest.raises(ValueError):
        gm.klt(np.triu(np.ones((3, 3))))


def test_normality():
    assert gm.normality(tridiag(5)).normal
    rep = gm.normality(np.roll(np.eye(5), 1, axis=0))
    assert rep.normal and rep.fit_residual < 1e-10
    assert abs(rep.q.as_floats()[-1] - 1.0) < 1e-8 and rep.q.degree == 4
    assert not gm.normality(np.eye(3) + np.diag([1.0, 1.0], 1)).normal


def test_klt_vs_fourier_forward_and_converse():
    t = tf.generate("dct2:8:variant=orthogonal")
    A = 0.5 * shift_matrix(t.model)
    m = gm.GmrfModel(A, 1.0, "sym-posdef")
    rep = gm.klt_vs_fourier(m, np.asarray(t.entries))
    assert rep.fourier_is_klt and rep.converse_injective


def test_klt_vs_fourier_counterexample():
    n = 8
    m = gm.GmrfModel(0.5 * np.roll(np.eye(n), 1, axis=0), 1.0, "nonsym")
    R = tf.generate(f"rdft1:{n}:variant=orthogonal").entries
    rep = gm.klt_vs_fourier(m, R)
    assert rep.fourier_is_klt                # it does diagonalize the covariance
    assert rep.converse_injective is False   # but the model's spectrum collides


def test_klt_vs_fourier_indefinite_distinct_squares():
    A = np.diag([-0.9, 0.3, 0.7])
    m = gm.GmrfModel(A, 1.0, "sym-indefinite")
    rep = gm.klt_vs_fourier(m, np.eye(3))
    assert rep.converse_injective


def test_stochastic_normalize():
    A = np.array([[0.0, 1.0], [2.0, 1.0]])
    res = gm.stochastic_normalize(A)
    assert res.feasible
    assert np.allclose(res.matrix.sum(axis=0), 1.0)
    bad = gm.stochastic_normalize(np.array([[0.5, -0.5], [0.5, 0.5]]))
    assert not bad.feasible and "negative" in bad.reason
    zero = gm.stochastic_normalize(np.array([[0.0, 1.0], [0.0, 1.0]]))
    assert not zero.feasible and "column 0" in zero.reason


def test_subspace_angle_detects_rotation():
    F = np.eye(4)
    G = np.eye(4)[[1, 0, 2, 3]]
    w = np.array([3.0, 3.0, 2.0, 1.0])      # first two eigenvalues tied
    assert gm.subspace_angle(F, G, w) < 1e-10
    w2 = np.array([4.0, 3.0, 2.0, 1.0])     # now the swap matters
    assert gm.subspace_angle(F, G, w2) > 1.0
