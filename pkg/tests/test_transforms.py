import math
from fractions import Fraction

import numpy as np
import pytest

import polytrans.transforms as tf
from polytrans.model import chebyshev_basis, shift_matrix
from polytrans.poly import Polynomial


def test_parse_spec_grammar():
    s = tf.parse_spec("dct2:8")
    assert (s.family, s.n, s.variant, s.r) == ("dct2", 8, "unscaled", None)
    s = tf.parse_spec("dct4:3:r=1/3:variant=polynomial")
    assert s.r == Fraction(1, 3) and s.variant == "polynomial"
    s = tf.parse_spec("tensor(dct2:4,dst4:4)")
    assert s.family == "tensor" and len(s.factors) == 2
    assert str(s) == "tensor(dct2:4,dst4:4)"
    nested = tf.parse_spec("tensor(tensor(dct2:2,dct2:2),dft1:2)")
    assert nested.factors[0].family == "tensor"


@pytest.mark.parametrize("bad", ["nosuch:4", "dct2", "dct2:x", "dct2:4:r=2",
                                 "dct2:4:variant=banana", "dct2:4:zz=1"])
def test_parse_spec_rejects(bad):
    with pytest.raises(ValueError):
        tf.parse_spec(bad)


def test_dtt_known_entries():
    # half-shift cosine transform: cos(k(l+1/2)pi/n)
    n = 4
    M = tf.dtt_unscaled("dct2", n)
    for k in range(n):
        for ell in range(n):
            assert math.isclose(M[k, ell], math.cos(k * (ell + 0.5) * math.pi / n),
                                abs_tol=1e-14)


def test_cos_kernel_transforms_equal_polynomial_variant():
    for name in ("dct1", "dct3", "dct5", "dct7"):
        assert np.allclose(tf.dtt_unscaled(name, 6), tf.dtt_polynomial(name, 6))


def test_derive_scaling_and_mismatch():
    u = tf.generate("dst2:6")
    p = tf.generate("dst2:6:variant=polynomial")
    d = tf.derive_scaling(u, p)
    assert np.allclose(d, tf.dtt_rowscale("dst2", 6))
    wrong = tf.generate("dct2:6:variant=polynomial")
    with pytest.raises(tf.PairingMismatchError):
        tf.derive_scaling(u, wrong)


def test_dtt_inverse_relations():
    n = 7
    # inverse of dct3 is (2/n) diag(1/2,1,..,1) . dct2; dst3/dct4 analogous
    d3 = np.ones(n); d3[0] = 0.5
    assert np.allclose(np.linalg.inv(tf.dtt_unscaled("dct3", n)),
                       (2.0 / n) * np.diag(d3) @ tf.dtt_unscaled("dct2", n),
                       atol=1e-12)
    s3 = np.ones(n); s3[-1] = 0.5
    assert np.allclose(np.linalg.inv(tf.dtt_unscaled("dst3", n)),
                       (2.0 / n) * np.diag(s3) @ tf.dtt_unscaled("dst2", n),
                       atol=1e-12)
    assert np.allclose(np.linalg.inv(tf.dtt_unscaled("dct4", n)),
                       (2.0 / n) * tf.dtt_unscaled("dct4", n), atol=1e-12)
    # at r = 1/2 the rescaled skew inverses coincide with the type-2/type-4
    # transforms
    assert np.allclose(tf.skew_inverse("idct3", n, 0.5),
                       tf.dtt_unscaled("dct2", n), atol=1e-9)
    assert np.allclose(tf.skew_inverse("idst3", n, 0.5),
                       tf.dtt_unscaled("dst2", n), atol=1e-9)
    assert np.allclose(tf.skew_inverse("idct4", n, 0.5),
                       tf.dtt_unscaled("dct4", n), atol=1e-9)
    assert np.allclose(tf.skew_inverse("idst4", n, 0.5),
                       tf.dtt_unscaled("dst4", n), atol=1e-9)


def test_skew_zeros_and_size_errors():
    zs = tf.skew_zeros(5, Fraction(1, 3))
    assert zs == sorted(zs) and len(zs) == 5
    with pytest.raises(ValueError):
        tf.skew_zeros(4, 1.5)
    with pytest.raises(tf.InvalidSizeError):
        tf.qdft_matrix(6)
    with pytest.raises(tf.InvalidSizeError):
        tf.dtt_unscaled("dct1", 1)


def test_skew_reduces_to_plain_at_half():
    for name in tf.SKEW_FAMILIES:
        assert np.allclose(tf.skew_unscaled(name, 6, 0.5),
                           tf.dtt_unscaled(name, 6), atol=1e-12)


def test_unsupported_variants():
    with pytest.raises(tf.UnsupportedVariantError):
        tf.generate("dct2:4:r=1/3")            # no skew for this family
    with pytest.raises(tf.UnsupportedVariantError):
        tf.generate("dft1:4:variant=orthogonal")
    with pytest.raises(tf.UnsupportedVariantError):
        tf.generate("dct3:4:r=1/3:variant=orthogonal")


def test_qdft_is_integer_and_invertible():
    Q = tf.qdft_matrix(8)
    assert np.array_equal(Q, np.round(Q))
    assert abs(np.linalg.det(Q)) > 0
    assert tf.qdft_block_sizes(8) == [1, 1, 2, 4]


def test_vandermonde():
    V = tf.vandermonde([2.0, 3.0, 5.0])
    assert np.allclose(V, [[1, 2, 4], [1, 3, 9], [1, 5, 25]])
    Vc = tf.vandermonde([1.0, -1.0, 0.5], chebyshev_basis("T"))
    assert np.allclose(Vc[:, 2], [1.0, 1.0, -0.5])   # 2x^2 - 1


def test_gnn_model_and_orthogonality():
    rec = tf.GNN_RECURRENCES["legendre"]
    M = tf.gnn_orthogonal_matrix(rec, 6)
    assert np.abs(M @ M.T - np.eye(6)).max() < 1e-10
    m = tf.gnn_model(rec, 6)
    S = shift_matrix(m)
    # three-term recurrence shows up as a tridiagonal shift matrix
    assert np.abs(np.triu(S, 2)).max() < 1e-12
    assert np.abs(np.tril(S, -2)).max() < 1e-12


def test_recurrence_from_weight_matches_preset():
    rec = tf.GNN_RECURRENCES["legendre"]
    quad = tf.recurrence_from_weight(rec.a, rec.b, rec.c, lambda t: 1.0)
    for k in range(5):
        assert math.isclose(quad.mu(k), rec.mu(k), rel_tol=1e-10)


def test_csv_round_trip_real_and_complex():
    for spec in ("dct2:5", "dft2:4", "dct4:4:r=1/3", "tensor(dct2:2,dst4:2)"):
        t = tf.generate(spec)
        header, M = tf.from_csv(tf.to_csv(t))
        assert np.array_equal(np.asarray(M), np.asarray(t.entries, dtype=M.dtype))
        assert int(header[1]) == t.n


def test_json_export():
    import json
    t = tf.generate("dct3:4")
    payload = json.loads(tf.to_json(t))
    assert payload["spec"] == "dct3:4"
    assert len(payload["entries"]) == 4
    assert len(payload["alpha"]) == 4
    assert payload["scaling"] == [1.0] * 4   # cos-kernel transforms are unscaled


def test_model_for_families():
    m = tf.model_for(tf.parse_spec("dft3:4"))
    assert np.allclose(m.p.as_floats(), [1, 0, 0, 0, 1])   # x^4 + 1
    mq = tf.model_for(tf.parse_spec("qdft:4"))
    assert np.allclose(mq.p.as_floats(), [-1, 0, 0, 0, 1])
    ms = tf.model_for(tf.parse_spec("dst4:5:r=1/4"))
    assert ms.basis.kind == "W"
    assert abs(ms.p(math.cos(tf.skew_zeros(5, 0.25)[0] * math.pi))) < 1e-9
