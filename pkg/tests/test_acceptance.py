"""Acceptance suite: twelve criteria, one pass/fail line each.

Every criterion runs the corresponding named verification suite at the
required sizes and tolerances and asserts its verdict. Run with ``pytest -v``
to see one line per criterion; the suites also print their summaries.
"""
import numpy as np
import pytest

import polytrans.checks as ck


def _run(name, **kwargs):
    res = ck.CHECKS[name](**kwargs)
    print(res.summary())
    assert res.passed, "\n".join([res.summary()] + res.lines)
    return res


def test_criterion_01_chebyshev_identities_exact():
    # recurrence, reflection symmetry, product/decomposition identities,
    # endpoint values, and all 16 boundary cells: rational arithmetic,
    # zero tolerance, indices in [-16, 16]
    _run("chebyshev", max_n=16)


def test_criterion_02_pairing_diagonal_for_all_16():
    # unscaled . polynomial^-1 diagonal (off-diagonal < 1e-8) for all 16
    # transforms at n in 2..16; the emitted pairing is the frozen table
    res = _run("pairing", sizes=range(2, 17), tol=1e-8)
    import polytrans.transforms as tf
    emitted = {name: (tf.DTT_INFO[name].kind, tf.DTT_INFO[name].bc)
               for name in tf.DTT_NAMES}
    assert len(emitted) == 16
    assert emitted["dct2"] == ("V", "hs") and emitted["dst4"] == ("W", "hs")
    assert all(any(f"basis {k}, boundary {b}" in line for line in res.lines)
               for (k, b) in emitted.values())


def test_criterion_03_diagonalization_of_random_filters():
    # every catalog model at n in {4, 8, 12}, 20 random filters: transform
    # diagonalizes the filter matrix, diagonal equals the frequency response
    _run("diagonalization", sizes=(4, 8, 12), n_filters=20, tol=1e-8)


def test_criterion_04_convolution_two_ways():
    # direct filtering vs transform-multiply-invert across the complex
    # exponential family, all 16 trig transforms, the skew transforms at
    # r in {1/4, 1/3, 2/3}, and the recurrence transforms, n = 8
    _run("convolution", n=8, tol=1e-8)


def test_criterion_05_orthogonality():
    # all orthogonal trig variants, unitary exponential transforms,
    # orthogonal real/cas kernels, the quadrature-weighted type-1 cosine
    # construction, and the recurrence transforms, n <= 16
    _run("orthogonality", max_n=16, tol=1e-9)


def test_criterion_06_signal_extensions():
    # one-term extensions on x^n - a, the 4x4 one-term +-1 grid, all 16
    # period lengths at n in 4..8, the sign patterns, and two-term skew
    # extensions with worked coefficients - exact
    _run("extension", sizes=(4, 5, 6, 7, 8))


def test_criterion_07_relations_web():
    # duality for all pairs and self-duals, the closed-form conversion
    # identities (column change, shifted column/row pairs, cross-size
    # change, skew generalizations, skew translations, skew inverses), and
    # sparse base changes with <= 3n nonzeros per factor, n in 2..12
    _run("relations", sizes=range(2, 13), tol=1e-9)


def test_criterion_08_rational_block_recursion():
    # two-power recursion at n in {2, 4, 8, 16}, integer entries, integer
    # circulants conjugated to block diagonal with sizes 1,1,2,...,2^(k-1)
    _run("rational-blocks", sizes=(2, 4, 8, 16), tol=1e-10)


def test_criterion_09_real_kernel_transforms():
    # recovery of the x-shaped translation from the complex transform with
    # the exact sparsity pattern, x-shaped shift conjugation, and the
    # cas-kernel involution for types 1 and 4
    _run("real-kernels", sizes=range(2, 13), tol=1e-9)


def test_criterion_10_realization_and_markov():
    # averaged-shift subalgebra dimensions confirmed by rank at n <= 16,
    # matrix classification on the three canonical inputs, and exactly 9 of
    # the 16 shift matrices stochastic-normalizable
    _run("realization", max_n=16)


def test_criterion_11_stochastic_bridge():
    # the three covariance formulas SPD and consistent, orthogonal
    # transforms of all 16 symmetric-shift fields diagonalize the
    # covariance, the circulant counterexample, and normality both ways
    _run("gmrf", sizes=(8, 12), tol=1e-9)


def test_criterion_12_separable_two_dimensional_models():
    # the tensor transform diagonalizes both axis filters at n = 4 per
    # axis; the 2-D model graph equals the direct product of the 1-D graph
    # with itself, exactly
    _run("tensor", n=4, tol=1e-9)
