"""Spectral machinery: Chinese-remainder base change, diagonalization and
convolution checks, and sparsity-pattern residuals.

The central facts verified here: a transform F decomposes a model iff it
diagonalizes every filter matrix of the model, the diagonal being the filter's
values at the module zeros; and filtering equals the inverse transform of the
pointwise product in the spectral domain.
"""
from __future__ import annotations

import dataclasses
from typing import Optional, Sequence

import numpy as np

from .poly import Polynomial, poly_gcd
from .model import BasisSpec, SignalModel, coords_in_basis, filter_matrix, _to_numeric


# ---------------------------------------------------------------------------
# Chinese-remainder base change
# ---------------------------------------------------------------------------

def crt_base_change(p: Polynomial, factors: Sequence[Polynomial],
                    source: BasisSpec, targets: Sequence[BasisSpec]) -> np.ndarray:
    """Matrix of the isomorphism C[x]/p -> (+) C[x]/factor_i, from the source
    basis of the big module to the chosen basis of each factor module.

    Column ell stacks, factor by factor, the coordinates of
    (source element ell) mod factor_i in the i-th target basis. Exact when all
    inputs have rational coefficients.
    """
    if len(factors) != len(targets):
        raise ValueError("need one target basis per factor")
    prod = Polynomial.one()
    for f in factors:
        prod = prod * f
    if prod.is_exact() and p.is_exact():
        if (prod.monic().coeffs != p.monic().coeffs):
            raise ValueError("factors do not multiply to the module polynomial")
        for i in range(len(factors)):
            for j in range(i + 1, len(factors)):
                if poly_gcd(factors[i], factors[j]).degree != 0:
                    raise ValueError("factors must be pairwise coprime")
    n = p.degree
    cols = []
    for ell in range(n):
        src = source.element(ell) * source.scale_vector(n)[ell]
        pieces = []
        for f, tb in zip(factors, targets):
            pieces.append(_to_numeric(coords_in_basis(src % f, tb, f.degree)))
        cols.append(np.concatenate(pieces))
    M = np.column_stack(cols)
    if np.isrealobj(M) or np.abs(M.imag).max(initial=0.0) == 0.0:
        M = M.real if np.iscomplexobj(M) else M
    return M


# ---------------------------------------------------------------------------
# Diagonalization and frequency response
# ---------------------------------------------------------------------------

def frequency_response(model: SignalModel, h: Polynomial) -> np.ndarray:
    """h evaluated at the module zeros, in the model's spectrum ordering."""
    return np.array([h(z) for z in model.zeros().astype(complex)])


def conjugate(F: np.ndarray, A: np.ndarray) -> np.ndarray:
    return F @ A @ np.linalg.inv(F)


def diag_residual(F: np.ndarray, A: np.ndarray,
                  expected_diag: Optional[np.ndarray] = None) -> float:
    """max |offdiag(F A F^-1)|, plus the diagonal mismatch when the expected
    diagonal (frequency response) is supplied."""
    C = F @ A @ np.linalg.inv(F)
    d = np.diag(C)
    off = C - np.diag(d)
    res = float(np.abs(off).max(initial=0.0))
    if expected_diag is not None:
        res = max(res, float(np.abs(d - np.asarray(expected_diag)).max(initial=0.0)))
    return res


@dataclasses.dataclass(frozen=True)
class DiagonalizationReport:
    residual: float
    diagonal: np.ndarray
    expected: Optional[np.ndarray]

    @property
    def ok(self) -> bool:
        return self.residual < 1e-8


def check_diagonalization(F: np.ndarray, model: SignalModel,
                          h: Polynomial) -> DiagonalizationReport:
    A = filter_matrix(model, h)
    C = F @ A @ np.linalg.inv(F)
    d = np.diag(C)
    expected = frequency_response(model, h)
    res = float(np.abs(C - np.diag(d)).max(initial=0.0))
    res = max(res, float(np.abs(d - expected).max(initial=0.0)))
    return DiagonalizationReport(res, d, expected)


# ---------------------------------------------------------------------------
# Convolution two ways
# ---------------------------------------------------------------------------

def convolve_direct(model: SignalModel, h: Polynomial, s: np.ndarray) -> np.ndarray:
    return filter_matrix(model, h) @ np.asarray(s)


def convolve_spectral(model: SignalModel, F: np.ndarray, h: Polynomial,
                      s: np.ndarray) -> np.ndarray:
    """Transform, multiply pointwise by the frequency response, transform back.
    F must share the model's spectrum ordering."""
    spec = np.asarray(F, dtype=complex) @ np.asarray(s, dtype=complex)
    out = np.linalg.solve(np.asarray(F, dtype=complex),
                          frequency_response(model, h) * spec)
    return out


def convolution_residual(model: SignalModel, F: np.ndarray, h: Polynomial,
                         s: np.ndarray) -> float:
    direct = convolve_direct(model, h, s).astype(complex)
    spectral = convolve_spectral(model, F, h, s)
    scale = max(np.abs(direct).max(initial=0.0), 1.0)
    return float(np.abs(direct - spectral).max(initial=0.0) / scale)


# ---------------------------------------------------------------------------
# Structured-sparsity residuals
# ---------------------------------------------------------------------------

def xshape_mask(n: int, pattern: str) -> np.ndarray:
    """Boolean mask of allowed entries. "paired": (k,k) and (k, (n-k) mod n);
    "anti": (k,k) and (k, n-1-k); "x": union of main and anti diagonals."""
    mask = np.zeros((n, n), dtype=bool)
    for k in range(n):
        mask[k, k] = True
        if pattern == "paired":
            mask[k, (n - k) % n] = True
        elif pattern in ("anti", "x"):
            mask[k, n - 1 - k] = True
        else:
            raise ValueError(f"unknown pattern {pattern!r}")
    return mask


def xshape_residual(M: np.ndarray, pattern: str) -> float:
    """max |entry| outside the allowed x-shaped pattern, relative to the
    largest entry."""
    M = np.asarray(M)
    mask = xshape_mask(M.shape[0], pattern)
    scale = max(float(np.abs(M).max(initial=0.0)), 1e-300)
    out = np.abs(np.where(mask, 0.0, M))
    return float(out.max(initial=0.0) / scale)


def offdiag_residual(M: np.ndarray) -> float:
    M = np.asarray(M)
    d = np.diag(np.diag(M))
    scale = max(float(np.abs(M).max(initial=0.0)), 1e-300)
    return float(np.abs(M - d).max(initial=0.0) / scale)


def block_diag_residual(M: np.ndarray, sizes: Sequence[int]) -> float:
    """max |entry| outside the given diagonal blocks, relative."""
    M = np.asarray(M)
    n = M.shape[0]
    if sum(sizes) != n:
        raise ValueError("block sizes must sum to the matrix dimension")
    mask = np.zeros((n, n), dtype=bool)
    at = 0
    for s in sizes:
        mask[at:at + s, at:at + s] = True
        at += s
    scale = max(float(np.abs(M).max(initial=0.0)), 1e-300)
    return float(np.abs(np.where(mask, 0.0, M)).max(initial=0.0) / scale)


def orthogonality_residual(M: np.ndarray) -> float:
    M = np.asarray(M)
    n = M.shape[0]
    G = M.conj().T @ M if np.iscomplexobj(M) else M.T @ M
    return float(np.abs(G - np.eye(n)).max(initial=0.0))
