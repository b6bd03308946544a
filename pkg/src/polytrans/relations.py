"""The web of exact relationships between the catalog transforms: duality
(flip plus sign alternation), sparse base changes inside the family sharing
the module with zeros cos((k+1/2)pi/n), the two-factor conversions between
the type-2 and type-4 cosine transforms, the cross-size conversion from the
type-1 cosine transform to the type-2 one size down, and the skew-parameter
translation identities."""
from __future__ import annotations

import dataclasses
import math
from typing import Optional

import numpy as np

from .poly import Polynomial, boundary_polynomial, cheb_poly
from .model import BasisSpec, chebyshev_basis, coords_in_basis, monomial_basis, _to_numeric
from .spectral import crt_base_change
from . import transforms as tf


class UnsupportedPairError(ValueError):
    """No worked sparse conversion between these two transforms."""


# ---------------------------------------------------------------------------
# Duality: diag((-1)^k) . M = dual(M) . J  (J the index reversal)
# ---------------------------------------------------------------------------

DUALITY = {
    "dct1": "dct1", "dst1": "dst1", "dct2": "dct2", "dst2": "dst2",
    "dct3": "dst3", "dst3": "dct3", "dct4": "dst4", "dst4": "dct4",
    "dct5": "dct6", "dct6": "dct5", "dct7": "dst8", "dst8": "dct7",
    "dst7": "dct8", "dct8": "dst7", "dst5": "dst6", "dst6": "dst5",
}


def dual_of(name: str) -> str:
    return DUALITY[name]


def duality_residual(name: str, n: int) -> float:
    """max-entry residual of diag((-1)^k) . M_name - M_dual . J."""
    M = tf.dtt_unscaled(name, n)
    D = tf.dtt_unscaled(dual_of(name), n)
    sgn = (-1.0) ** np.arange(n)
    return float(np.abs(sgn[:, None] * M - D[:, ::-1]).max())


# ---------------------------------------------------------------------------
# Base change inside the cos((k+1/2)pi/n) family
# ---------------------------------------------------------------------------

#: the four transforms sharing the module with zeros cos((k+1/2)pi/n)
SHARED_MODULE_GROUP = ("dct3", "dst3", "dct4", "dst4")


def basis_conversion_matrix(from_kind: str, to_kind: str, n: int) -> np.ndarray:
    """Exact matrix S with [from-basis elements] = [to-basis elements] . S,
    column ell = coordinates of the degree-ell from-element in the to-basis."""
    to_basis = chebyshev_basis(to_kind)
    cols = [_to_numeric(coords_in_basis(cheb_poly(from_kind, ell), to_basis, n))
            for ell in range(n)]
    return np.column_stack(cols)


@dataclasses.dataclass(frozen=True)
class BaseChange:
    """FROM = (product of left factors) . TO . (product of right factors).
    Each factor is (matrix, inverted); inverted factors contribute the inverse
    of the stored sparse matrix."""

    from_name: str
    to_name: str
    n: int
    left: tuple
    right: tuple

    @staticmethod
    def _prod(factors, n: int) -> np.ndarray:
        M = np.eye(n)
        for mat, inverted in factors:
            M = M @ (np.linalg.inv(mat) if inverted else mat)
        return M

    def residual(self) -> float:
        F = tf.dtt_unscaled(self.from_name, self.n)
        T = tf.dtt_unscaled(self.to_name, self.n)
        lhs = self._prod(self.left, self.n) @ T @ self._prod(self.right, self.n)
        return float(np.abs(F - lhs).max() / max(np.abs(F).max(), 1e-300))

    def max_factor_nonzeros(self) -> int:
        return max(int(np.count_nonzero(m)) for m, _ in self.left + self.right)


def _rowscale_ratio(from_name: str, to_name: str, n: int) -> np.ndarray:
    theta = tf.dtt_theta(from_name, n)
    fk = tf.DTT_INFO[from_name].kind
    tk = tf.DTT_INFO[to_name].kind
    return np.array([tf._kind_rowscale(fk, th) / tf._kind_rowscale(tk, th)
                     for th in theta])


def base_change(from_name: str, to_name: str, n: int) -> BaseChange:
    """Sparse exact conversion FROM = L . TO . R.

    Supported pairs: any two members of the shared-module group (routed
    through the sine-kernel basis hub when needed), and the type-2/type-4
    cosine pair. Raises UnsupportedPairError otherwise."""
    if from_name == to_name:
        return BaseChange(from_name, to_name, n, (), ())
    group = SHARED_MODULE_GROUP
    if from_name in group and to_name in group:
        d = _rowscale_ratio(from_name, to_name, n)
        left = ((np.diag(d), False),)
        fk = tf.DTT_INFO[from_name].kind
        tk = tf.DTT_INFO[to_name].kind
        right = []
        if tk != "U":
            right.append((basis_conversion_matrix(tk, "U", n), True))
        if fk != "U":
            right.append((basis_conversion_matrix(fk, "U", n), False))
        return BaseChange(from_name, to_name, n, left, tuple(right))
    if {from_name, to_name} == {"dct2", "dct4"}:
        S = np.eye(n) + np.diag(np.ones(n - 1), 1)
        D2 = np.diag(2 * np.cos((2 * np.arange(n) + 1) * math.pi / (4 * n)))
        if from_name == "dct2":
            # shifted-column identity: S . dct2 = dct4 . (2 D)
            return BaseChange(from_name, to_name, n,
                              ((S, True),), ((D2, False),))
        return BaseChange(from_name, to_name, n,
                          ((S, False),), ((D2, True),))
    raise UnsupportedPairError(
        f"no worked sparse conversion from {from_name} to {to_name}; supported: "
        f"pairs within {group} and the dct2/dct4 pair (dct1 to dct2 is the "
        f"cross-size conversion, see dct1_to_dct2_change)")


# ---------------------------------------------------------------------------
# Named closed-form identities
# ---------------------------------------------------------------------------

def t_to_v_column_change(n: int) -> np.ndarray:
    """Upper-bidiagonal S' converting the cos-kernel basis into the half-shift
    cosine basis: S'[0,0]=1, S'[i,i]=1/2 (i>=1), S'[i,i+1]=1/2."""
    S = 0.5 * (np.eye(n) + np.diag(np.ones(n - 1), 1))
    S[0, 0] = 1.0
    return S


def t_to_v_column_change_exactness(n: int) -> bool:
    """The closed form above equals the symbolic basis conversion, exactly."""
    sym = basis_conversion_matrix("T", "V", n)
    return bool(np.array_equal(sym, t_to_v_column_change(n)))


def dct3_to_dct4_column_residual(n: int, r=None) -> float:
    """diag(cos(r_k pi / 2)) . DCT3(r) = DCT4(r) . S'  (skew-parametrized;
    r = 1/2 is the plain transforms)."""
    if r is None:
        r = 0.5
    rk = np.array(tf.skew_zeros(n, r))
    D = np.diag(np.cos(rk * math.pi / 2))
    C3 = tf.skew_unscaled("dct3", n, r)
    C4 = tf.skew_unscaled("dct4", n, r)
    lhs = D @ C3
    rhs = C4 @ t_to_v_column_change(n)
    return float(np.abs(lhs - rhs).max())


def dct2_to_dct4_residual(n: int) -> float:
    """(I + superdiag) . DCT2 = DCT4 . 2 diag(cos((2l+1)pi/4n))."""
    S = np.eye(n) + np.diag(np.ones(n - 1), 1)
    D = np.diag(2 * np.cos((2 * np.arange(n) + 1) * math.pi / (4 * n)))
    lhs = S @ tf.dtt_unscaled("dct2", n)
    rhs = tf.dtt_unscaled("dct4", n) @ D
    return float(np.abs(lhs - rhs).max())


def dct3_to_dct4_row_residual(n: int) -> float:
    """(1/2) diag(1/cos((2k+1)pi/4n)) . DCT3 . (I + superdiag)^T = DCT4."""
    Dinv = np.diag(0.5 / np.cos((2 * np.arange(n) + 1) * math.pi / (4 * n)))
    S = np.eye(n) + np.diag(np.ones(n - 1), 1)
    lhs = Dinv @ tf.dtt_unscaled("dct3", n) @ S.T
    return float(np.abs(lhs - tf.dtt_unscaled("dct4", n)).max())


def dct1_to_dct2_change(m: int):
    """Cross-size conversion: (D (+) I1) . DCT1_m = (DCT2_{m-1} (+) I1) . B.

    B is the Chinese-remainder base change splitting the DCT1 module into the
    DCT2 module one size down and a one-dimensional piece at the zero x = -1.
    Returns (left diagonal vector of length m, B)."""
    n = m - 1
    if n < 2:
        raise ValueError("need m >= 3")
    p = boundary_polynomial("T", "ws", m)           # 2 (x^2 - 1) U_{m-2}
    f1 = (Polynomial.x() - Polynomial.one()) * cheb_poly("U", n - 1)
    f2 = Polynomial.x() + Polynomial.one()
    B = crt_base_change(p, [f1, f2], chebyshev_basis("T"),
                        [chebyshev_basis("V"), monomial_basis()])
    d = np.ones(m)
    d[:n] = np.cos(np.arange(n) * math.pi / (2 * n))
    return d, B


def dct1_to_dct2_residual(m: int) -> float:
    d, B = dct1_to_dct2_change(m)
    n = m - 1
    lhs = d[:, None] * tf.dtt_unscaled("dct1", m)
    rhs2 = np.zeros((m, m))
    rhs2[:n, :n] = tf.dtt_unscaled("dct2", n)
    rhs2[n, n] = 1.0
    return float(np.abs(lhs - rhs2 @ B).max())


def skew_translation_residual(name: str, n: int, r) -> float:
    """Lemma: skew transform = plain transform . X with x-shaped X."""
    lhs = tf.skew_unscaled(name, n, r)
    rhs = tf.dtt_unscaled(name, n) @ tf.skew_translation(name, n, r)
    return float(np.abs(lhs - rhs).max())


def skew_inverse_via_translation_residual(n: int, r) -> float:
    """The skew inverses equal the plain rescaled inverses conjugated through
    the translation matrices: iDCT3(r) = X3(r)^-1 . DCT2 and
    iDCT4(r) = X4(r)^-1 . DCT4."""
    i3 = tf.skew_inverse("idct3", n, r)
    lhs3 = np.linalg.inv(tf.skew_translation("dct3", n, r)) @ tf.dtt_unscaled("dct2", n)
    i4 = tf.skew_inverse("idct4", n, r)
    lhs4 = np.linalg.inv(tf.skew_translation("dct4", n, r)) @ tf.dtt_unscaled("dct4", n)
    return max(float(np.abs(i3 - lhs3).max()), float(np.abs(i4 - lhs4).max()))


def skew_inverse_pair_residual(n: int, r) -> float:
    """(I + superdiag) . iDCT3(r) . (1/2) diag(cos(r_k pi/2))^-1 = iDCT4(r)."""
    S = np.eye(n) + np.diag(np.ones(n - 1), 1)
    rk = np.array(tf.skew_zeros(n, r))
    Dinv = np.diag(0.5 / np.cos(rk * math.pi / 2))
    lhs = S @ tf.skew_inverse("idct3", n, r) @ Dinv
    return float(np.abs(lhs - tf.skew_inverse("idct4", n, r)).max())
