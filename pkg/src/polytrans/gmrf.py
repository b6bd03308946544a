"""Stochastic bridge: Gauss-Markov random field covariances, their
Karhunen-Loeve transforms, matrix normality, the equivalence tests between
KLTs and the orthogonal Fourier transforms of the underlying signal model,
and column-stochastic normalization of shift matrices."""
from __future__ import annotations

import dataclasses
from typing import Optional

import numpy as np

from .poly import Polynomial


CASES = ("sym-posdef", "sym-indefinite", "nonsym")


class RankError(ValueError):
    pass


@dataclasses.dataclass(frozen=True)
class GmrfModel:
    """First-order field (I - A)s = noise with noise variance sigma2.

    The case tag selects the covariance formula: "sym-posdef" needs A
    symmetric with I - A positive definite and gives sigma2 (I-A)^-1;
    "sym-indefinite" needs A symmetric (I - A merely invertible) and gives
    sigma2 (I-A)^-2; "nonsym" gives sigma2 (I-A)^-1 (I-A^T)^-1.
    """

    A: np.ndarray
    sigma2: float = 1.0
    case: str = "sym-posdef"

    def __post_init__(self):
        A = np.asarray(self.A, dtype=float)
        object.__setattr__(self, "A", A)
        if self.sigma2 <= 0:
            raise ValueError("noise variance must be positive")
        if self.case not in CASES:
            raise ValueError(f"case must be one of {CASES}")
        n = A.shape[0]
        B = np.eye(n) - A
        if np.linalg.matrix_rank(B) < n:
            raise RankError("I - A must have full rank")
        if self.case.startswith("sym") and np.abs(A - A.T).max() > 1e-10:
            raise ValueError("symmetric case needs a symmetric A")
        if self.case == "sym-posdef":
            if np.linalg.eigvalsh(B).min() <= 0:
                raise ValueError("sym-posdef case needs I - A positive definite")

    @property
    def n(self) -> int:
        return self.A.shape[0]


def covariance(m: GmrfModel) -> np.ndarray:
    """The field covariance per the model's case; symmetrized to kill
    round-off skew."""
    n = m.n
    B = np.eye(n) - m.A
    Binv = np.linalg.inv(B)
    if m.case == "sym-posdef":
        S = m.sigma2 * Binv
    elif m.case == "sym-indefinite":
        S = m.sigma2 * Binv @ Binv
    else:
        S = m.sigma2 * Binv @ Binv.T
    return 0.5 * (S + S.T)


def klt(Sigma: np.ndarray, tol: float = 1e-10) -> np.ndarray:
    """Orthogonal matrix whose rows are eigenvectors of Sigma, eigenvalues in
    descending order (index tie-break); F Sigma F^T is diagonal."""
    Sigma = np.asarray(Sigma, dtype=float)
    if np.abs(Sigma - Sigma.T).max() > tol:
        raise ValueError("covariance must be symmetric")
    if np.abs(Sigma - np.eye(Sigma.shape[0])).max() <= tol:
        return np.eye(Sigma.shape[0])
    w, V = np.linalg.eigh(Sigma)     # ascending; stable LAPACK ordering
    order = np.argsort(-w, kind="stable")
    return V[:, order].T


@dataclasses.dataclass(frozen=True)
class NormalityReport:
    normal: bool
    commutator: float
    q: Optional[Polynomial]
    fit_residual: Optional[float]


def normality(A: np.ndarray, tol: float = 1e-10) -> NormalityReport:
    """Is A normal, and if so which polynomial q satisfies q(A) = A^T
    (least-squares fit over the powers of A)."""
    A = np.asarray(A, dtype=float)
    n = A.shape[0]
    comm = float(np.abs(A @ A.T - A.T @ A).max(initial=0.0))
    if comm >= tol:
        return NormalityReport(False, comm, None, None)
    powers = [np.eye(n)]
    for _ in range(n - 1):
        powers.append(powers[-1] @ A)
    M = np.column_stack([P.reshape(-1) for P in powers])
    target = A.T.reshape(-1)
    sol, *_ = np.linalg.lstsq(M, target, rcond=None)
    resid = float(np.abs(M @ sol - target).max(initial=0.0))
    return NormalityReport(True, comm, Polynomial(list(sol)), resid)


def _injective_on(f, values, tol: float = 1e-8) -> bool:
    vals = [complex(f(v)) for v in values]
    scale = max(max(abs(v) for v in vals), 1.0)
    for i in range(len(vals)):
        for j in range(i + 1, len(vals)):
            if abs(vals[i] - vals[j]) <= tol * scale:
                # identical arguments do not break injectivity
                if abs(complex(values[i]) - complex(values[j])) > tol:
                    return False
    return True


@dataclasses.dataclass(frozen=True)
class EquivalenceReport:
    case: str
    forward_residual: Optional[float]   # offdiag of F Sigma F^T for the given F
    fourier_is_klt: Optional[bool]
    converse_injective: Optional[bool]
    detail: str = ""


def klt_vs_fourier(m: GmrfModel, F: np.ndarray,
                   q: Optional[Polynomial] = None,
                   tol: float = 1e-8) -> EquivalenceReport:
    """Does the given orthogonal/unitary Fourier transform F of the A-model
    diagonalize the field covariance, and does the converse hold?

    The converse (every KLT is a Fourier transform of the model) is decided by
    the injectivity test appropriate to the case: x -> x^2 on the eigenvalues
    for the symmetric-indefinite covariance, (1-x)(1-q(x)) with q(A) = A^T for
    the normal nonsymmetric one, and eigenvalue simplicity of I - A for the
    symmetric positive-definite one.
    """
    Sigma = covariance(m)
    F = np.asarray(F)
    C = F @ Sigma @ (F.conj().T if np.iscomplexobj(F) else F.T)
    fwd = float(np.abs(C - np.diag(np.diag(C))).max(initial=0.0))
    ok = fwd < tol * max(np.abs(Sigma).max(), 1.0)
    eig = np.linalg.eigvals(m.A)
    if m.case == "sym-posdef":
        inj = _injective_on(lambda x: x, eig, tol)
        detail = "covariance eigenvalues simple iff shift eigenvalues simple"
    elif m.case == "sym-indefinite":
        inj = _injective_on(lambda x: (1 - x) ** 2, eig, tol)
        detail = "squared-map injectivity on the shift spectrum"
    else:
        rep = normality(m.A) if q is None else None
        qq = q if q is not None else rep.q
        if qq is None:
            return EquivalenceReport(m.case, fwd, ok, None,
                                     "non-normal: outside theorem scope")
        inj = _injective_on(lambda x: (1 - x) * (1 - qq(x)), eig, tol)
        detail = "(1-x)(1-q(x)) injectivity on the shift spectrum"
    return EquivalenceReport(m.case, fwd, ok, inj, detail)


@dataclasses.dataclass(frozen=True)
class StochasticResult:
    feasible: bool
    matrix: Optional[np.ndarray]
    reason: str = ""


def stochastic_normalize(A: np.ndarray, tol: float = 0.0) -> StochasticResult:
    """Scale columns to sum 1. Infeasible when an entry is negative (beyond
    tol) or a column is all-zero; the violation is reported."""
    A = np.asarray(A, dtype=float)
    neg = A < -tol
    if neg.any():
        i, j = map(int, np.argwhere(neg)[0])
        return StochasticResult(False, None,
                                f"negative entry {A[i, j]:.6g} at ({i}, {j})")
    sums = A.sum(axis=0)
    if (sums <= tol).any():
        j = int(np.argwhere(sums <= tol)[0][0])
        return StochasticResult(False, None, f"column {j} sums to zero")
    return StochasticResult(True, A / sums, "")


def subspace_angle(F: np.ndarray, G: np.ndarray, eigenvalues: np.ndarray,
                   tol: float = 1e-8) -> float:
    """Largest principal angle between the eigenspaces spanned by matching
    rows of two KLT candidates, grouped by (near-)equal eigenvalues."""
    w = np.asarray(eigenvalues, dtype=float)
    scale = max(np.abs(w).max(initial=0.0), 1.0)
    worst = 0.0
    used = np.zeros(len(w), bool)
    for i in range(len(w)):
        if used[i]:
            continue
        grp = np.abs(w - w[i]) <= tol * scale
        used |= grp
        Qf, _ = np.linalg.qr(np.asarray(F)[grp].conj().T)
        Qg, _ = np.linalg.qr(np.asarray(G)[grp].conj().T)
        sv = np.linalg.svd(Qf.conj().T @ Qg, compute_uv=False)
        worst = max(worst, float(np.arccos(min(1.0, sv.min()))))
    return worst
