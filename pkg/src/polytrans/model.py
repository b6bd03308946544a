"""Signal models over polynomial algebras: shift/filter matrices, signal
extensions, graph visualizations, and matrix-to-model classification.

A model is the quotient algebra C[x]/p(x) together with a basis (monomial,
Chebyshev, or endpoint-scaled Chebyshev) and an optional non-default algebra
generator. Shift and filter matrices are always obtained by symbolic
reduction of generator*basis_element modulo p — never from hardcoded tables.
"""
from __future__ import annotations

import dataclasses
import math
from fractions import Fraction
from typing import Optional, Sequence

import numpy as np

from .poly import (
    Polynomial,
    cheb_poly,
    inv_mod,
    is_separable,
    mul_mod,
)


class NoPastError(ValueError):
    """Left extension requested but x is not invertible modulo p."""


# ---------------------------------------------------------------------------
# Bases
# ---------------------------------------------------------------------------

@dataclasses.dataclass(frozen=True)
class BasisSpec:
    """Basis of the module: monomial x^k, Chebyshev C_k, Chebyshev with the
    first/last element rescaled (the symmetrizing variant), or an explicit
    graded sequence of polynomials (deg element[k] == k)."""

    tag: str                       # "monomial" | "chebyshev" | "scaled" | "custom"
    kind: Optional[str] = None     # Chebyshev kind for chebyshev/scaled tags
    left: float = 1.0              # scale of element 0 (tag == "scaled")
    right: float = 1.0             # scale of element n-1 (tag == "scaled")
    elements: Optional[tuple] = None  # tuple of Polynomial (tag == "custom")

    def __post_init__(self):
        if self.tag not in ("monomial", "chebyshev", "scaled", "custom"):
            raise ValueError(f"unknown basis tag {self.tag!r}")
        if self.tag in ("chebyshev", "scaled") and self.kind not in ("T", "U", "V", "W"):
            raise ValueError("Chebyshev basis needs kind in T/U/V/W")
        if self.tag == "custom":
            if not self.elements:
                raise ValueError("custom basis needs its element polynomials")
            for k, e in enumerate(self.elements):
                if e.degree != k:
                    raise ValueError("custom basis must be graded (deg element[k] == k)")

    def element(self, k: int) -> Polynomial:
        """The (possibly virtual, k outside 0..n-1) unscaled basis element."""
        if self.tag == "monomial":
            if k < 0:
                raise ValueError("negative monomial index is handled by extension()")
            return Polynomial.monomial(k)
        if self.tag == "custom":
            if not 0 <= k < len(self.elements):
                raise ValueError("custom basis has no virtual elements")
            return self.elements[k]
        return cheb_poly(self.kind, k)

    def scale_vector(self, n: int) -> np.ndarray:
        s = np.ones(n)
        if self.tag == "scaled":
            s[0] = self.left
            s[-1] = self.right
        return s


def monomial_basis() -> BasisSpec:
    return BasisSpec("monomial")


def chebyshev_basis(kind: str) -> BasisSpec:
    return BasisSpec("chebyshev", kind)


# ---------------------------------------------------------------------------
# Coordinates
# ---------------------------------------------------------------------------

def coords_in_basis(s: Polynomial, basis: BasisSpec, n: int) -> list:
    """Coordinates of s (deg < n) in the first n basis elements.

    Exact when s has rational coefficients; the graded leading-coefficient
    peeling works for monomial and all four Chebyshev families.
    """
    if s.degree >= n:
        raise ValueError("polynomial does not fit in the module")
    if basis.tag == "monomial":
        return [s.coeff(i) for i in range(n)]
    coords = [Fraction(0)] * n
    rem = s
    for k in reversed(range(n)):
        if rem.degree < k:
            continue
        bk = basis.element(k)
        c = rem.coeff(k) / bk.leading()
        coords[k] = c
        diff = rem - c * bk
        # the degree-k coefficient cancels by construction; truncate it so
        # float rounding residue cannot survive at the top
        rem = Polynomial(diff.coeffs[:k])
    if basis.tag == "scaled":
        sv = basis.scale_vector(n)
        coords = [coords[i] / sv[i] for i in range(n)]
    return coords


# ---------------------------------------------------------------------------
# The model
# ---------------------------------------------------------------------------

@dataclasses.dataclass(frozen=True)
class SignalModel:
    """Quotient module C[x]/p with a chosen basis and algebra generator.

    ``alpha`` optionally pins the spectrum ordering (closed-form zeros of p);
    otherwise zeros come from a numeric rootfinder, sorted by descending real
    part.
    """

    p: Polynomial
    basis: BasisSpec
    field: str = "complex"
    generator: Polynomial = dataclasses.field(default_factory=Polynomial.x)
    alpha: Optional[tuple] = None
    name: str = ""

    def __post_init__(self):
        if self.p.degree < 1:
            raise ValueError("module polynomial must have degree >= 1")

    @property
    def n(self) -> int:
        return self.p.degree

    def zeros(self) -> np.ndarray:
        if self.alpha is not None:
            return np.asarray(self.alpha)
        coeffs = self.p.as_floats()
        roots = np.roots(list(reversed(coeffs)))
        order = np.argsort(-roots.real + 1j * 0)  # descending real part
        roots = roots[order]
        if np.abs(roots.imag).max(initial=0.0) < 1e-12:
            roots = roots.real
        return roots

    def is_spectral_ready(self) -> bool:
        return self.p.is_exact() and is_separable(self.p)

    def reduce(self, s: Polynomial) -> list:
        """Coordinates of s mod p in the model's basis."""
        return coords_in_basis(s % self.p, self.basis, self.n)


def _to_numeric(coords: Sequence) -> np.ndarray:
    vals = [complex(c) for c in coords]
    arr = np.array(vals)
    if np.abs(arr.imag).max(initial=0.0) == 0.0:
        arr = arr.real
    return arr


def filter_matrix(model: SignalModel, h: Polynomial) -> np.ndarray:
    """Matrix of multiplication by h on the module, column per basis element."""
    n = model.n
    sv = model.basis.scale_vector(n)
    cols = []
    for k in range(n):
        col = model.reduce(mul_mod(h, model.basis.element(k), model.p))
        cols.append(_to_numeric(col) * sv[k])
    return np.column_stack(cols)


def shift_matrix(model: SignalModel) -> np.ndarray:
    """Matrix of the model's shift (its algebra generator) in the basis."""
    return filter_matrix(model, model.generator)


def symmetrizing_scales(model: SignalModel) -> np.ndarray:
    """Diagonal d (d[0]=1) with diag(d) @ A @ diag(1/d) symmetric, for the
    tridiagonal-plus-corners shift matrices of the Chebyshev-basis models."""
    A = shift_matrix(model)
    n = model.n
    d = np.ones(n)
    for k in range(n - 1):
        up, lo = A[k, k + 1], A[k + 1, k]
        if up == 0 or lo == 0:
            if up != lo:
                raise ValueError("shift matrix not symmetrizable by a diagonal")
            continue
        ratio = up / lo
        if ratio <= 0:
            raise ValueError("shift matrix not symmetrizable by a diagonal")
        d[k + 1] = d[k] * math.sqrt(ratio)
    if n >= 3:
        d = d / d[n // 2]  # normalize so interior elements keep scale 1
    return d


def scaled_endpoint_basis(kind: str, bc_p: Polynomial) -> BasisSpec:
    """Endpoint-scaled Chebyshev basis making the shift matrix symmetric."""
    base = SignalModel(bc_p, chebyshev_basis(kind))
    d = symmetrizing_scales(base)
    # basis element scales are the inverse of the coordinate scaling d
    return BasisSpec("scaled", kind, left=1.0 / d[0], right=1.0 / d[-1])


# ---------------------------------------------------------------------------
# Signal extension
# ---------------------------------------------------------------------------

def extension(model: SignalModel, k: int) -> list:
    """Coordinates of the k-th virtual basis element reduced into the module.

    For monomial bases this is x^k mod p (k < 0 via the inverse of x, when it
    exists); for Chebyshev bases it is C_k mod p with C_k of negative index
    given by the family's reflection law.
    """
    if model.basis.tag == "monomial":
        if k >= 0:
            s = Polynomial.monomial(k)
        else:
            xinv = inv_mod(Polynomial.x(), model.p)
            if xinv is None:
                raise NoPastError("x is not invertible modulo p; no left extension")
            s = Polynomial.one()
            for _ in range(-k):
                s = mul_mod(s, xinv, model.p)
        return model.reduce(s)
    return model.reduce(cheb_poly(model.basis.kind, k))


def is_monomial_extension(coords: Sequence, tol: float = 1e-10) -> bool:
    return _nonzeros(coords, tol) <= 1


def is_two_monomial_extension(coords: Sequence, tol: float = 1e-10) -> bool:
    return _nonzeros(coords, tol) <= 2


def _nonzeros(coords: Sequence, tol: float) -> int:
    cnt = 0
    for c in coords:
        if isinstance(c, Fraction):
            cnt += c != 0
        else:
            cnt += abs(complex(c)) > tol
    return cnt


def extension_period(model: SignalModel, bound: Optional[int] = None,
                     tol: float = 1e-10) -> Optional[int]:
    """Smallest L > 0 with extension(k+L) == extension(k) on a verification
    window, or None if no period <= bound exists."""
    n = model.n
    if bound is None:
        bound = 6 * n + 6
    try:
        lo = -2 * n
        cache = {k: extension(model, k) for k in range(lo, bound + 2 * n + 1)}
    except NoPastError:
        lo = 0
        cache = {k: extension(model, k) for k in range(0, bound + 2 * n + 1)}
    def eq(a, b):
        if all(isinstance(c, Fraction) for c in a + b):
            return a == b
        return max(abs(complex(x) - complex(y)) for x, y in zip(a, b)) < tol
    for L in range(1, bound + 1):
        if all(eq(cache[k], cache[k + L]) for k in range(lo, bound + 2 * n + 1 - L)):
            return L
    return None


# ---------------------------------------------------------------------------
# Graph visualization
# ---------------------------------------------------------------------------

@dataclasses.dataclass(frozen=True)
class ModelGraph:
    """Weighted graph whose adjacency matrix is the (summed) shift matrix."""

    adjacency: np.ndarray
    labels: tuple

    def is_undirected(self, tol: float = 1e-12) -> bool:
        A = self.adjacency
        return bool(np.abs(A - A.T).max() <= tol)

    def to_dot(self) -> str:
        A = self.adjacency
        n = A.shape[0]
        und = self.is_undirected()
        lines = ["graph model {" if und else "digraph model {"]
        edge = " -- " if und else " -> "
        for i, lab in enumerate(self.labels):
            lines.append(f'  {i} [label="{lab}"];')
        for i in range(n):
            for j in range(n):
                w = A[i, j]
                if w == 0:
                    continue
                if und and j < i:
                    continue
                wtxt = format(w.real if getattr(w, "imag", 0.0) == 0 else w, ".6g")
                lines.append(f'  {i}{edge}{j} [label="{wtxt}"];')
        lines.append("}")
        return "\n".join(lines)


def visualize(models) -> ModelGraph:
    """Graph of one model, or of a separable multi-axis model given as a list
    of 1-D factors (adjacency = sum of axis-lifted shift matrices)."""
    if isinstance(models, SignalModel):
        A = shift_matrix(models)
        labels = tuple(str(i) for i in range(models.n))
        return ModelGraph(A, labels)
    mats = [shift_matrix(m) for m in models]
    dims = [m.shape[0] for m in mats]
    total = int(np.prod(dims))
    A = np.zeros((total, total), dtype=complex)
    for axis, mat in enumerate(mats):
        factors = [np.eye(d) for d in dims]
        factors[axis] = mat
        lifted = factors[0]
        for f in factors[1:]:
            lifted = np.kron(lifted, f)
        A = A + lifted
    if np.abs(A.imag).max(initial=0.0) < 1e-14:
        A = A.real
    idx = list(np.ndindex(*dims))
    labels = tuple(",".join(map(str, t)) for t in idx)
    return ModelGraph(A, labels)


# ---------------------------------------------------------------------------
# Matrix -> model classification
# ---------------------------------------------------------------------------

@dataclasses.dataclass(frozen=True)
class MatrixClassification:
    kind: str                      # "regular" | "nonregular" | "unrealizable"
    p: Optional[Polynomial]        # module polynomial (numeric coefficients)
    q: Optional[Polynomial]        # shift polynomial (nonregular case)
    minimal_poly: Polynomial


def minimal_polynomial(A: np.ndarray, rtol: float = 1e-8) -> Polynomial:
    """Monic minimal polynomial, degree decided by numeric rank with a
    singular-value cutoff of rtol * sigma_max."""
    n = A.shape[0]
    powers = [np.eye(n)]
    for _ in range(n):
        powers.append(powers[-1] @ A)
    vecs = np.column_stack([P.reshape(-1) for P in powers])
    for d in range(1, n + 1):
        M = vecs[:, :d]
        target = vecs[:, d]
        sol, *_ = np.linalg.lstsq(M, target, rcond=None)
        resid = np.linalg.norm(M @ sol - target)
        scale = max(np.linalg.norm(target), 1.0)
        if resid <= rtol * scale:
            coeffs = list(-sol) + [1.0]
            return Polynomial(coeffs)
    coeffs = np.poly(A)  # leading first
    return Polynomial(list(reversed(coeffs)))


def _is_diagonalizable(A: np.ndarray, rtol: float = 1e-8) -> bool:
    n = A.shape[0]
    w = np.linalg.eigvals(A)
    scale = max(np.abs(w).max(initial=0.0), 1.0)
    used = np.zeros(n, bool)
    for i in range(n):
        if used[i]:
            continue
        cluster = np.abs(w - w[i]) < 1e-6 * scale
        used |= cluster
        mult = int(cluster.sum())
        if mult == 1:
            continue
        sv = np.linalg.svd(A - w[i] * np.eye(n), compute_uv=False)
        rank = int((sv > rtol * max(sv.max(initial=0.0), 1e-300)).sum())
        if rank != n - mult:
            return False
    return True


def model_from_matrix(A: np.ndarray, rtol: float = 1e-8) -> MatrixClassification:
    """Classify A as the shift matrix of a regular model (minimal equals
    characteristic polynomial), a realizable nonregular model (diagonalizable),
    or unrealizable within the separable-module scope."""
    A = np.asarray(A, dtype=float) if np.isrealobj(A) else np.asarray(A)
    n = A.shape[0]
    m = minimal_polynomial(A, rtol)
    if m.degree == n:
        return MatrixClassification("regular", m, None, m)
    if _is_diagonalizable(A, rtol):
        # realize on C[x]/(x^n - 1): q interpolates eigenvalues at roots of unity
        w = np.linalg.eigvals(A)
        order = np.argsort(-w.real)
        lam = w[order]
        beta = np.exp(-2j * np.pi * np.arange(n) / n)
        V = np.vander(beta, n, increasing=True)
        qc = np.linalg.solve(V, lam)
        p = Polynomial([-1.0] + [0.0] * (n - 1) + [1.0])
        q = Polynomial(list(qc))
        return MatrixClassification("nonregular", p, q, m)
    return MatrixClassification("unrealizable", None, None, m)


@dataclasses.dataclass(frozen=True)
class SubalgebraReport:
    dimension: int
    injective: bool
    values: tuple
    rank_dimension: int


def subalgebra_of(p: Polynomial, q: Polynomial, tol: float = 1e-8) -> SubalgebraReport:
    """Dimension of the subalgebra generated by q inside C[x]/p: the number of
    distinct values q takes on the zeros of p, cross-checked by the numeric
    rank of the powers of the reduced multiplication matrix."""
    if not is_separable(p):
        raise ValueError("p must be separable")
    n = p.degree
    model = SignalModel(p, monomial_basis())
    zeros = model.zeros().astype(complex)
    vals = np.array([q(z) for z in zeros])
    scale = max(np.abs(vals).max(initial=0.0), 1.0)
    distinct = []
    for v in vals:
        if all(abs(v - u) > tol * scale for u in distinct):
            distinct.append(v)
    dim = len(distinct)
    Q = filter_matrix(model, q % p).astype(complex)
    powers = [np.eye(n, dtype=complex)]
    for _ in range(n - 1):
        powers.append(powers[-1] @ Q)
    stack = np.column_stack([P.reshape(-1) for P in powers])
    sv = np.linalg.svd(stack, compute_uv=False)
    rank = int((sv > tol * max(sv.max(initial=0.0), 1e-300)).sum())
    return SubalgebraReport(dim, dim == n, tuple(distinct), rank)
