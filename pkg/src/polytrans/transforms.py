"""Generators for the finite transform catalog.

Families: the cosine/sine transforms of types 1-8 (unscaled, polynomial, and
orthogonal variants), their skew generalizations and skew inverses, the four
complex exponential transforms and their real and cas-kernel counterparts,
the rational block-recursive transform for two-power sizes, transforms built
from arbitrary three-term orthogonal-polynomial recurrences, generalized
Vandermonde matrices, and Kronecker products of any of these.
"""
from __future__ import annotations

import dataclasses
import json
import math
from fractions import Fraction
from typing import Callable, Optional, Sequence

import numpy as np

from .poly import (
    Polynomial,
    boundary_polynomial,
    cheb_eval_trig,
    cheb_poly,
)
from .model import (
    BasisSpec,
    SignalModel,
    chebyshev_basis,
    monomial_basis,
    scaled_endpoint_basis,
)


class InvalidSizeError(ValueError):
    pass


class PairingMismatchError(ValueError):
    """unscaled . polynomial^-1 failed to be diagonal."""


class UnsupportedVariantError(ValueError):
    pass


# ---------------------------------------------------------------------------
# Catalog data for the 16 cosine/sine transforms
# ---------------------------------------------------------------------------

@dataclasses.dataclass(frozen=True)
class DttInfo:
    kind: str        # Chebyshev basis kind of the model
    bc: str          # right boundary tag (see poly.BOUNDARY_TAGS)
    theta_num: float     # theta_k = (k + theta_num) * pi / theta_den(n)
    theta_den: Callable[[int], float]
    min_n: int = 1


DTT_INFO = {
    # T-basis row: these equal their own polynomial transforms
    "dct1": DttInfo("T", "ws", 0.0, lambda n: n - 1, min_n=2),
    "dct3": DttInfo("T", "wa", 0.5, lambda n: n),
    "dct5": DttInfo("T", "hs", 0.0, lambda n: n - 0.5),
    "dct7": DttInfo("T", "ha", 0.5, lambda n: n - 0.5),
    # U-basis row
    "dst1": DttInfo("U", "wa", 1.0, lambda n: n + 1),
    "dst3": DttInfo("U", "ws", 0.5, lambda n: n),
    "dst5": DttInfo("U", "ha", 1.0, lambda n: n + 0.5),
    "dst7": DttInfo("U", "hs", 0.5, lambda n: n + 0.5),
    # V-basis row
    "dct2": DttInfo("V", "hs", 0.0, lambda n: n),
    "dct4": DttInfo("V", "ha", 0.5, lambda n: n),
    "dct6": DttInfo("V", "ws", 0.0, lambda n: n - 0.5),
    "dct8": DttInfo("V", "wa", 0.5, lambda n: n + 0.5),
    # W-basis row
    "dst2": DttInfo("W", "ha", 1.0, lambda n: n),
    "dst4": DttInfo("W", "hs", 0.5, lambda n: n),
    "dst6": DttInfo("W", "wa", 1.0, lambda n: n + 0.5),
    "dst8": DttInfo("W", "ws", 0.5, lambda n: n - 0.5),
}

DTT_NAMES = tuple(DTT_INFO)

#: column offset and trig kernel implied by the basis kind
_KIND_OFFSET = {"T": 0.0, "U": 1.0, "V": 0.5, "W": 0.5}

#: row scaling f(theta) with unscaled = diag(f(theta_k)) . polynomial
def _kind_rowscale(kind: str, theta: float) -> float:
    if kind == "T":
        return 1.0
    if kind == "U":
        return math.sin(theta)
    if kind == "V":
        return math.cos(theta / 2)
    return math.sin(theta / 2)


#: orthogonal variants: sqrt(2/den) with 1/sqrt(2) endpoint factors.
#: tags: "" none, "c" at index 0, "d" at index n-1, "cd" both.
ORTHO_SCALING = {
    "dct1": (lambda n: n - 1, "cd", "cd"),
    "dst1": (lambda n: n + 1, "", ""),
    "dct2": (lambda n: n, "c", ""),
    "dst2": (lambda n: n, "d", ""),
    "dct3": (lambda n: n, "", "c"),
    "dst3": (lambda n: n, "", "d"),
    "dct4": (lambda n: n, "", ""),
    "dst4": (lambda n: n, "", ""),
    "dct5": (lambda n: n - 0.5, "c", "c"),
    "dst5": (lambda n: n + 0.5, "", ""),
    "dct6": (lambda n: n - 0.5, "c", "d"),
    "dst6": (lambda n: n + 0.5, "", ""),
    "dct7": (lambda n: n - 0.5, "d", "c"),
    "dst7": (lambda n: n + 0.5, "", ""),
    "dct8": (lambda n: n + 0.5, "", ""),
    "dst8": (lambda n: n - 0.5, "d", "d"),
}

#: the four transforms that accept a skew parameter (shared module T_n - cos(r pi))
SKEW_FAMILIES = ("dct3", "dst3", "dct4", "dst4")


def _endpoint_vector(tag: str, n: int) -> np.ndarray:
    v = np.ones(n)
    if "c" in tag:
        v[0] = 1 / math.sqrt(2)
    if "d" in tag:
        v[-1] = 1 / math.sqrt(2)
    return v


def dtt_theta(name: str, n: int) -> np.ndarray:
    info = DTT_INFO[name]
    if n < info.min_n:
        raise InvalidSizeError(f"{name} needs n >= {info.min_n}")
    den = info.theta_den(n)
    return (np.arange(n) + info.theta_num) * math.pi / den


def dtt_unscaled(name: str, n: int) -> np.ndarray:
    info = DTT_INFO[name]
    theta = dtt_theta(name, n)
    ofs = _KIND_OFFSET[info.kind]
    trig = np.cos if name.startswith("dct") else np.sin
    return trig(np.outer(theta, np.arange(n) + ofs))


def dtt_polynomial(name: str, n: int) -> np.ndarray:
    info = DTT_INFO[name]
    theta = dtt_theta(name, n)
    M = np.empty((n, n))
    for k, th in enumerate(theta):
        for ell in range(n):
            M[k, ell] = cheb_eval_trig(info.kind, ell, th)
    return M


def dtt_rowscale(name: str, n: int) -> np.ndarray:
    info = DTT_INFO[name]
    return np.array([_kind_rowscale(info.kind, th) for th in dtt_theta(name, n)])


def dtt_orthogonal(name: str, n: int) -> np.ndarray:
    den, rtag, ctag = ORTHO_SCALING[name]
    s = math.sqrt(2.0 / den(n))
    return s * _endpoint_vector(rtag, n)[:, None] \
             * _endpoint_vector(ctag, n)[None, :] * dtt_unscaled(name, n)


# ---------------------------------------------------------------------------
# Skew transforms
# ---------------------------------------------------------------------------

def skew_zeros(n: int, r) -> list:
    """Zero parameters r_k (zeros are cos(r_k pi)), interleaved and ascending."""
    r = float(r)
    if not 0.0 <= r <= 1.0:
        raise ValueError("skew parameter must lie in [0, 1]")
    rs = []
    for i in range(n // 2):
        rs += [(r + 2 * i) / n, (2 - r + 2 * i) / n]
    if n % 2:
        rs.append((r + n - 1) / n)
    return sorted(rs)


def skew_unscaled(name: str, n: int, r) -> np.ndarray:
    if name not in SKEW_FAMILIES:
        raise UnsupportedVariantError(f"{name} has no skew generalization")
    rk = np.array(skew_zeros(n, r))[:, None] * math.pi
    ell = np.arange(n)[None, :].astype(float)
    ofs = _KIND_OFFSET[DTT_INFO[name].kind]
    trig = np.cos if name.startswith("dct") else np.sin
    return trig(rk * (ell + ofs))


def skew_polynomial(name: str, n: int, r) -> np.ndarray:
    kind = DTT_INFO[name].kind
    rk = skew_zeros(n, r)
    M = np.empty((n, n))
    for k, rr in enumerate(rk):
        th = rr * math.pi
        for ell in range(n):
            M[k, ell] = cheb_eval_trig(kind, ell, th)
    return M


def skew_inverse(name: str, n: int, r) -> np.ndarray:
    """The rescaled inverses of the four skew transforms; at r = 1/2 they
    coincide with dct2, dst2, dct4, dst4 respectively."""
    base = {"idct3": "dct3", "idst3": "dst3", "idct4": "dct4", "idst4": "dst4"}[name]
    M = np.linalg.inv(skew_unscaled(base, n, r))
    if base == "dct3":
        d = np.ones(n); d[0] = 2.0
    elif base == "dst3":
        d = np.ones(n); d[-1] = 2.0
    else:
        d = np.ones(n)
    return (n / 2.0) * d[:, None] * M


def skew_translation(name: str, n: int, r) -> np.ndarray:
    """X with skew_transform = plain_transform @ X; x-shaped with the two
    diagonals added where they intersect."""
    if name not in SKEW_FAMILIES:
        raise UnsupportedVariantError(f"{name} has no skew generalization")
    r = float(r)
    X = np.zeros((n, n))
    if name == "dct3":
        X[0, 0] = 1.0
        for ell in range(1, n):
            a = (0.5 - r) * ell * math.pi / n
            X[ell, ell] += math.cos(a)
            X[n - ell, ell] += math.sin(a)
    elif name == "dst3":
        for ell in range(n - 1):
            a = (0.5 - r) * (ell + 1) * math.pi / n
            X[ell, ell] += math.cos(a)
            X[n - ell - 2, ell] += -math.sin(a)
        X[n - 1, n - 1] += math.cos((0.5 - r) * math.pi)
    else:
        sgn = 1.0 if name == "dct4" else -1.0
        for ell in range(n):
            a = (0.5 - r) * (2 * ell + 1) * math.pi / (2 * n)
            X[ell, ell] += math.cos(a)
            X[n - 1 - ell, ell] += sgn * math.sin(a)
    return X


def _cos_pi_exact(r: Fraction):
    """cos(r*pi) as an exact rational when it is one, else a float."""
    table = {Fraction(0): Fraction(1), Fraction(1, 3): Fraction(1, 2),
             Fraction(1, 2): Fraction(0), Fraction(2, 3): Fraction(-1, 2),
             Fraction(1): Fraction(-1)}
    if r in table:
        return table[r]
    return math.cos(float(r) * math.pi)


# ---------------------------------------------------------------------------
# Complex exponential family and relatives
# ---------------------------------------------------------------------------

def _dft_offsets(t: int):
    if t not in (1, 2, 3, 4):
        raise InvalidSizeError("exponential-family type must be 1..4")
    return (0.5 if t in (3, 4) else 0.0), (0.5 if t in (2, 4) else 0.0)


def dft_matrix(t: int, n: int) -> np.ndarray:
    c, d = _dft_offsets(t)
    k, ell = np.mgrid[0:n, 0:n].astype(float)
    return np.exp(-2j * math.pi * (k + c) * (ell + d) / n)


#: last row index (as a real bound) that carries the cos kernel per type
_RDFT_COS_BOUND = {1: lambda n: n / 2, 2: lambda n: (n - 1) / 2,
                   3: lambda n: (n - 1) / 2, 4: lambda n: n / 2 - 1}


def rdft_matrix(t: int, n: int) -> np.ndarray:
    c, d = _dft_offsets(t)
    bound = _RDFT_COS_BOUND[t](n)
    M = np.empty((n, n))
    for k in range(n):
        for ell in range(n):
            a = 2 * math.pi * (k + c) * (ell + d) / n
            M[k, ell] = math.cos(a) if k <= bound else -math.sin(a)
    return M


def dht_matrix(t: int, n: int) -> np.ndarray:
    c, d = _dft_offsets(t)
    k, ell = np.mgrid[0:n, 0:n].astype(float)
    a = 2 * math.pi * (k + c) * (ell + d) / n
    return np.cos(a) + np.sin(a)


def rdft_orthogonal_diagonal(t: int, n: int) -> np.ndarray:
    """Endpoint diagonal making sqrt(2/n) * D * rdft orthogonal: 1/sqrt(2) at
    the full-norm rows."""
    dvec = np.ones(n)
    if t in (1, 2):
        dvec[0] = 1 / math.sqrt(2)
        if n % 2 == 0:
            dvec[n // 2] = 1 / math.sqrt(2)
    else:
        if n % 2 == 1:
            dvec[(n - 1) // 2] = 1 / math.sqrt(2)
    return dvec


def qdft_matrix(n: int) -> np.ndarray:
    """Two-power block-recursive rational transform; all entries integers."""
    if n < 2 or n & (n - 1):
        raise InvalidSizeError("this family needs a two-power size >= 2")
    if n == 2:
        return np.array([[1.0, 1.0], [1.0, -1.0]])
    m = n // 2
    top = qdft_matrix(m)
    left = np.block([[top, np.zeros((m, m))], [np.zeros((m, m)), np.eye(m)]])
    return left @ np.kron(np.array([[1.0, 1.0], [1.0, -1.0]]), np.eye(m))


def qdft_block_sizes(n: int) -> list:
    sizes = [1, 1]
    while sum(sizes) < n:
        sizes.append(sizes[-1] * 2 if len(sizes) > 2 else 2)
    return sizes


# ---------------------------------------------------------------------------
# Three-term-recurrence (orthogonal polynomial) transforms
# ---------------------------------------------------------------------------

@dataclasses.dataclass(frozen=True)
class Recurrence:
    """x * P_k = a(k) P_{k-1} + b(k) P_k + c(k) P_{k+1}, with a(k), c(k) != 0
    for k >= 1, and squared norms mu(k) of P_k under the family's weight."""

    a: Callable[[int], Fraction]
    b: Callable[[int], Fraction]
    c: Callable[[int], Fraction]
    mu: Callable[[int], float]
    name: str = "custom"

    def polynomials(self, count: int) -> list:
        ps = [Polynomial.one()]
        x = Polynomial.x()
        for k in range(count - 1):
            prev = ps[k - 1] if k >= 1 else Polynomial.zero()
            ck = self.c(k)
            if ck == 0 or (k >= 1 and self.a(k) == 0):
                raise InvalidSizeError("recurrence needs nonzero neighbor coefficients")
            inv = Fraction(1) / ck if isinstance(ck, (int, Fraction)) else 1.0 / ck
            nxt = (x * ps[k] - self.b(k) * ps[k] - self.a(k) * prev) * inv
            ps.append(nxt)
        return ps


GNN_RECURRENCES = {
    "chebyshev-t": Recurrence(
        a=lambda k: Fraction(1, 2), b=lambda k: Fraction(0),
        c=lambda k: Fraction(1) if k == 0 else Fraction(1, 2),
        mu=lambda k: math.pi if k == 0 else math.pi / 2,
        name="chebyshev-t"),
    "chebyshev-u": Recurrence(
        a=lambda k: Fraction(1, 2), b=lambda k: Fraction(0),
        c=lambda k: Fraction(1, 2),
        mu=lambda k: math.pi / 2,
        name="chebyshev-u"),
    "legendre": Recurrence(
        a=lambda k: Fraction(k, 2 * k + 1), b=lambda k: Fraction(0),
        c=lambda k: Fraction(k + 1, 2 * k + 1),
        mu=lambda k: 2.0 / (2 * k + 1),
        name="legendre"),
}


def recurrence_from_weight(a, b, c, weight: Callable[[float], float],
                           support=(-1.0, 1.0), nodes_factor: int = 4,
                           count_hint: int = 32, name: str = "custom") -> Recurrence:
    """Recurrence with mu computed by Gauss-Legendre quadrature of the weight
    at nodes_factor * count nodes on the support interval."""
    lo, hi = support

    def mu(k: int, _cache={}) -> float:
        if k not in _cache:
            rec = Recurrence(a, b, c, lambda _: 1.0)
            ps = rec.polynomials(k + 1)
            nn = nodes_factor * max(count_hint, k + 1)
            x, w = np.polynomial.legendre.leggauss(nn)
            xs = 0.5 * (hi - lo) * x + 0.5 * (hi + lo)
            ws = 0.5 * (hi - lo) * w
            vals = np.array([float(ps[k](t)) for t in xs])
            _cache[k] = float(np.sum(ws * vals ** 2 * np.array([weight(t) for t in xs])))
        return _cache[k]

    return Recurrence(a, b, c, mu, name=name)


def gnn_zeros(rec: Recurrence, n: int) -> np.ndarray:
    """Zeros of P_n, descending — eigenvalues of the symmetrized tridiagonal
    coefficient matrix."""
    diag = np.array([float(rec.b(k)) for k in range(n)])
    off = np.array([math.sqrt(float(rec.c(k)) * float(rec.a(k + 1)))
                    for k in range(n - 1)])
    J = np.diag(diag) + np.diag(off, 1) + np.diag(off, -1)
    return np.sort(np.linalg.eigvalsh(J))[::-1]


def gnn_polynomial_matrix(rec: Recurrence, n: int) -> np.ndarray:
    ps = rec.polynomials(n)
    alpha = gnn_zeros(rec, n)
    return np.array([[float(p(a)) for p in ps] for a in alpha])


def gnn_orthogonal_matrix(rec: Recurrence, n: int) -> np.ndarray:
    """sqrt(D) . P . sqrt(E) with E from the norms and D from the reproducing
    kernel at equal arguments."""
    P = gnn_polynomial_matrix(rec, n)
    mu = np.array([rec.mu(k) for k in range(n)])
    E = 1.0 / mu
    D = 1.0 / ((P ** 2) * E[None, :]).sum(axis=1)
    return np.sqrt(D)[:, None] * P * np.sqrt(E)[None, :]


def gnn_model(rec: Recurrence, n: int) -> SignalModel:
    ps = rec.polynomials(n + 1)
    basis = BasisSpec("custom", elements=tuple(ps[:n]))
    return SignalModel(ps[n], basis, alpha=tuple(gnn_zeros(rec, n)),
                       name=f"gnn-{rec.name}:{n}")


def dct1_orthogonality_diagonals(n: int):
    """(D, E) with sqrt(D) . dct1 . sqrt(E) orthogonal: the endpoint-weighted
    quadrature construction for the T-basis transform with mirrored boundary."""
    if n < 2:
        raise InvalidSizeError("need n >= 2")
    D = np.full(n, 1.0 / (n - 1))
    D[0] = D[-1] = 1.0 / (2 * (n - 1))
    E = np.full(n, 2.0)
    E[0] = E[-1] = 1.0
    return D, E


# ---------------------------------------------------------------------------
# Vandermonde and tensor
# ---------------------------------------------------------------------------

def vandermonde(alpha: Sequence, basis: Optional[BasisSpec] = None) -> np.ndarray:
    """[basis_element_ell(alpha_k)] — the polynomial transform for explicit
    evaluation points; classic Vandermonde for the monomial basis."""
    basis = basis or monomial_basis()
    n = len(alpha)
    M = np.array([[complex(basis.element(ell)(a)) for ell in range(n)] for a in alpha])
    if np.abs(M.imag).max(initial=0.0) == 0.0:
        M = M.real
    return M


# ---------------------------------------------------------------------------
# TransformSpec: the string-addressable catalog
# ---------------------------------------------------------------------------

VARIANTS = ("unscaled", "polynomial", "orthogonal", "unitary")


@dataclasses.dataclass(frozen=True)
class TransformSpec:
    family: str
    n: int = 0
    variant: str = "unscaled"
    r: Optional[Fraction] = None
    factors: tuple = ()            # tensor factors (TransformSpec)
    recurrence: Optional[str] = None   # preset name for the gnn family

    def __str__(self) -> str:
        if self.family == "tensor":
            return "tensor(" + ",".join(str(f) for f in self.factors) + ")"
        parts = [self.family, str(self.n)]
        if self.r is not None:
            parts.append(f"r={self.r}")
        if self.variant != "unscaled":
            parts.append(f"variant={self.variant}")
        return ":".join(parts)


_GNN_ALIASES = {f"gnn-{k}": k for k in GNN_RECURRENCES}

FAMILY_NAMES = tuple(
    list(DTT_NAMES)
    + ["idct3", "idst3", "idct4", "idst4"]
    + [f"dft{t}" for t in (1, 2, 3, 4)]
    + [f"rdft{t}" for t in (1, 2, 3, 4)]
    + [f"dht{t}" for t in (1, 2, 3, 4)]
    + ["qdft"]
    + list(_GNN_ALIASES)
)


def parse_spec(text: str) -> TransformSpec:
    text = text.strip()
    if text.startswith("tensor(") and text.endswith(")"):
        inner = text[len("tensor("):-1]
        parts, depth, cur = [], 0, ""
        for ch in inner:
            if ch == "," and depth == 0:
                parts.append(cur); cur = ""
                continue
            if ch == "(":
                depth += 1
            elif ch == ")":
                depth -= 1
            cur += ch
        parts.append(cur)
        return TransformSpec("tensor", factors=tuple(parse_spec(p) for p in parts))
    fields = text.split(":")
    family = fields[0].lower()
    if family not in FAMILY_NAMES:
        raise ValueError(
            f"unknown transform family {family!r}; valid families: "
            + ", ".join(FAMILY_NAMES) + ", tensor(...)")
    if len(fields) < 2:
        raise ValueError(f"spec {text!r} is missing a size, e.g. {family}:8")
    try:
        n = int(fields[1])
    except ValueError:
        raise ValueError(f"bad size {fields[1]!r} in spec {text!r}") from None
    variant = "unscaled"
    r = None
    for f in fields[2:]:
        if "=" not in f:
            raise ValueError(f"bad option {f!r} in spec {text!r}")
        key, val = f.split("=", 1)
        if key == "r":
            r = Fraction(val)
            if not 0 <= r <= 1:
                raise ValueError("skew parameter r must lie in [0, 1]")
        elif key == "variant":
            if val not in VARIANTS:
                raise ValueError(f"unknown variant {val!r}; valid: {VARIANTS}")
            variant = val
        else:
            raise ValueError(f"unknown option key {key!r} in spec {text!r}")
    rec = _GNN_ALIASES.get(family)
    return TransformSpec(family, n, variant, r, recurrence=rec)


@dataclasses.dataclass(frozen=True)
class TransformMatrix:
    entries: np.ndarray
    spec: TransformSpec
    alpha: Optional[tuple] = None
    scaling: Optional[tuple] = None
    model: Optional[SignalModel] = None

    @property
    def n(self) -> int:
        return self.entries.shape[0]


def model_for(spec: TransformSpec) -> Optional[SignalModel]:
    """The signal model a transform decomposes, when it has one."""
    fam, n = spec.family, spec.n
    if fam in DTT_NAMES:
        info = DTT_INFO[fam]
        if spec.r is not None:
            if fam not in SKEW_FAMILIES:
                raise UnsupportedVariantError(f"{fam} takes no skew parameter")
            shift = _cos_pi_exact(spec.r)
            p = boundary_polynomial("T", "wa", n, shift=shift)
            alpha = tuple(math.cos(rr * math.pi) for rr in skew_zeros(n, spec.r))
            return SignalModel(p, chebyshev_basis(info.kind), alpha=alpha,
                               name=str(spec))
        p = boundary_polynomial(info.kind, info.bc, n)
        alpha = tuple(np.cos(dtt_theta(fam, n)))
        basis = chebyshev_basis(info.kind)
        if spec.variant == "orthogonal":
            basis = scaled_endpoint_basis(info.kind, p)
        return SignalModel(p, basis, alpha=alpha, name=str(spec))
    if fam.startswith("dft") or fam.startswith("rdft") or fam.startswith("dht") or fam == "qdft":
        t = 1 if fam == "qdft" else int(fam[-1])
        a = -1 if t in (3, 4) else 1
        p = Polynomial([-a] + [0] * (n - 1) + [1])
        c, _ = _dft_offsets(t)
        alpha = tuple(np.exp(-2j * math.pi * (np.arange(n) + c) / n))
        return SignalModel(p, monomial_basis(), alpha=alpha, name=str(spec))
    if spec.recurrence:
        return gnn_model(GNN_RECURRENCES[spec.recurrence], n)
    return None


def generate(spec) -> TransformMatrix:
    """Generate the dense matrix for a spec (TransformSpec or spec string)."""
    if isinstance(spec, str):
        spec = parse_spec(spec)
    fam, n, variant = spec.family, spec.n, spec.variant
    if fam == "tensor":
        tms = [generate(f) for f in spec.factors]
        M = tms[0].entries
        for t in tms[1:]:
            M = np.kron(M, t.entries)
        return TransformMatrix(M, spec)
    if n < 1:
        raise InvalidSizeError("size must be >= 1")

    alpha = scaling = model = None
    if fam in DTT_NAMES:
        if spec.r is not None:
            if variant == "unscaled":
                M = skew_unscaled(fam, n, spec.r)
            elif variant == "polynomial":
                M = skew_polynomial(fam, n, spec.r)
            else:
                raise UnsupportedVariantError(
                    "skew transforms support unscaled/polynomial variants")
            rk = skew_zeros(n, spec.r)
            alpha = tuple(math.cos(rr * math.pi) for rr in rk)
            kind = DTT_INFO[fam].kind
            scaling = tuple(_kind_rowscale(kind, rr * math.pi) for rr in rk)
        else:
            if variant == "unscaled":
                M = dtt_unscaled(fam, n)
            elif variant == "polynomial":
                M = dtt_polynomial(fam, n)
            elif variant == "orthogonal":
                M = dtt_orthogonal(fam, n)
            else:
                raise UnsupportedVariantError(f"{fam} has no {variant} variant")
            alpha = tuple(np.cos(dtt_theta(fam, n)))
            scaling = tuple(dtt_rowscale(fam, n))
        model = model_for(spec)
    elif fam in ("idct3", "idst3", "idct4", "idst4"):
        r = spec.r if spec.r is not None else Fraction(1, 2)
        M = skew_inverse(fam, n, r)
    elif fam.startswith("dft"):
        t = int(fam[-1])
        M = dft_matrix(t, n)
        if variant == "unitary":
            M = M / math.sqrt(n)
        elif variant != "unscaled":
            raise UnsupportedVariantError(f"{fam} has unscaled/unitary variants")
        model = model_for(spec)
        alpha = tuple(model.alpha)
    elif fam.startswith("rdft"):
        t = int(fam[-1])
        M = rdft_matrix(t, n)
        if variant == "orthogonal":
            M = math.sqrt(2.0 / n) * rdft_orthogonal_diagonal(t, n)[:, None] * M
        elif variant != "unscaled":
            raise UnsupportedVariantError(f"{fam} has unscaled/orthogonal variants")
        model = model_for(spec)
    elif fam.startswith("dht"):
        t = int(fam[-1])
        M = dht_matrix(t, n)
        if variant == "orthogonal":
            M = M / math.sqrt(n)
        elif variant != "unscaled":
            raise UnsupportedVariantError(f"{fam} has unscaled/orthogonal variants")
        model = model_for(spec)
    elif fam == "qdft":
        M = qdft_matrix(n)
        model = model_for(spec)
        alpha = tuple(model.alpha)
    elif spec.recurrence:
        rec = GNN_RECURRENCES[spec.recurrence]
        if variant in ("unscaled", "polynomial"):
            M = gnn_polynomial_matrix(rec, n)
        elif variant == "orthogonal":
            M = gnn_orthogonal_matrix(rec, n)
        else:
            raise UnsupportedVariantError(f"{fam} has no {variant} variant")
        model = model_for(spec)
        alpha = tuple(model.alpha)
    else:
        raise ValueError(f"cannot generate family {fam!r}")
    return TransformMatrix(np.asarray(M), spec, alpha=alpha,
                           scaling=scaling, model=model)


def derive_scaling(unscaled: TransformMatrix, polynomial: TransformMatrix,
                   tol: float = 1e-8) -> np.ndarray:
    """Diagonal D with unscaled = D . polynomial; raises PairingMismatchError
    when the quotient is not diagonal (a wrong basis/module association)."""
    U, P = np.asarray(unscaled.entries), np.asarray(polynomial.entries)
    if U.shape != P.shape:
        raise ValueError("matrices must have equal shapes")
    D = U @ np.linalg.inv(P)
    off = D - np.diag(np.diag(D))
    if np.abs(off).max() >= tol * max(np.abs(D).max(), 1e-300):
        raise PairingMismatchError(
            f"off-diagonal residual {np.abs(off).max():.3e} exceeds tolerance")
    return np.diag(D)


def tensor(a: TransformMatrix, b: TransformMatrix) -> TransformMatrix:
    spec = TransformSpec("tensor", factors=(a.spec, b.spec))
    return TransformMatrix(np.kron(a.entries, b.entries), spec)


# ---------------------------------------------------------------------------
# Export formats
# ---------------------------------------------------------------------------

def _fmt(x: float) -> str:
    return format(float(x), ".17g")


def to_csv(tm: TransformMatrix) -> str:
    """Header "name,n,variant[,r]" then the matrix rows (17 significant
    digits; complex entries as paired re,im columns)."""
    import csv as _csv
    import io
    buf = io.StringIO()
    w = _csv.writer(buf, lineterminator="\n")
    header = [str(tm.spec) if tm.spec.family == "tensor" else tm.spec.family,
              str(tm.n), tm.spec.variant]
    if tm.spec.r is not None:
        header.append(str(tm.spec.r))
    w.writerow(header)
    M = np.asarray(tm.entries)
    for row in M:
        cells = []
        for x in row:
            if np.iscomplexobj(M):
                cells += [_fmt(x.real), _fmt(x.imag)]
            else:
                cells.append(_fmt(x))
        w.writerow(cells)
    return buf.getvalue()


def from_csv(text: str):
    """Parse to_csv output back into (header fields, matrix)."""
    import csv as _csv
    import io
    rows = list(_csv.reader(io.StringIO(text)))
    header, data = rows[0], rows[1:]
    n = int(header[1])
    out = []
    for row in data:
        vals = [float(c) for c in row]
        if len(vals) == 2 * n:
            out.append([complex(vals[2 * i], vals[2 * i + 1]) for i in range(n)])
        else:
            out.append(vals)
    return header, np.array(out)


def _jsonable(M: np.ndarray):
    if np.iscomplexobj(M):
        return [[[x.real, x.imag] for x in row] for row in np.asarray(M)]
    return [[float(x) for x in row] for row in np.asarray(M)]


def to_json(tm: TransformMatrix) -> str:
    payload = {
        "spec": str(tm.spec),
        "entries": _jsonable(tm.entries),
        "alpha": None if tm.alpha is None else [
            [complex(a).real, complex(a).imag] for a in tm.alpha],
        "scaling": None if tm.scaling is None else [float(s) for s in tm.scaling],
    }
    return json.dumps(payload, indent=2)
