"""Exact univariate polynomial arithmetic and the four Chebyshev families.

Polynomials carry their coefficients as a dense tuple starting with the
constant term. Coefficients are exact rationals (``fractions.Fraction``)
whenever the inputs are rational; float or complex coefficients flow through
the same arithmetic for the few boundary polynomials with transcendental
constants. All other modules reduce against this substrate.
"""
from __future__ import annotations

import dataclasses
import functools
import math
from fractions import Fraction
from typing import Sequence, Union

Scalar = Union[int, Fraction, float, complex]

CHEB_KINDS = ("T", "U", "V", "W")

#: Boundary-condition tags, named for the signal symmetry they encode at the
#: right edge: whole-sample / half-sample, symmetric / antisymmetric.
#:   ws: C_n = C_{n-2}    wa: C_n = 0    hs: C_n = C_{n-1}    ha: C_n = -C_{n-1}
BOUNDARY_TAGS = ("ws", "wa", "hs", "ha")


class InvalidModulusError(ValueError):
    """Raised when a reduction modulus is constant or zero."""


def _coerce(c: Scalar) -> Scalar:
    if isinstance(c, int):
        return Fraction(c)
    return c


@dataclasses.dataclass(frozen=True)
class Polynomial:
    """Dense univariate polynomial; ``coeffs[i]`` multiplies x**i.

    Trailing zero coefficients are trimmed; the zero polynomial has an empty
    coefficient tuple and degree -1.
    """

    coeffs: tuple

    def __init__(self, coeffs: Sequence[Scalar] = ()):
        cs = [_coerce(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    # -- basic queries ----------------------------------------------------
    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def leading(self) -> Scalar:
        if self.is_zero():
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def coeff(self, i: int) -> Scalar:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    def is_exact(self) -> bool:
        return all(isinstance(c, Fraction) for c in self.coeffs)

    # -- constructors ------------------------------------------------------
    @staticmethod
    def zero() -> "Polynomial":
        return Polynomial(())

    @staticmethod
    def one() -> "Polynomial":
        return Polynomial((1,))

    @staticmethod
    def x() -> "Polynomial":
        return Polynomial((0, 1))

    @staticmethod
    def monomial(k: int, c: Scalar = 1) -> "Polynomial":
        if k < 0:
            raise ValueError("monomial exponent must be >= 0")
        return Polynomial((0,) * k + (c,))

    # -- arithmetic ---------------------------------------------------------
    def __add__(self, other) -> "Polynomial":
        other = _as_poly(other)
        m = max(len(self.coeffs), len(other.coeffs))
        return Polynomial([self.coeff(i) + other.coeff(i) for i in range(m)])

    __radd__ = __add__

    def __sub__(self, other) -> "Polynomial":
        other = _as_poly(other)
        m = max(len(self.coeffs), len(other.coeffs))
        return Polynomial([self.coeff(i) - other.coeff(i) for i in range(m)])

    def __rsub__(self, other) -> "Polynomial":
        return _as_poly(other) - self

    def __neg__(self) -> "Polynomial":
        return Polynomial([-c for c in self.coeffs])

    def __mul__(self, other) -> "Polynomial":
        other = _as_poly(other)
        if self.is_zero() or other.is_zero():
            return Polynomial.zero()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Polynomial":
        if k < 0:
            raise ValueError("negative power; use inv_mod for modular inverses")
        result = Polynomial.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __divmod__(self, d: "Polynomial"):
        d = _as_poly(d)
        if d.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        q = [Fraction(0)] * max(len(self.coeffs) - len(d.coeffs) + 1, 1)
        r = list(self.coeffs)
        dl = d.leading()
        while len(r) >= len(d.coeffs) and any(c != 0 for c in r):
            if r[-1] == 0:
                r.pop()
                continue
            shift = len(r) - len(d.coeffs)
            factor = r[-1] / dl
            q[shift] = factor
            for i, c in enumerate(d.coeffs):
                r[shift + i] -= factor * c
            r.pop()
        return Polynomial(q), Polynomial(r)

    def __mod__(self, d: "Polynomial") -> "Polynomial":
        return divmod(self, d)[1]

    def __floordiv__(self, d: "Polynomial") -> "Polynomial":
        return divmod(self, d)[0]

    # -- evaluation ----------------------------------------------------------
    def __call__(self, x):
        """Evaluate by Horner's rule; x may be a number or a Polynomial."""
        if isinstance(x, Polynomial):
            acc = Polynomial.zero()
            for c in reversed(self.coeffs):
                acc = acc * x + Polynomial((c,))
            return acc
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> "Polynomial":
        return Polynomial([i * c for i, c in enumerate(self.coeffs)][1:])

    def monic(self) -> "Polynomial":
        if self.is_zero():
            return self
        lead = self.leading()
        return Polynomial([c / lead for c in self.coeffs])

    def as_floats(self) -> list:
        return [complex(c).real if complex(c).imag == 0 else complex(c)
                for c in self.coeffs]

    def __repr__(self) -> str:
        if self.is_zero():
            return "Polynomial('0')"
        parts = []
        for i in reversed(range(len(self.coeffs))):
            c = self.coeffs[i]
            if c == 0:
                continue
            term = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            mag = "" if (abs(c) == 1 and term) else str(abs(c))
            sign = " - " if _is_neg(c) and parts else ("-" if _is_neg(c) else (" + " if parts else ""))
            parts.append(f"{sign}{mag}{term}")
        return f"Polynomial('{''.join(parts)}')"


def _is_neg(c: Scalar) -> bool:
    try:
        return c < 0
    except TypeError:
        return False


def _as_poly(v) -> Polynomial:
    if isinstance(v, Polynomial):
        return v
    return Polynomial((v,))


# ---------------------------------------------------------------------------
# Chebyshev families
# ---------------------------------------------------------------------------

_INITIAL = {
    "T": (Polynomial((1,)), Polynomial((0, 1))),
    "U": (Polynomial((1,)), Polynomial((0, 2))),
    "V": (Polynomial((1,)), Polynomial((-1, 2))),
    "W": (Polynomial((1,)), Polynomial((1, 2))),
}


@functools.lru_cache(maxsize=None)
def cheb_poly(kind: str, n: int) -> Polynomial:
    """Chebyshev polynomial C_n of the given kind (T, U, V, or W).

    Negative indices follow the reflection laws of the four families:
    T_{-n} = T_n, U_{-n} = -U_{n-2}, V_{-n} = V_{n-1}, W_{-n} = -W_{n-1}.
    """
    if kind not in CHEB_KINDS:
        raise ValueError(f"unknown Chebyshev kind {kind!r}; expected one of {CHEB_KINDS}")
    if n < 0:
        m = -n
        if kind == "T":
            return cheb_poly("T", m)
        if kind == "U":
            if m == 1:
                return Polynomial.zero()
            return -cheb_poly("U", m - 2)
        if kind == "V":
            return cheb_poly("V", m - 1)
        return -cheb_poly("W", m - 1)
    c0, c1 = _INITIAL[kind]
    if n == 0:
        return c0
    if n == 1:
        return c1
    two_x = Polynomial((0, 2))
    return two_x * cheb_poly(kind, n - 1) - cheb_poly(kind, n - 2)


def cheb_theta(kind: str, n: int) -> list:
    """Angles theta_k with cos(theta_k) the zeros of C_n, ascending in k."""
    if n < 1:
        raise ValueError("need n >= 1 zeros")
    if kind == "T":
        return [(k + 0.5) * math.pi / n for k in range(n)]
    if kind == "U":
        return [(k + 1) * math.pi / (n + 1) for k in range(n)]
    if kind == "V":
        return [(k + 0.5) * math.pi / (n + 0.5) for k in range(n)]
    if kind == "W":
        return [(k + 1) * math.pi / (n + 0.5) for k in range(n)]
    raise ValueError(f"unknown Chebyshev kind {kind!r}")


def cheb_zeros(kind: str, n: int) -> list:
    """The n real zeros of C_n via the closed angle forms (descending values)."""
    return [math.cos(t) for t in cheb_theta(kind, n)]


def cheb_eval_trig(kind: str, ell: int, theta: float) -> float:
    """Evaluate C_ell(cos theta) through the trigonometric closed form."""
    if kind == "T":
        return math.cos(ell * theta)
    if kind == "U":
        return math.sin((ell + 1) * theta) / math.sin(theta)
    if kind == "V":
        return math.cos((ell + 0.5) * theta) / math.cos(theta / 2)
    if kind == "W":
        return math.sin((ell + 0.5) * theta) / math.sin(theta / 2)
    raise ValueError(f"unknown Chebyshev kind {kind!r}")


def boundary_polynomial(kind: str, bc: str, n: int, shift: Scalar = 0) -> Polynomial:
    """The module polynomial p for basis kind C and right boundary condition.

    bc selects p among C_n - C_{n-2} ("ws"), C_n ("wa"), C_n - C_{n-1} ("hs"),
    C_n + C_{n-1} ("ha"). A nonzero ``shift`` subtracts a constant, giving the
    skew module polynomial C_n - ... - shift (used with bc="wa", kind="T").
    """
    if bc == "ws":
        p = cheb_poly(kind, n) - cheb_poly(kind, n - 2)
    elif bc == "wa":
        p = cheb_poly(kind, n)
    elif bc == "hs":
        p = cheb_poly(kind, n) - cheb_poly(kind, n - 1)
    elif bc == "ha":
        p = cheb_poly(kind, n) + cheb_poly(kind, n - 1)
    else:
        raise ValueError(f"unknown boundary tag {bc!r}; expected one of {BOUNDARY_TAGS}")
    if shift != 0:
        p = p - Polynomial((shift,))
    return p


def boundary_identity_rhs(kind: str, bc: str, n: int) -> Polynomial:
    """Closed product form of boundary_polynomial (the cross-family identity)."""
    x = Polynomial.x()
    one = Polynomial.one()
    rhs = {
        ("T", "ws"): lambda: 2 * (x * x - one) * cheb_poly("U", n - 2),
        ("T", "wa"): lambda: cheb_poly("T", n),
        ("T", "hs"): lambda: (x - one) * cheb_poly("W", n - 1),
        ("T", "ha"): lambda: (x + one) * cheb_poly("V", n - 1),
        ("U", "ws"): lambda: 2 * cheb_poly("T", n),
        ("U", "wa"): lambda: cheb_poly("U", n),
        ("U", "hs"): lambda: cheb_poly("V", n),
        ("U", "ha"): lambda: cheb_poly("W", n),
        ("V", "ws"): lambda: 2 * (x - one) * cheb_poly("W", n - 1),
        ("V", "wa"): lambda: cheb_poly("V", n),
        ("V", "hs"): lambda: 2 * (x - one) * cheb_poly("U", n - 1),
        ("V", "ha"): lambda: 2 * cheb_poly("T", n),
        ("W", "ws"): lambda: 2 * (x + one) * cheb_poly("V", n - 1),
        ("W", "wa"): lambda: cheb_poly("W", n),
        ("W", "hs"): lambda: 2 * cheb_poly("T", n),
        ("W", "ha"): lambda: 2 * (x + one) * cheb_poly("U", n - 1),
    }
    try:
        return rhs[(kind, bc)]()
    except KeyError:
        raise ValueError(f"unknown (kind, bc) pair ({kind!r}, {bc!r})") from None


def verify_cheb_identity(kind: str, bc: str, n: int) -> bool:
    """True iff the boundary combination equals its closed product form exactly."""
    return boundary_polynomial(kind, bc, n) == boundary_identity_rhs(kind, bc, n)


# ---------------------------------------------------------------------------
# Modular arithmetic
# ---------------------------------------------------------------------------

def _check_modulus(p: Polynomial) -> None:
    if p.degree < 1:
        raise InvalidModulusError("modulus must have degree >= 1")


def mul_mod(a: Polynomial, b: Polynomial, p: Polynomial) -> Polynomial:
    """Exact remainder of a*b modulo p."""
    _check_modulus(p)
    return (a * b) % p


def poly_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Monic greatest common divisor."""
    while not b.is_zero():
        a, b = b, a % b
    return a.monic() if not a.is_zero() else a


def extended_gcd(a: Polynomial, b: Polynomial):
    """(g, s, t) with s*a + t*b = g, g monic (or zero)."""
    r0, r1 = a, b
    s0, s1 = Polynomial.one(), Polynomial.zero()
    t0, t1 = Polynomial.zero(), Polynomial.one()
    while not r1.is_zero():
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if r0.is_zero():
        return r0, s0, t0
    lead = r0.leading()
    inv = 1 / lead
    return r0.monic(), Polynomial([c * inv for c in s0.coeffs]), Polynomial([c * inv for c in t0.coeffs])


def inv_mod(q: Polynomial, p: Polynomial):
    """Inverse of q modulo p, or None when gcd(q, p) != 1."""
    _check_modulus(p)
    g, s, _ = extended_gcd(q % p, p)
    if g.degree != 0:
        return None
    return s % p


def is_separable(p: Polynomial) -> bool:
    """True iff p has no repeated roots (gcd with its derivative is constant)."""
    return poly_gcd(p, p.derivative()).degree == 0
