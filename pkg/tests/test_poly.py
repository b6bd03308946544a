from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from polytrans.poly import (
    BOUNDARY_TAGS,
    CHEB_KINDS,
    InvalidModulusError,
    Polynomial,
    boundary_polynomial,
    cheb_eval_trig,
    cheb_poly,
    cheb_zeros,
    extended_gcd,
    inv_mod,
    is_separable,
    mul_mod,
    poly_gcd,
    verify_cheb_identity,
)

rationals = st.fractions(min_value=-50, max_value=50, max_denominator=8)
polys = st.lists(rationals, max_size=6).map(Polynomial)
nonzero_polys = polys.filter(lambda p: not p.is_zero())
moduli = st.lists(rationals, min_size=2, max_size=5).map(
    lambda cs: Polynomial(list(cs) + [Fraction(1)]))


def test_construction_trims_and_coerces():
    p = Polynomial([1, 2, 0, 0])
    assert p.coeffs == (Fraction(1), Fraction(2))
    assert p.degree == 1
    assert Polynomial([]).degree == -1
    assert Polynomial.zero().is_zero()


def test_evaluation_and_composition():
    p = Polynomial([1, 0, 1])           # 1 + x^2
    assert p(Fraction(2)) == 5
    q = p(Polynomial([0, 2]))           # 1 + 4x^2
    assert q.coeffs == (Fraction(1), Fraction(0), Fraction(4))


@given(polys, polys, polys)
@settings(max_examples=60, deadline=None)
def test_ring_axioms(a, b, c):
    assert (a + b).coeffs == (b + a).coeffs
    assert ((a + b) + c).coeffs == (a + (b + c)).coeffs
    assert (a * b).coeffs == (b * a).coeffs
    assert (a * (b + c)).coeffs == (a * b + a * c).coeffs


@given(polys, moduli)
@settings(max_examples=60, deadline=None)
def test_divmod_invariant(a, p):
    q, r = divmod(a, p)
    assert (q * p + r).coeffs == a.coeffs
    assert r.degree < p.degree


@given(polys, polys, moduli)
@settings(max_examples=60, deadline=None)
def test_mul_mod_matches_naive(a, b, p):
    assert mul_mod(a, b, p).coeffs == ((a * b) % p).coeffs


@given(nonzero_polys, nonzero_polys)
@settings(max_examples=60, deadline=None)
def test_gcd_divides_both(a, b):
    g = poly_gcd(a, b)
    assert (a % g).is_zero() and (b % g).is_zero()
    gg, s, t = extended_gcd(a, b)
    assert (s * a + t * b).coeffs == gg.coeffs


def test_inv_mod():
    p = Polynomial([-1, 0, 0, 0, 1])       # x^4 - 1
    xinv = inv_mod(Polynomial.x(), p)
    assert mul_mod(Polynomial.x(), xinv, p).coeffs == (Fraction(1),)
    # x is not invertible modulo x^2
    assert inv_mod(Polynomial.x(), Polynomial([0, 0, 1])) is None


def test_modulus_validation():
    with pytest.raises(InvalidModulusError):
        mul_mod(Polynomial.x(), Polynomial.x(), Polynomial.one())


def test_separability():
    assert is_separable(Polynomial([-1, 0, 1]))          # x^2 - 1
    assert not is_separable(Polynomial([1, -2, 1]))      # (x - 1)^2


def test_chebyshev_known_values():
    assert cheb_poly("T", 2).coeffs == (Fraction(-1), Fraction(0), Fraction(2))
    assert cheb_poly("U", 1).coeffs == (Fraction(0), Fraction(2))
    assert cheb_poly("V", 1).coeffs == (Fraction(-1), Fraction(2))
    assert cheb_poly("W", 1).coeffs == (Fraction(1), Fraction(2))
    assert cheb_poly("U", -1).is_zero()


@pytest.mark.parametrize("kind", CHEB_KINDS)
def test_leading_coefficients(kind):
    for n in range(1, 10):
        expect = 2 ** (n - 1) if kind == "T" else 2 ** n
        assert cheb_poly(kind, n).leading() == expect


@pytest.mark.parametrize("kind", CHEB_KINDS)
def test_trig_closed_form_matches_polynomial(kind):
    import math
    for n in (3, 5):
        for theta in [0.3, 1.1, 2.0]:
            assert math.isclose(cheb_poly(kind, n)(math.cos(theta)),
                                cheb_eval_trig(kind, n, theta), abs_tol=1e-12)


@pytest.mark.parametrize("kind", CHEB_KINDS)
def test_zeros_annihilate(kind):
    for n in (4, 7):
        p = cheb_poly(kind, n)
        for z in cheb_zeros(kind, n):
            assert abs(p(z)) < 1e-9


@pytest.mark.parametrize("kind", CHEB_KINDS)
@pytest.mark.parametrize("bc", BOUNDARY_TAGS)
def test_boundary_identities(kind, bc):
    for n in range(1, 9):
        assert verify_cheb_identity(kind, bc, n)


def test_boundary_shift():
    p = boundary_polynomial("T", "wa", 4, shift=Fraction(1, 2))
    assert p.coeff(0) == cheb_poly("T", 4).coeff(0) - Fraction(1, 2)
