from fractions import Fraction

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from conftest import nonzero_polynomials, polynomials, small_fractions
from gencarinena.exactalg import (NEG_INF, PoleError, Polynomial, RationalFunction,
                                  poly_derivative, poly_gcd, poly_mul, ratfunc_eval,
                                  ratfunc_make, subresultant_gcd_int)

P = Polynomial


def schoolbook(a, b):
    """Independent product oracle on plain coefficient lists."""
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i in range(len(a)):
        for j in range(len(b)):
            out[i + j] += Fraction(a[i]) * Fraction(b[j])
    while out and out[-1] == 0:
        out.pop()
    return out


class TestPolynomial:
    def test_mul_examples(self):
        assert poly_mul(P([0, 2]), P([0, 2])) == P([0, 0, 4])
        assert poly_mul(P([0, 2]), P([-2, 0, 4])) == P([0, -4, 0, 8])
        assert poly_mul(P([1, 2, 3]), P()) == P()

    def test_derivative_examples(self):
        assert poly_derivative(P([2, 0, 4])) == P([0, 8])
        assert poly_derivative(P([0, 12, 0, 8])) == P([12, 0, 24])
        assert poly_derivative(P([7])) == P()

    def test_zero_representation(self):
        z = P([0, 0, 0])
        assert z.coeffs == ()
        assert z.degree == NEG_INF
        assert P([1, 0, 0]).degree == 0
        assert (P([1, 1]) - P([1, 1])).coeffs == ()

    def test_divmod(self):
        q, r = divmod(P([-1, 0, 1]), P([1, 1]))
        assert q == P([-1, 1]) and r.is_zero()
        with pytest.raises(ZeroDivisionError):
            divmod(P([1]), P())

    def test_str(self):
        assert str(P([-12, 0, 3, -1])) == "-x^3 + 3*x^2 - 12"
        assert str(P()) == "0"

    def test_rejects_floats(self):
        with pytest.raises(TypeError):
            P([0.5])

    @given(polynomials(), polynomials())
    def test_mul_matches_schoolbook(self, a, b):
        assert (a * b).coeffs == tuple(schoolbook(a.coeffs, b.coeffs))

    @given(polynomials(), polynomials(), polynomials())
    def test_ring_axioms(self, a, b, c):
        assert (a + b) * c == a * c + b * c
        assert (a * b) * c == a * (b * c)
        assert a * b == b * a
        assert a + b - b == a

    @given(polynomials(), polynomials())
    def test_leibniz(self, a, b):
        assert (a * b).derivative() == a.derivative() * b + a * b.derivative()

    @given(polynomials(), nonzero_polynomials())
    def test_divmod_reconstructs(self, a, b):
        q, r = divmod(a, b)
        assert q * b + r == a
        assert r.degree < b.degree

    @given(polynomials(8), small_fractions)
    def test_eval_is_horner(self, a, x):
        assert a(x) == sum((c * x ** k for k, c in enumerate(a.coeffs)), Fraction(0))


class TestGcd:
    def test_known(self):
        # (x-1)(x+2) and (x-1)(x-3)
        g = poly_gcd(P([-2, 1, 1]), P([3, -4, 1]))
        assert g == P([-1, 1])

    def test_coprime(self):
        assert subresultant_gcd_int([1, 0, 1], [0, 1]) == [1]

    def test_degree_gap(self):
        # x^5 - x and x^2 - 1 share x^2 - 1
        assert poly_gcd(P([0, -1, 0, 0, 0, 1]), P([-1, 0, 1])) == P([-1, 0, 1])

    @settings(max_examples=60)
    @given(nonzero_polynomials(4), nonzero_polynomials(4), nonzero_polynomials(3))
    def test_common_factor_divides_gcd(self, a, b, g):
        d = poly_gcd(a * g, b * g)
        assert (a * g) % d == P() and (b * g) % d == P()
        assert d % g == P()
        # cofactors are coprime
        assert poly_gcd((a * g) // d, (b * g) // d).degree == 0


class TestRationalFunction:
    def test_make_examples(self):
        f = ratfunc_make(P([0, 8]), P([2, 0, 4]))
        assert f.num == P([0, 2]) and f.den == P([Fraction(1, 2), 0, 1])
        # same function as 4x/(2x^2+1)
        assert f == ratfunc_make(P([0, 4]), P([1, 0, 2]))
        p = P([3, 1, 4])
        assert ratfunc_make(p, P([1])).num == p
        z = ratfunc_make(P(), P([5, 1]))
        assert z.num.is_zero() and z.den == P([1])

    def test_zero_denominator(self):
        with pytest.raises(ZeroDivisionError):
            ratfunc_make(P([1]), P())

    def test_eval_examples(self):
        f = ratfunc_make(P([0, 4]), P([1, 0, 2]))
        assert ratfunc_eval(f, 0) == 0
        assert ratfunc_eval(f, 1) == Fraction(4, 3)
        with pytest.raises(PoleError) as exc:
            ratfunc_eval(ratfunc_make(P([2]), P([0, 0, 1])), 0)
        assert exc.value.x == 0

    def test_quotient_rule(self):
        f = RationalFunction(P([1]), P([0, 1]))
        assert f.derivative() == RationalFunction(P([-1]), P([0, 0, 1]))

    @settings(max_examples=60)
    @given(polynomials(5), nonzero_polynomials(4), nonzero_polynomials(3))
    def test_reduction_canonical(self, n, d, g):
        assert ratfunc_make(n * g, d * g) == ratfunc_make(n, d)

    @settings(max_examples=60)
    @given(polynomials(4), nonzero_polynomials(3), polynomials(4), nonzero_polynomials(3),
           small_fractions)
    def test_eval_respects_addition(self, n1, d1, n2, d2, x):
        assume(d1(x) != 0 and d2(x) != 0)
        f, g = ratfunc_make(n1, d1), ratfunc_make(n2, d2)
        assert ratfunc_eval(f + g, x) == ratfunc_eval(f, x) + ratfunc_eval(g, x)
        assert ratfunc_eval(f * g, x) == ratfunc_eval(f, x) * ratfunc_eval(g, x)

    @settings(max_examples=40)
    @given(polynomials(4), nonzero_polynomials(3))
    def test_invariants(self, n, d):
        f = ratfunc_make(n, d)
        assert f.den.leading == 1
        assert poly_gcd(f.num, f.den).degree <= 0

    def test_evalf_matches_exact(self):
        f = ratfunc_make(P([1, 0, 3]), P([2, 1]))
        assert f.evalf(0.25) == pytest.approx(float(f(Fraction(1, 4))), rel=1e-15)
