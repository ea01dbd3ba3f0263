from fractions import Fraction

import pytest

from gencarinena.exactalg import Polynomial, RationalFunction
from gencarinena.hermite import hermite, pseudo_hermite, susy_sum_expansion, instantiate
from gencarinena.susy import (X, X_SQUARED, QuasiGaussian, apply_A, apply_A_dagger,
                              hamiltonian, partner_potentials, riccati_residual,
                              superpotential)

P = Polynomial
R = RationalFunction


def test_superpotential_examples():
    assert superpotential(0).w == R(X)
    assert superpotential(2).w == R(X) + R(P([0, 4]), P([1, 0, 2]))
    assert superpotential(3).w == R(X) + R(P([1]), X) + R(P([0, 4]), P([3, 0, 2]))


@pytest.mark.parametrize("p", range(11))
def test_superpotential_shape(p):
    w = superpotential(p)
    rest = w.w - X
    assert rest.num.degree < rest.den.degree or rest.is_zero()
    if p:
        assert w.w.den == pseudo_hermite(p).monic()


def test_partner_examples():
    pair = partner_potentials(superpotential(0))
    assert pair.v1 == R(X_SQUARED - 1) and pair.v2 == R(X_SQUARED + 1)

    pair = partner_potentials(superpotential(2))
    h = P([1, 0, 2])
    assert pair.v1 == R(X_SQUARED + 3) + R(P([-1, 0, 2]) * 8, h * h)
    assert pair.v2 == R(X_SQUARED + 5)

    pair = partner_potentials(superpotential(4))
    d = P([3, 0, 12, 0, 4])
    assert pair.v1 == R(X_SQUARED + 7) + R(P([-9, 0, 18, 0, 12, 0, 8]) * 16, d * d)
    assert pair.v2 == R(X_SQUARED + 9)


def test_paper_v1_misprint_is_not_the_algebra():
    # the (2x+1)^2 denominator printed for p = 2 is not the partner potential
    misprint = R(X_SQUARED + 3) + R(P([-1, 0, 2]) * 8, P([1, 2]) ** 2)
    assert partner_potentials(superpotential(2)).v1 != misprint


@pytest.mark.parametrize("p", range(11))
def test_riccati_and_shift(p):
    w = superpotential(p)
    assert riccati_residual(w).is_zero()
    pair = partner_potentials(w)
    assert pair.shift == 2 * p + 1
    assert pair.v2 - X_SQUARED == R(P([2 * p + 1]))
    assert pair.v1 == w.w * w.w - w.w.derivative()


def test_riccati_spot_check():
    w = superpotential(2).w
    x = Fraction(1)
    assert w.derivative()(x) + w(x) ** 2 == 1 + 2 * 2 + 1


def test_apply_A_annihilates_ground_states():
    assert apply_A(superpotential(0), QuasiGaussian.from_poly(P([1]))).is_zero()
    assert apply_A(superpotential(2), QuasiGaussian.from_quotient(P([1]), P([1, 0, 2]))).is_zero()


def test_apply_A_lowers_carinena_level():
    w = superpotential(2)
    phi3 = QuasiGaussian.from_quotient(P([0, 12, 0, 8]), pseudo_hermite(2))
    down = apply_A(w, phi3)
    assert down.profile.is_polynomial() and down.profile.num.degree == 0
    # A^dagger A phi3 = 6 phi3, the shifted-harmonic ground energy
    assert apply_A_dagger(w, down) == phi3.scale(6)


def test_apply_A_dagger_examples():
    w2 = superpotential(2)
    up = apply_A_dagger(w2, QuasiGaussian.from_poly(P([1])))
    assert up.profile == R(P([0, 12, 0, 8]), P([2, 0, 4]))
    assert apply_A_dagger(superpotential(0), QuasiGaussian.from_poly(P([1]))).profile == R(P([0, 2]))
    up2 = apply_A_dagger(w2, QuasiGaussian.from_poly(hermite(2)))
    expected = hermite(5) + hermite(3) * 20 + hermite(1) * 40
    assert up2.profile == R(expected, pseudo_hermite(2))
    assert expected == instantiate(susy_sum_expansion(2, 2))


@pytest.mark.parametrize("p", range(7))
def test_intertwining(p):
    w = superpotential(p)
    pair = partner_potentials(w)
    for k in range(13):
        # H_1 eigenstate obtained from the harmonic level k of H_2 = H_H + 2p + 1
        e = Fraction(2 * k + 2 * p + 2)
        psi1 = apply_A_dagger(w, QuasiGaussian.from_poly(hermite(k)))
        assert (hamiltonian(pair.v1, psi1) - psi1.scale(e)).is_zero()
        psi2 = apply_A(w, psi1)
        assert (hamiltonian(pair.v2, psi2) - psi2.scale(e)).is_zero()
        assert psi2 == QuasiGaussian.from_poly(hermite(k)).scale(e)


@pytest.mark.parametrize("p", range(5))
def test_factorization_closure(p):
    w = superpotential(p)
    v1 = partner_potentials(w).v1
    h = pseudo_hermite(p)
    for num in (P([1]), P([0, 1, 3]), P([2, -1, 0, 5]), hermite(4)):
        psi = QuasiGaussian.from_quotient(num, h)
        assert apply_A_dagger(w, apply_A(w, psi)) == hamiltonian(v1, psi)


def test_quasi_gaussian_derivative():
    psi = QuasiGaussian.from_poly(P([1]))
    assert psi.derivative().profile == R(P([0, -1]))
    assert psi.second_derivative().profile == R(X_SQUARED - 1)
    assert psi.derivative().derivative() == psi.second_derivative()
