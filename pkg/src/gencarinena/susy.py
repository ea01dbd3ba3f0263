"""Factorization of the harmonic oscillator through pseudo-Hermite seeds.

A seed phi_p = 𝓗_p e^{x^2/2} solves -phi'' + x^2 phi = -(2p+1) phi, so
W = phi_p'/phi_p = x + 𝓗_p'/𝓗_p solves the Riccati equation
W' + W^2 = x^2 + 2p + 1. The ladder operators A = d/dx + W and
A^dagger = -d/dx + W act on functions of the form R(x) e^{-x^2/2}, and all
of the algebra is done on the rational profile R.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exactalg import Polynomial, RationalFunction
from .hermite import pseudo_hermite

X = Polynomial.x()
X_SQUARED = Polynomial.monomial(2)


@dataclass(frozen=True)
class QuasiGaussian:
    """The function ``profile(x) * exp(-x^2/2)``."""

    profile: RationalFunction

    @classmethod
    def from_poly(cls, p: Polynomial) -> "QuasiGaussian":
        return cls(RationalFunction.from_poly(p))

    @classmethod
    def from_quotient(cls, num: Polynomial, den: Polynomial) -> "QuasiGaussian":
        return cls(RationalFunction(num, den))

    def is_zero(self) -> bool:
        return self.profile.is_zero()

    def __add__(self, other: "QuasiGaussian") -> "QuasiGaussian":
        return QuasiGaussian(self.profile + other.profile)

    def __sub__(self, other: "QuasiGaussian") -> "QuasiGaussian":
        return QuasiGaussian(self.profile - other.profile)

    def __neg__(self) -> "QuasiGaussian":
        return QuasiGaussian(-self.profile)

    def scale(self, c) -> "QuasiGaussian":
        return QuasiGaussian(self.profile * c)

    def times(self, f: RationalFunction | Polynomial) -> "QuasiGaussian":
        """Multiply by a rational function (a potential, say)."""
        return QuasiGaussian(self.profile * f)

    def derivative(self) -> "QuasiGaussian":
        # (R e^{-x^2/2})' = (R' - x R) e^{-x^2/2}
        r = self.profile
        return QuasiGaussian(r.derivative() - r * X)

    def second_derivative(self) -> "QuasiGaussian":
        # profile R'' - 2x R' + (x^2 - 1) R, without the intermediate reduction
        r = self.profile
        r1 = r.derivative()
        r2 = r1.derivative()
        return QuasiGaussian(r2 - r1 * (2 * X) + r * (X_SQUARED - 1))

    def __call__(self, x):
        """Float evaluation (numpy arrays accepted)."""
        import numpy as np

        return self.profile.evalf(x) * np.exp(-0.5 * np.asarray(x, dtype=float) ** 2)


@dataclass(frozen=True)
class Superpotential:
    """W(x) = x + 𝓗_p'(x)/𝓗_p(x)."""

    p: int
    w: RationalFunction

    @property
    def seed(self) -> Polynomial:
        return pseudo_hermite(self.p)


@dataclass(frozen=True)
class PartnerPair:
    """V1 = W^2 - W' and V2 = W^2 + W' = x^2 + shift."""

    v1: RationalFunction
    v2: RationalFunction
    shift: Fraction


def superpotential(p: int) -> Superpotential:
    if p < 0:
        raise ValueError(f"seed index must be nonnegative, got {p}")
    h = pseudo_hermite(p)
    w = RationalFunction(X * h + h.derivative(), h)
    return Superpotential(p, w)


def partner_potentials(w: Superpotential) -> PartnerPair:
    w2 = w.w * w.w
    dw = w.w.derivative()
    v1 = w2 - dw
    v2 = w2 + dw
    shift = Fraction(2 * w.p + 1)
    expected = RationalFunction.from_poly(X_SQUARED + shift)
    if v2 != expected:
        raise ArithmeticError(f"V2 - x^2 is not the constant {shift} for p={w.p}: {v2}")
    return PartnerPair(v1, v2, shift)


def apply_A(w: Superpotential, psi: QuasiGaussian) -> QuasiGaussian:
    """(d/dx + W) psi."""
    r = psi.profile
    return QuasiGaussian(r.derivative() + r * (w.w - X))


def apply_A_dagger(w: Superpotential, psi: QuasiGaussian) -> QuasiGaussian:
    """(-d/dx + W) psi."""
    r = psi.profile
    return QuasiGaussian(r * (w.w + X) - r.derivative())


def riccati_residual(w: Superpotential) -> RationalFunction:
    """W' + W^2 - x^2 - (2p+1); identically zero for the pseudo-Hermite seeds."""
    return w.w.derivative() + w.w * w.w - (X_SQUARED + (2 * w.p + 1))


def hamiltonian(potential: RationalFunction, psi: QuasiGaussian) -> QuasiGaussian:
    """(-d^2/dx^2 + V) psi."""
    return psi.times(potential) - psi.second_derivative()
