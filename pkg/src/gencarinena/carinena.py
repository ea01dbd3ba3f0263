"""Generalized Cariñena potentials and their closed-form bound states.

For a seed index p >= 1,

    V(x) = x^2 + 2 (𝓗_p'^2 - 𝓗_p 𝓗_p'') / 𝓗_p^2

is the partner of the harmonic oscillator built from phi_p = 𝓗_p e^{x^2/2}
with the constant 2p - 1 removed. Energies are those of -d^2/dx^2 + V with
no added constant: E_n = 2n - 2p + 1.

Bound states are P_n(x)/𝓗_p(x) e^{-x^2/2} with n = 0 or n >= p + 1. For odd
p the seed vanishes at the origin, the problem lives on (0, inf) with a
Dirichlet wall, and only odd n >= p + 2 survive.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from math import factorial, prod
from typing import Optional

from .exactalg import Polynomial, RationalFunction
from .hermite import instantiate, pseudo_hermite, susy_sum_expansion
from .susy import X_SQUARED, QuasiGaussian


class Domain(enum.Enum):
    WHOLE_LINE = "whole-line"
    HALF_LINE = "half-line"


class InadmissibleLevelError(ValueError):
    """Requested level is not a square-integrable bound state of the model."""

    def __init__(self, p: int, n: int, reason: str):
        super().__init__(f"n={n} is not an admissible level for p={p}: {reason}")
        self.p = p
        self.n = n


class NoClosedFormError(ValueError):
    """No exact normalization is available; use the numerical route."""


@dataclass(frozen=True)
class CarinenaModel:
    p: int
    potential: RationalFunction
    domain: Domain

    @property
    def correction(self) -> RationalFunction:
        """V - x^2."""
        return self.potential - X_SQUARED

    def asymptotic_product(self, x) -> Fraction:
        """x^2 (V(x) - x^2), which tends to 2p as x grows."""
        x = Fraction(x)
        return x * x * self.correction(x)


@dataclass(frozen=True)
class SpectrumLevel:
    n: int
    energy: Fraction
    # N_n^2 = norm_sq_coeff / sqrt(pi); None when inadmissible or no closed form
    norm_sq_coeff: Optional[Fraction]
    admissible: bool


@dataclass(frozen=True)
class Eigenfunction:
    level: SpectrumLevel
    numerator: Polynomial
    wave: QuasiGaussian


def _check_p(p: int) -> None:
    if not isinstance(p, int) or p < 1:
        raise ValueError(f"seed index p must be a positive integer, got {p!r}")


def domain_for(p: int) -> Domain:
    return Domain.WHOLE_LINE if p % 2 == 0 else Domain.HALF_LINE


def potential(p: int) -> CarinenaModel:
    _check_p(p)
    h = pseudo_hermite(p)
    h1 = h.derivative()
    h2 = h1.derivative()
    corr = RationalFunction((h1 * h1 - h * h2) * 2, h * h)
    return CarinenaModel(p, corr + X_SQUARED, domain_for(p))


def energy(p: int, n: int) -> Fraction:
    return Fraction(2 * n - 2 * p + 1)


def parity_admissible(p: int, n: int) -> bool:
    """Admissibility by the level-counting rule."""
    if p % 2 == 0:
        return n == 0 or n >= p + 1
    return n >= p + 2 and n % 2 == 1


def pn_polynomial(p: int, n: int) -> Polynomial:
    """Numerator P_n of the level-n profile P_n/𝓗_p.

    P_0 = 1; for n >= p + 1,
    P_n = sum_i 2^i C(p, i) n (n-i-1)!/(n-2i)! H_{n-2i}
        = 𝓗_p H_{n-p} + 𝓗_p' H_{n-p-1}.
    Defined for every n >= p + 1 regardless of parity, so regularity can be
    checked directly.
    """
    _check_p(p)
    if n == 0:
        return Polynomial.constant(1)
    if 1 <= n <= p:
        raise InadmissibleLevelError(p, n, "no partner state with index 1..p")
    if n < 0:
        raise InadmissibleLevelError(p, n, "negative index")
    return instantiate(susy_sum_expansion(p, n - p - 1))


def is_regular(p: int, n: int) -> bool:
    """Does P_n/𝓗_p stay finite on the real line.

    𝓗_p has no real zeros for even p and only the simple zero x = 0 for odd
    p, so it suffices to look at the origin after reduction.
    """
    if 1 <= n <= p:
        return False
    profile = RationalFunction(pn_polynomial(p, n), pseudo_hermite(p))
    return profile.den(0) != 0


def is_admissible(p: int, n: int) -> bool:
    """Parity rule, cross-checked against the regularity of the profile."""
    rule = parity_admissible(p, n)
    if n >= 0 and not (1 <= n <= p):
        regular = is_regular(p, n)
        if regular != rule:
            raise ArithmeticError(
                f"parity rule and regularity disagree for p={p}, n={n}")
    return rule


def _require_admissible(p: int, n: int) -> None:
    if not is_admissible(p, n):
        if 1 <= n <= p:
            reason = "no partner state with index 1..p"
        else:
            reason = "1/x singularity at the origin (odd p needs odd n >= p+2)"
        raise InadmissibleLevelError(p, n, reason)


def norm_squared(p: int, n: int) -> Fraction:
    """Rational c with N_n^2 = c / sqrt(pi), for even p.

    n >= p+1: c = (n-1)(n-2)...(n-p) / (2^{n-p} n!).
    n = 0, p = 2m: c = 2^{2m} (2m)!, i.e. the same product formula at n = 0.
    """
    _check_p(p)
    _require_admissible(p, n)
    if p % 2 == 1:
        raise NoClosedFormError(
            f"odd p={p}: half-line normalization is computed numerically")
    if n == 0:
        return Fraction(2 ** p * factorial(p))
    return Fraction(prod(n - j for j in range(1, p + 1)), 2 ** (n - p) * factorial(n))


def level(p: int, n: int) -> SpectrumLevel:
    ok = is_admissible(p, n)
    c = norm_squared(p, n) if ok and p % 2 == 0 else None
    return SpectrumLevel(n, energy(p, n), c, ok)


def spectrum(p: int, n_max: int) -> list[SpectrumLevel]:
    """All levels 0..n_max, each flagged admissible or not."""
    _check_p(p)
    return [level(p, n) for n in range(n_max + 1)]


def admissible_levels(p: int, count: int) -> list[int]:
    """The lowest ``count`` admissible indices."""
    out = []
    n = 0
    while len(out) < count:
        if parity_admissible(p, n):
            out.append(n)
        n += 1
    return out


def eigenfunction(p: int, n: int) -> Eigenfunction:
    _check_p(p)
    _require_admissible(p, n)
    num = pn_polynomial(p, n)
    wave = QuasiGaussian.from_quotient(num, pseudo_hermite(p))
    return Eigenfunction(level(p, n), num, wave)
