"""Exact and numerical checks of the closed-form Cariñena solutions."""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from math import factorial

import numpy as np

from ..carinena import (Domain, domain_for, eigenfunction, energy, norm_squared,
                        potential)
from ..exactalg import RationalFunction
from ..hermite import pseudo_hermite
from ..susy import hamiltonian
from .quadrature import QuadratureSpec, adaptive_quadrature, truncation_radius

SQRT_PI = math.sqrt(math.pi)


@dataclass(frozen=True)
class ResidualReport:
    p: int
    n: int
    exact_zero: bool
    residual_profile: RationalFunction


def hamiltonian_residual(p: int, n: int) -> ResidualReport:
    """Profile of -psi'' + V psi - E_n psi for the unnormalized level-n state."""
    model = potential(p)
    psi = eigenfunction(p, n).wave
    res = hamiltonian(model.potential, psi) - psi.scale(energy(p, n))
    return ResidualReport(p, n, res.is_zero(), res.profile)


# -- ground-state integrals --------------------------------------------------

def appendix_a_value(m: int) -> Fraction:
    """Coefficient of sqrt(pi) in I_{2m} = int e^{-x^2} / 𝓗_{2m}(x)^2 dx.

    Runs I_{2j+2} = I_{2j} / (4 (2j+1)(2j+2)) down from I_0 = sqrt(pi) and
    insists on agreement with 1 / (2^{2m} (2m)!).
    """
    if m < 0:
        raise ValueError(f"m must be nonnegative, got {m}")
    value = Fraction(1)
    for j in range(m):
        value /= 4 * (2 * j + 1) * (2 * j + 2)
    closed = Fraction(1, 2 ** (2 * m) * factorial(2 * m))
    if value != closed:
        raise ArithmeticError(f"recursion gives {value}, closed form {closed} (m={m})")
    return value


def ground_state_spec(m: int, abs_tol: float = 1e-300) -> QuadratureSpec:
    L = truncation_radius(1e-30)
    return QuadratureSpec(-L, L, rel_tol=1e-13, abs_tol=abs_tol)


def appendix_a_quadrature(m: int, spec: QuadratureSpec | None = None) -> tuple[float, float]:
    """Numerical I_{2m}."""
    h = pseudo_hermite(2 * m)
    spec = spec or ground_state_spec(m)
    return adaptive_quadrature(lambda x: np.exp(-x * x) / h.evalf(x) ** 2, spec)


@dataclass(frozen=True)
class GroundStateDiscrimination:
    """Quadrature N_0^2 sqrt(pi) against the two closed-form candidates."""

    m: int
    quadrature: float
    candidate_4m: Fraction   # 2^{2m} (2m)!
    candidate_2m: Fraction   # 2^m (2m)!

    @property
    def rel_err_4m(self) -> float:
        return abs(self.quadrature / float(self.candidate_4m) - 1.0)

    @property
    def rel_err_2m(self) -> float:
        return abs(self.quadrature / float(self.candidate_2m) - 1.0)

    @property
    def ratio_to_2m(self) -> float:
        return self.quadrature / float(self.candidate_2m)


def discriminate_ground_state(m: int) -> GroundStateDiscrimination:
    if m < 1:
        raise ValueError("the candidates coincide for m = 0")
    value, _ = appendix_a_quadrature(m)
    return GroundStateDiscrimination(
        m, SQRT_PI / value,
        Fraction(2 ** (2 * m) * factorial(2 * m)),
        Fraction(2 ** m * factorial(2 * m)))


# -- normalization and orthonormality ---------------------------------------

def _spec_for(p: int, levels: list[int], abs_tol: float = 1e-13) -> QuadratureSpec:
    # normalized states: |psi|^2 is bounded by 4^n x^{2(n-p)} e^{-x^2} with the 1/sqrt(pi) scale absorbed
    deg = 2 * max(max(n - p, 0) for n in levels)
    L = truncation_radius(abs_tol * 1e-3, degree=deg, scale=4.0 ** max(levels))
    lo = 0.0 if domain_for(p) is Domain.HALF_LINE else -L
    return QuadratureSpec(lo, L, rel_tol=1e-13, abs_tol=abs_tol)


def numeric_norm_squared(p: int, n: int, spec: QuadratureSpec | None = None) -> float:
    """N_n^2 from quadrature over the model's domain (the only route for odd p)."""
    prof = eigenfunction(p, n).wave.profile
    spec = spec or _spec_for(p, [n])
    val, _ = adaptive_quadrature(lambda x: prof.evalf(x) ** 2 * np.exp(-x * x), spec)
    return 1.0 / val


def normalization(p: int, n: int, spec: QuadratureSpec | None = None) -> float:
    """N_n: closed form for even p, quadrature for odd p."""
    if p % 2 == 0:
        return math.sqrt(float(norm_squared(p, n)) / SQRT_PI)
    return math.sqrt(numeric_norm_squared(p, n, spec))


def orthonormality_matrix(p: int, levels: list[int],
                          spec: QuadratureSpec | None = None) -> np.ndarray:
    """Gram matrix N_a N_b int psi_a psi_b over the model's domain."""
    spec = spec or _spec_for(p, levels)
    profiles = [eigenfunction(p, n).wave.profile for n in levels]
    norms = [normalization(p, n) for n in levels]
    size = len(levels)
    gram = np.empty((size, size))
    for a in range(size):
        for b in range(a, size):
            ra, rb = profiles[a], profiles[b]
            scale = norms[a] * norms[b]
            val, _ = adaptive_quadrature(
                lambda x: scale * ra.evalf(x) * rb.evalf(x) * np.exp(-x * x), spec)
            gram[a, b] = gram[b, a] = val
    return gram
