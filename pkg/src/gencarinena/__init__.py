"""Generalized Cariñena oscillators as supersymmetric partners of the harmonic oscillator.

Exact arithmetic lives in :mod:`.exactalg`; Hermite machinery in
:mod:`.hermite`; ladder operators in :mod:`.susy`; the potentials, spectra
and eigenfunctions in :mod:`.carinena`; numerical cross-checks in
:mod:`.verify`.
"""
from ._kernels import BACKEND as KERNEL_BACKEND
from .carinena import (CarinenaModel, Domain, Eigenfunction, InadmissibleLevelError,
                       SpectrumLevel, eigenfunction, norm_squared, pn_polynomial,
                       potential, spectrum)
from .exactalg import Polynomial, RationalFunction
from .hermite import hermite, pseudo_hermite
from .susy import QuasiGaussian, superpotential

__version__ = "0.1.0"

__all__ = [
    "CarinenaModel", "Domain", "Eigenfunction", "InadmissibleLevelError", "KERNEL_BACKEND",
    "Polynomial", "QuasiGaussian", "RationalFunction", "SpectrumLevel", "eigenfunction",
    "hermite", "norm_squared", "pn_polynomial", "potential", "pseudo_hermite", "spectrum",
    "superpotential",
]
