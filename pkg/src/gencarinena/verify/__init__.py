"""Independent verification: exact residuals, quadrature, and a finite-difference oracle."""
from .checks import (GroundStateDiscrimination, ResidualReport, appendix_a_quadrature,
                     appendix_a_value, discriminate_ground_state, hamiltonian_residual,
                     normalization, numeric_norm_squared, orthonormality_matrix)
from .fd import (FdGrid, GridTooCoarseWarning, count_below, count_in, fd_eigenvalues,
                 fd_spectrum, observed_order)
from .quadrature import QuadratureError, QuadratureSpec, adaptive_quadrature, truncation_radius

__all__ = [
    "FdGrid", "GridTooCoarseWarning", "GroundStateDiscrimination", "QuadratureError",
    "QuadratureSpec", "ResidualReport", "adaptive_quadrature", "appendix_a_quadrature",
    "appendix_a_value", "count_below", "count_in", "discriminate_ground_state",
    "fd_eigenvalues", "fd_spectrum", "hamiltonian_residual", "normalization",
    "numeric_norm_squared", "observed_order", "orthonormality_matrix", "truncation_radius",
]
