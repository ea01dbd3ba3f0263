"""Finite-difference spectral oracle for -d^2/dx^2 + V_C^p.

Three-point central differences on a uniform grid with Dirichlet values
one spacing beyond each end; the resulting symmetric tridiagonal matrix is
diagonalized only as far as needed, by Sturm-count bisection.
"""
from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .. import _kernels
from ..carinena import Domain, potential
from ..exactalg import RationalFunction


class GridTooCoarseWarning(UserWarning):
    pass


@dataclass(frozen=True)
class FdGrid:
    x_min: float
    x_max: float
    points: int

    def __post_init__(self):
        if self.points < 3:
            raise ValueError("a grid needs at least 3 points")
        if not self.x_min < self.x_max:
            raise ValueError("need x_min < x_max")

    @property
    def spacing(self) -> float:
        return (self.x_max - self.x_min) / (self.points - 1)

    def nodes(self) -> np.ndarray:
        return self.x_min + self.spacing * np.arange(self.points)

    @classmethod
    def whole_line(cls, x_max: float, points: int) -> "FdGrid":
        return cls(-x_max, x_max, points)

    @classmethod
    def half_line(cls, x_max: float, points: int) -> "FdGrid":
        """Nodes h, 2h, ..., x_max with h = x_max/points; the wall sits at 0."""
        return cls(x_max / points, x_max, points)

    @classmethod
    def for_domain(cls, domain: Domain, x_max: float, points: int) -> "FdGrid":
        if domain is Domain.HALF_LINE:
            return cls.half_line(x_max, points)
        return cls.whole_line(x_max, points)

    def refined(self, factor: int = 2) -> "FdGrid":
        if self.x_min > 0:
            return FdGrid.half_line(self.x_max, self.points * factor)
        return FdGrid(self.x_min, self.x_max, (self.points - 1) * factor + 1)

    def coarsened(self, factor: int = 2) -> "FdGrid":
        if self.x_min > 0:
            return FdGrid.half_line(self.x_max, self.points // factor)
        return FdGrid(self.x_min, self.x_max, (self.points - 1) // factor + 1)


def evaluate_on_grid(f: RationalFunction, x: np.ndarray, exact_below: float = 0.0) -> np.ndarray:
    """Double-precision Horner evaluation; points with |x| < exact_below go through Fraction."""
    vals = f.evalf(x)
    if exact_below > 0:
        for i in np.flatnonzero(np.abs(x) < exact_below):
            vals[i] = float(f(Fraction(float(x[i]))))
    return vals


def tridiagonal(p: int, grid: FdGrid) -> tuple[np.ndarray, np.ndarray]:
    """Diagonal and squared off-diagonal of the discretized Hamiltonian."""
    model = potential(p)
    if model.domain is Domain.HALF_LINE and grid.x_min <= 0:
        raise ValueError(f"p={p} lives on the half-line; grid must start at x > 0")
    if model.domain is Domain.WHOLE_LINE and not math.isclose(grid.x_min, -grid.x_max):
        raise ValueError("whole-line grids must be symmetric about 0")
    h = grid.spacing
    x = grid.nodes()
    exact_below = 0.05 if model.domain is Domain.HALF_LINE else 0.0
    v = evaluate_on_grid(model.potential, x, exact_below)
    diag = 2.0 / (h * h) + v
    off_sq = np.full(grid.points - 1, 1.0 / h ** 4)
    return diag, off_sq


def fd_eigenvalues(p: int, grid: FdGrid, count: int, tol: float = 1e-11) -> list[float]:
    diag, off_sq = tridiagonal(p, grid)
    return list(_kernels.lowest_eigenvalues(diag, off_sq, count, tol))


def fd_spectrum(p: int, grid: FdGrid, count: int, *, refinement_tol: float | None = 1e-3,
                tol: float = 1e-11) -> list[float]:
    """Lowest ``count`` FD eigenvalues, ascending.

    With ``refinement_tol`` set, also solves on the grid coarsened by 2 and
    warns with :class:`GridTooCoarseWarning` if any eigenvalue moved by more.
    """
    vals = fd_eigenvalues(p, grid, count, tol)
    if refinement_tol is not None:
        coarse = grid.coarsened()
        if coarse.points >= max(3, count):
            other = fd_eigenvalues(p, coarse, count, tol)
            shift = max(abs(a - b) for a, b in zip(vals, other))
            if shift > refinement_tol:
                warnings.warn(
                    f"p={p}: halving the grid moved an eigenvalue by {shift:.2e}",
                    GridTooCoarseWarning, stacklevel=2)
    return vals


def count_below(p: int, grid: FdGrid, lam: float) -> int:
    """Number of FD eigenvalues strictly below ``lam``."""
    diag, off_sq = tridiagonal(p, grid)
    return _kernels.sturm_count(diag, off_sq, lam)


def count_in(p: int, grid: FdGrid, a: float, b: float) -> int:
    """Number of FD eigenvalues in [a, b)."""
    diag, off_sq = tridiagonal(p, grid)
    return _kernels.sturm_count(diag, off_sq, b) - _kernels.sturm_count(diag, off_sq, a)


def observed_order(p: int, grid: FdGrid, count: int, exact: list[float]) -> list[float]:
    """log2 of the error ratio between ``grid`` and its 2x refinement, per level."""
    coarse = fd_eigenvalues(p, grid, count)
    fine = fd_eigenvalues(p, grid.refined(), count)
    out = []
    for c, f, e in zip(coarse, fine, exact):
        out.append(math.log2(abs(c - e) / abs(f - e)))
    return out
