"""Renyi-2 information for half-space geometries in d = 2.

Opposite half-spaces map to parallel half-plates in three dimensions.  In
the imaginary-angle plane-wave basis the plate response is the sech kernel

    C(alpha, alpha') = 1/(4 pi) [sech((alpha+alpha')/2) +- sech((alpha-alpha')/2)]

(+ Dirichlet, - Neumann), and free propagation across the gap is diagonal,
exp(-|k_x| l cosh alpha).  The k_x integral is done analytically, which
leaves alpha-space quadratures and makes the 1/l scaling of the information
per unit edge length exact.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

import numpy as np

from .disk_multipole import BoundaryCondition
from .errors import QuadratureNotConvergedError

__all__ = [
    "HalfSpacePairGeometry",
    "DiskHalfSpaceGeometry",
    "QuadratureSpec",
    "kernel_C",
    "first_reflection_halfspaces",
    "second_reflection_halfspaces",
    "halfspace_coefficient",
    "disk_halfspace",
    "DiskHalfSpaceResult",
    "disk_capacitance_monopole",
]


@dataclass(frozen=True)
class HalfSpacePairGeometry:
    """Two half-spaces with parallel faces a distance l apart."""

    separation: float

    def __post_init__(self):
        if not self.separation > 0.0:
            raise ValueError(f"separation l > 0 required, got {self.separation}")


@dataclass(frozen=True)
class DiskHalfSpaceGeometry:
    """A half-space and a small disk of radius R at distance l >> R."""

    disk_radius: float
    separation: float

    def __post_init__(self):
        if not self.disk_radius > 0.0:
            raise ValueError(f"disk_radius > 0 required, got {self.disk_radius}")
        if not self.separation > 0.0:
            raise ValueError(f"separation > 0 required, got {self.separation}")
        if self.disk_radius / self.separation >= 1.0:
            warnings.warn(
                "disk_halfspace is a leading-order result in R/l; "
                f"R/l = {self.disk_radius / self.separation:.3g} is not small",
                stacklevel=2)


@dataclass(frozen=True)
class QuadratureSpec:
    """Gauss-Legendre grids on [-alpha_cutoff, alpha_cutoff].

    nodes_per_axis is used for the 2-d integrals; the 4-d second-reflection
    integral uses the sparser nodes_per_axis_4d.  The sech decay must leave
    the integrand below 1e-14 of its peak at the cutoff.
    """

    alpha_cutoff: float = 40.0
    nodes_per_axis: int = 200
    nodes_per_axis_4d: int = 64

    def __post_init__(self):
        if not self.alpha_cutoff > 0.0:
            raise ValueError("alpha_cutoff must be positive")
        if self.nodes_per_axis < 8 or self.nodes_per_axis_4d < 8:
            raise ValueError("need at least 8 nodes per axis")
        # worst-case edge/peak ratio of the first-reflection integrand
        edge = (1.0 / np.cosh(0.5 * self.alpha_cutoff)) ** 2 / np.cosh(self.alpha_cutoff)
        if edge / 2.0 > 1e-14:
            raise ValueError(
                f"alpha_cutoff={self.alpha_cutoff} leaves integrand/peak = "
                f"{edge / 2.0:.2e} > 1e-14 at the boundary; increase it")

    def nodes(self, n: int | None = None):
        npts = self.nodes_per_axis if n is None else n
        x, w = np.polynomial.legendre.leggauss(npts)
        return self.alpha_cutoff * x, self.alpha_cutoff * w


def kernel_C(bc: BoundaryCondition, alpha, alpha_prime):
    """Half-plate capacitance kernel; vectorizes over numpy arrays."""
    sgn = 1.0 if bc is BoundaryCondition.DIRICHLET else -1.0
    a, ap = np.asarray(alpha, dtype=float), np.asarray(alpha_prime, dtype=float)
    return (1.0 / np.cosh(0.5 * (a + ap)) + sgn / np.cosh(0.5 * (a - ap))) / (4.0 * np.pi)


def _first_reflection_coefficient(quad: QuadratureSpec, n: int | None = None) -> dict:
    a, w = quad.nodes(n)
    aa, ap = np.meshgrid(a, a, indexing="ij")
    ww = np.outer(w, w)
    den = np.cosh(aa) + np.cosh(ap)
    out = {}
    for bc in (BoundaryCondition.DIRICHLET, BoundaryCondition.NEUMANN):
        k = kernel_C(bc, aa, ap)
        out[bc] = float(np.sum(ww * k * k / den)) / (2.0 * np.pi)
    return out


def _second_reflection_coefficient(quad: QuadratureSpec, n: int | None = None) -> dict:
    a, w = quad.nodes(quad.nodes_per_axis_4d if n is None else n)
    c = np.cosh(a)
    den = (c[:, None, None, None] + c[None, :, None, None]
           + c[None, None, :, None] + c[None, None, None, :])
    out = {}
    for bc in (BoundaryCondition.DIRICHLET, BoundaryCondition.NEUMANN):
        k = kernel_C(bc, a[:, None], a[None, :])
        kw = k * w[None, :]
        prod = (w[:, None, None, None]
                * kw[:, :, None, None]
                * kw[None, :, :, None]
                * kw[None, None, :, :]
                * k.T[:, None, None, :])
        out[bc] = float(np.sum(prod / den)) / (4.0 * np.pi)
    return out


def _converged(value: float, coarser: float, rel_tol: float) -> bool:
    scale = max(abs(value), 1e-300)
    return abs(value - coarser) / scale <= rel_tol


def first_reflection_halfspaces(geom: HalfSpacePairGeometry,
                                quad: QuadratureSpec = QuadratureSpec(),
                                rel_tol: float = 1e-6,
                                check: bool = True) -> float:
    """Single-reflection I2 per unit edge length; reproduces 1/(16 pi l)."""
    coeff = _first_reflection_coefficient(quad)
    total = coeff[BoundaryCondition.DIRICHLET] + coeff[BoundaryCondition.NEUMANN]
    if check:
        coarse = _first_reflection_coefficient(quad, quad.nodes_per_axis // 2)
        ctot = coarse[BoundaryCondition.DIRICHLET] + coarse[BoundaryCondition.NEUMANN]
        if not _converged(total, ctot, rel_tol):
            raise QuadratureNotConvergedError(
                f"first reflection moved by {abs(total - ctot) / total:.2e} "
                "under node halving")
    return total / geom.separation


def second_reflection_halfspaces(geom: HalfSpacePairGeometry,
                                 quad: QuadratureSpec = QuadratureSpec(),
                                 rel_tol: float = 1e-2,
                                 check: bool = True) -> float:
    """Two-reflection correction to I2 per unit edge length."""
    coeff = _second_reflection_coefficient(quad)
    total = coeff[BoundaryCondition.DIRICHLET] + coeff[BoundaryCondition.NEUMANN]
    if check:
        coarse = _second_reflection_coefficient(quad, (3 * quad.nodes_per_axis_4d) // 4)
        ctot = coarse[BoundaryCondition.DIRICHLET] + coarse[BoundaryCondition.NEUMANN]
        if not _converged(total, ctot, rel_tol):
            raise QuadratureNotConvergedError(
                f"second reflection moved by {abs(total - ctot) / total:.2e} "
                "under grid refinement")
    return total / geom.separation


def halfspace_coefficient(quad: QuadratureSpec = QuadratureSpec(),
                          check: bool = True) -> dict:
    """The dimensionless coefficient A_2 = l * I2/Sigma_1 through two
    reflections, with the per-order and per-boundary-condition split."""
    geom = HalfSpacePairGeometry(1.0)
    first = first_reflection_halfspaces(geom, quad, check=check)
    second = second_reflection_halfspaces(geom, quad, check=check)
    split1 = _first_reflection_coefficient(quad)
    split2 = _second_reflection_coefficient(quad)
    return {
        "first_reflection": first,
        "second_reflection": second,
        "A2": first + second,
        "first_dirichlet": split1[BoundaryCondition.DIRICHLET],
        "first_neumann": split1[BoundaryCondition.NEUMANN],
        "second_dirichlet": split2[BoundaryCondition.DIRICHLET],
        "second_neumann": split2[BoundaryCondition.NEUMANN],
    }


@dataclass(frozen=True)
class DiskHalfSpaceResult:
    """Leading-order information with the bare angular integral (-> 4 pi)
    and the relative scale of the neglected (R/l)^2 corrections."""

    value: float
    double_integral: float
    error_scale: float


def disk_halfspace(geom: DiskHalfSpaceGeometry,
                   quad: QuadratureSpec = QuadratureSpec(),
                   rel_tol: float = 1e-6,
                   check: bool = True) -> DiskHalfSpaceResult:
    """I2 between a half-space and a distant small disk.

    Keeps the Dirichlet monopole of the disk only; the exact chain gives
    C0/(2 pi l) with C0 = 2R/pi, i.e. R/(pi^2 l).
    """

    def integral(n=None):
        a, w = quad.nodes(n)
        aa, ap = np.meshgrid(a, a, indexing="ij")
        ww = np.outer(w, w)
        num = 1.0 / np.cosh(0.5 * (aa + ap)) + 1.0 / np.cosh(0.5 * (aa - ap))
        return float(np.sum(ww * num / (np.cosh(aa) + np.cosh(ap))))

    ii = integral()
    if check:
        coarse = integral(quad.nodes_per_axis // 2)
        if not _converged(ii, coarse, rel_tol):
            raise QuadratureNotConvergedError(
                f"disk-halfspace integral moved by {abs(ii - coarse) / ii:.2e} "
                "under node halving")
    c0 = disk_capacitance_monopole(geom.disk_radius)
    value = c0 / (8.0 * np.pi ** 2 * geom.separation) * ii
    return DiskHalfSpaceResult(
        value=value,
        double_integral=ii,
        error_scale=(geom.disk_radius / geom.separation) ** 2,
    )


def disk_capacitance_monopole(radius: float) -> float:
    """Electrostatic capacitance 2R/pi of a disk of radius R in 3d."""
    if not radius > 0.0:
        raise ValueError(f"radius > 0 required, got {radius}")
    return 2.0 * radius / np.pi
