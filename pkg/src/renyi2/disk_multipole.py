"""Renyi-2 mutual information between two coplanar unit disks.

The two disks, embedded in three dimensions on the z = 0 plane, scatter the
electrostatic field of the equivalent free-energy problem.  The information
is assembled from the diagonal capacitance matrix of a single disk and the
dense translation matrix that re-expands outgoing waves about the displaced
disk center,

    I2 = -1/2 * sum over {Dirichlet, Neumann} of log det(1 - C U+ C U-),

truncated at multipole degree n_max, i.e. matrices of dimension
(n_max + 1)^2.  Partial waves are ordered lexicographically: n ascending,
m from -n to n.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum

import numpy as np

from .errors import NonConvergentError
from .specfun import (
    MAX_DEGREE,
    MultipoleIndex,
    _w3j_stretched_log,
    radial_h_table,
    radial_tables_at_zero,
    sph_harm_table,
)

__all__ = [
    "BoundaryCondition",
    "CapacitanceMatrix",
    "TranslationMatrix",
    "DiskPairGeometry",
    "multipole_indices",
    "capacitance_disk",
    "translation_matrix",
    "reflection_operator",
    "renyi2_two_disks",
    "renyi2_two_disks_parts",
    "renyi2_two_disks_asymptotic",
    "renyi2_large_separation",
    "separation_sweep",
    "SweepPoint",
]


class BoundaryCondition(Enum):
    DIRICHLET = "dirichlet"
    NEUMANN = "neumann"


def multipole_indices(n_max: int) -> list[MultipoleIndex]:
    """Lexicographic partial-wave ordering used by every matrix here."""
    return [MultipoleIndex(n, m) for n in range(n_max + 1) for m in range(-n, n + 1)]


def _check_n_max(n_max: int) -> None:
    if n_max < 0:
        raise ValueError(f"n_max must be nonnegative, got {n_max}")
    if 2 * n_max > MAX_DEGREE:
        raise ValueError(
            f"n_max={n_max} needs radial degree {2 * n_max}, beyond the "
            f"validated range {MAX_DEGREE}; use n_max <= {MAX_DEGREE // 2}")


@dataclass(frozen=True)
class CapacitanceMatrix:
    """Diagonal multipole response of a unit disk for one boundary condition.

    Dirichlet elements are j_n^m(0)/h_n^m(0); Neumann elements are the same
    ratio of the xi-derivatives.  Parity makes C vanish on half the indices:
    Dirichlet for n-|m| odd, Neumann for n-|m| even (so the Neumann monopole
    is exactly zero).
    """

    bc: BoundaryCondition
    n_max: int
    entries: dict[MultipoleIndex, float]

    def diagonal(self) -> np.ndarray:
        """Entries as a vector in the lexicographic index order."""
        return np.array([self.entries[idx] for idx in multipole_indices(self.n_max)])


@dataclass(frozen=True)
class TranslationMatrix:
    """Re-expansion of outgoing waves about a center displaced by the vector
    with oblate spheroidal coordinates (xi0, eta0, phi0)."""

    xi0: float
    eta0: float
    phi0: float
    n_max: int
    entries: np.ndarray = field(repr=False)


@dataclass(frozen=True)
class DiskPairGeometry:
    """Two equal disks of unit radius, centers r/R apart on the y-axis."""

    separation_ratio: float

    def __post_init__(self):
        if not self.separation_ratio > 2.0:
            raise ValueError(
                f"disjoint disks require r/R > 2, got {self.separation_ratio}")


def capacitance_disk(bc: BoundaryCondition, n_max: int) -> CapacitanceMatrix:
    """Capacitance matrix of a unit disk up to degree n_max."""
    _check_n_max(n_max)
    j0, j0p, h0, h0p = radial_tables_at_zero(n_max)
    entries = {}
    for idx in multipole_indices(n_max):
        am = abs(idx.m)
        if bc is BoundaryCondition.DIRICHLET:
            entries[idx] = j0[idx.n, am] / h0[idx.n, am]
        else:
            entries[idx] = j0p[idx.n, am] / h0p[idx.n, am]
    return CapacitanceMatrix(bc=bc, n_max=n_max, entries=entries)


def translation_matrix(xi0: float, eta0: float, phi0: float, n_max: int) -> TranslationMatrix:
    """Translation matrix U in the partial-wave basis.

    Entry (row n'm', column nm) couples through the composite degree n + n',
    so radial and angular functions are evaluated up to 2 * n_max.
    """
    if not xi0 > 0.0:
        raise ValueError(f"xi0 > 0 required, got {xi0}")
    _check_n_max(n_max)
    idx = multipole_indices(n_max)
    n = np.array([t.n for t in idx], dtype=np.int64)
    m = np.array([t.m for t in idx], dtype=np.int64)
    nr, mr = n[:, None], m[:, None]      # row: (n', m')
    nc, mc = n[None, :], m[None, :]      # column: (n, m)

    kmax = 2 * n_max
    htab = radial_h_table(kmax, kmax, xi0)
    ytab = sph_harm_table(kmax, eta0, phi0)

    lg0, s0 = _w3j_stretched_log(nc + 0 * nr, nr + 0 * nc,
                                 np.zeros_like(nc + nr), np.zeros_like(nc + nr))
    lgm, sm = _w3j_stretched_log(nc + 0 * nr, nr + 0 * nc, mc + 0 * mr, -(mr + 0 * mc))
    pref = np.where((nc + mc) % 2 == 0, 1.0, -1.0) * np.sqrt(
        4.0 * np.pi * (2 * nc + 1) * (2 * nr + 1) * (2 * nc + 2 * nr + 1))
    hfac = htab[np.abs(mc - mr), nc + nr]
    yfac = ytab[nc + nr, kmax + (mc - mr)]
    entries = pref * s0 * sm * np.exp(lg0 + lgm) * hfac * yfac
    return TranslationMatrix(xi0=xi0, eta0=eta0, phi0=phi0, n_max=n_max, entries=entries)


def reflection_operator(geom: DiskPairGeometry, bc: BoundaryCondition, n_max: int) -> np.ndarray:
    """One scattering round trip N = C U+ C U- for the disk pair."""
    r = geom.separation_ratio
    xi0 = math.sqrt(r * r - 1.0)
    up = translation_matrix(xi0, 0.0, +np.pi / 2, n_max).entries
    um = translation_matrix(xi0, 0.0, -np.pi / 2, n_max).entries
    c = capacitance_disk(bc, n_max).diagonal()
    return (c[:, None] * up) @ (c[:, None] * um)


def _neg_half_logdet(nmat: np.ndarray, check_spectral_radius: bool = True) -> float:
    """-1/2 log det(1 - N) with reality and convergence checks."""
    if check_spectral_radius:
        rho = float(np.max(np.abs(np.linalg.eigvals(nmat))))
        if rho >= 1.0:
            raise NonConvergentError(
                f"round-trip operator has spectral radius {rho:.6f} >= 1; "
                "the bodies are too close for this truncation")
    dim = nmat.shape[0]
    sign, logdet = np.linalg.slogdet(np.eye(dim) - nmat)
    log_sign = np.log(sign)
    if abs(np.imag(log_sign + logdet)) > 1e-10:
        raise NonConvergentError(
            f"log det has imaginary residual {np.imag(log_sign + logdet):.3e}")
    value = -0.5 * float(np.real(log_sign) + np.real(logdet))
    if not np.isfinite(value):
        raise NonConvergentError("log det is not finite")
    return value


def renyi2_two_disks_parts(geom: DiskPairGeometry, n_max: int,
                           check_spectral_radius: bool = True) -> tuple[float, float]:
    """(Dirichlet, Neumann) contributions to I2 for the disk pair."""
    parts = []
    for bc in (BoundaryCondition.DIRICHLET, BoundaryCondition.NEUMANN):
        nmat = reflection_operator(geom, bc, n_max)
        parts.append(_neg_half_logdet(nmat, check_spectral_radius))
    return parts[0], parts[1]


def renyi2_two_disks(geom: DiskPairGeometry, n_max: int,
                     check_spectral_radius: bool = True) -> float:
    """Renyi-2 mutual information between the two disks, truncated at n_max.

    Raises NonConvergentError when the truncated round-trip operator is not
    a contraction or the determinant fails its reality check.
    """
    d, n = renyi2_two_disks_parts(geom, n_max, check_spectral_radius)
    return d + n


# subleading coefficient 10/(3 pi^2) + 4/pi^4 of the (R/r)^4 term
_SUBLEADING = 10.0 / (3.0 * np.pi ** 2) + 4.0 / np.pi ** 4


def renyi2_two_disks_asymptotic(geom: DiskPairGeometry) -> float:
    """Large-separation series 2 R^2/(pi^2 r^2) + (10/(3 pi^2) + 4/pi^4) R^4/r^4."""
    r = geom.separation_ratio
    return 2.0 / (np.pi ** 2 * r ** 2) + _SUBLEADING / r ** 4


def renyi2_large_separation(c0_a: float, c0_b: float, r: float, d: int) -> float:
    """Leading mutual information C0^A C0^B / (2 r^(2(d-1))) between two far
    regions with monopole capacitances c0_a, c0_b in d spatial dimensions."""
    if not r > 0.0:
        raise ValueError(f"r > 0 required, got {r}")
    if d <= 1:
        raise ValueError(f"d > 1 required, got {d}")
    return c0_a * c0_b / (2.0 * r ** (2 * (d - 1)))


@dataclass(frozen=True)
class SweepPoint:
    r_over_R: float
    i2_total: float
    i2_dirichlet: float
    i2_neumann: float
    n_max: int
    converged: bool


def separation_sweep(r_over_R_grid, n_max: int) -> list[SweepPoint]:
    """Evaluate the disk pair over a grid of separations.

    Points where the truncated determinant does not converge are flagged
    (converged=False, NaN values) instead of aborting the sweep.
    """
    out = []
    for r in r_over_R_grid:
        geom = DiskPairGeometry(float(r))
        try:
            d, n = renyi2_two_disks_parts(geom, n_max)
            out.append(SweepPoint(float(r), d + n, d, n, n_max, True))
        except NonConvergentError:
            out.append(SweepPoint(float(r), float("nan"), float("nan"),
                                  float("nan"), n_max, False))
    return out
