"""Special functions for the multipole engine.

Provides Wigner 3j symbols, orthonormal spherical harmonics, and the two
real radial functions of oblate spheroidal coordinates in the electrostatic
limit: a regular solution ``j_n^m`` that grows with the radial coordinate
``xi`` and an outgoing solution ``h_n^m`` that decays algebraically.  Both
are real and nonnegative on ``xi >= 0``; their values and first derivatives
at ``xi = 0`` fix the multipole response of a unit disk.

Closed forms used as recurrence seeds:

    j_m^m(xi) = (1 + xi^2)^(m/2) / (2m+1)!!
    h_m^m(xi) = (2m+1)!! (1 + xi^2)^(m/2) * I_m(xi),
    I_m(xi)   = integral_xi^inf dt (1 + t^2)^(-m-1)

``I_m`` is an incomplete beta function.  Chains in the degree n use an
all-positive upward recurrence for j and, for h, either an upward recurrence
(small xi) or a downward Miller recurrence normalized at n = m (the outgoing
solution is minimal in the downward direction, so this is stable).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.special import betainc, betaln, gammaln

__all__ = [
    "MultipoleIndex",
    "wigner3j",
    "sph_harm",
    "sph_harm_table",
    "j_fn",
    "h_fn",
    "j_fn_deriv",
    "h_fn_deriv",
    "radial_h_table",
    "radial_tables_at_zero",
    "MAX_DEGREE",
]

# Validated range of the h-seed evaluation branches (incomplete beta vs
# large-xi series); degrees beyond this are refused rather than returned
# with unknown accuracy.
MAX_DEGREE = 120


@dataclass(frozen=True)
class MultipoleIndex:
    """Angular-momentum label (n, m) of a partial wave, |m| <= n."""

    n: int
    m: int

    def __post_init__(self):
        if self.n < 0:
            raise ValueError(f"degree n must be nonnegative, got {self.n}")
        if abs(self.m) > self.n:
            raise ValueError(f"|m| <= n required, got (n={self.n}, m={self.m})")


# ---------------------------------------------------------------------------
# Wigner 3j
# ---------------------------------------------------------------------------

def wigner3j(j1: int, j2: int, j3: int, m1: int, m2: int, m3: int) -> float:
    """Wigner 3j symbol for integer arguments, via the Racah single-sum
    formula with log-factorials.

    Selection-rule violations (triangle inequality, m1+m2+m3 != 0,
    |m_i| > j_i) return 0.0 rather than raising.
    """
    for j, m in ((j1, m1), (j2, m2), (j3, m3)):
        if j < 0:
            raise ValueError("j must be nonnegative")
        if abs(m) > j:
            return 0.0
    if m1 + m2 + m3 != 0:
        return 0.0
    if j3 < abs(j1 - j2) or j3 > j1 + j2:
        return 0.0

    def lf(n):
        return gammaln(n + 1.0)

    # triangle coefficient, log scale
    ldelta = 0.5 * (lf(j1 + j2 - j3) + lf(j1 - j2 + j3) + lf(-j1 + j2 + j3)
                    - lf(j1 + j2 + j3 + 1))
    lnorm = 0.5 * (lf(j1 + m1) + lf(j1 - m1) + lf(j2 + m2) + lf(j2 - m2)
                   + lf(j3 + m3) + lf(j3 - m3))

    k_min = max(0, j2 - j3 - m1, j1 - j3 + m2)
    k_max = min(j1 + j2 - j3, j1 - m1, j2 + m2)
    logs = np.empty(k_max - k_min + 1)
    signs = np.empty(k_max - k_min + 1)
    for i, k in enumerate(range(k_min, k_max + 1)):
        logs[i] = -(lf(k) + lf(j1 + j2 - j3 - k) + lf(j1 - m1 - k)
                    + lf(j2 + m2 - k) + lf(j3 - j2 + m1 + k)
                    + lf(j3 - j1 - m2 + k))
        signs[i] = -1.0 if k % 2 else 1.0
    ref = logs.max()
    total = float(np.sum(signs * np.exp(logs - ref)))
    phase = -1.0 if (j1 - j2 - m3) % 2 else 1.0
    return phase * total * np.exp(ldelta + lnorm + ref)


def _w3j_stretched_log(j1, j2, m1, m2):
    """(log|w|, sign) of the stretched symbol (j1 j2 j1+j2; m1 m2 -m1-m2).

    The Racah sum collapses to one term when j3 = j1 + j2, so this closed
    form is cancellation-free at any size.  Vectorized over integer arrays.
    """
    j1 = np.asarray(j1, dtype=np.int64)
    j2 = np.asarray(j2, dtype=np.int64)
    m1 = np.asarray(m1, dtype=np.int64)
    m2 = np.asarray(m2, dtype=np.int64)
    lg = 0.5 * (gammaln(2 * j1 + 1.0) + gammaln(2 * j2 + 1.0)
                + gammaln(j1 + j2 + m1 + m2 + 1.0) + gammaln(j1 + j2 - m1 - m2 + 1.0)
                - gammaln(2 * j1 + 2 * j2 + 2.0)
                - gammaln(j1 + m1 + 1.0) - gammaln(j1 - m1 + 1.0)
                - gammaln(j2 + m2 + 1.0) - gammaln(j2 - m2 + 1.0))
    sign = np.where((j1 - j2 + m1 + m2) % 2 == 0, 1.0, -1.0)
    return lg, sign


# ---------------------------------------------------------------------------
# Spherical harmonics
# ---------------------------------------------------------------------------

def _legendre_norm_table(K: int, eta: float) -> np.ndarray:
    """Fully normalized associated Legendre values P-bar_k^mu(eta) including
    the 1/sqrt(4 pi) factor and the Condon-Shortley phase, for 0<=mu<=k<=K."""
    s = np.sqrt(max(0.0, 1.0 - eta * eta))
    P = np.zeros((K + 1, K + 1))
    P[0, 0] = 1.0 / np.sqrt(4.0 * np.pi)
    for mu in range(1, K + 1):
        P[mu, mu] = -np.sqrt((2.0 * mu + 1) / (2.0 * mu)) * s * P[mu - 1, mu - 1]
    for mu in range(0, K):
        P[mu + 1, mu] = eta * np.sqrt(2.0 * mu + 3) * P[mu, mu]
    for mu in range(0, K + 1):
        for k in range(mu + 2, K + 1):
            a = np.sqrt((4.0 * k * k - 1.0) / (k * k - mu * mu))
            b = np.sqrt(((k - 1.0) ** 2 - mu * mu) / (4.0 * (k - 1.0) ** 2 - 1.0))
            P[k, mu] = a * (eta * P[k - 1, mu] - b * P[k - 2, mu])
    return P


def sph_harm_table(K: int, eta: float, phi: float) -> np.ndarray:
    """All Y_k^mu(eta, phi) for k <= K as a complex array [k, K+mu]."""
    if abs(eta) > 1.0:
        raise ValueError(f"|eta| <= 1 required, got {eta}")
    P = _legendre_norm_table(K, eta)
    Y = np.zeros((K + 1, 2 * K + 1), dtype=complex)
    for k in range(K + 1):
        mus = np.arange(0, k + 1)
        vals = P[k, : k + 1] * np.exp(1j * mus * phi)
        Y[k, K: K + k + 1] = vals
        Y[k, K - k: K + 1] = ((-1.0) ** mus * np.conj(vals))[::-1]
    return Y


def sph_harm(idx: MultipoleIndex, eta: float, phi: float) -> complex:
    """Orthonormal spherical harmonic Y_n^m with eta playing the role of
    cos(theta); Condon-Shortley phase convention."""
    if abs(eta) > 1.0:
        raise ValueError(f"|eta| <= 1 required, got {eta}")
    Y = sph_harm_table(idx.n, eta, phi)
    return complex(Y[idx.n, idx.n + idx.m])


# ---------------------------------------------------------------------------
# Radial functions
# ---------------------------------------------------------------------------

def _lfac2(k: int) -> float:
    """log(k!!); k!! = 1 for k <= 0."""
    if k <= 0:
        return 0.0
    if k % 2 == 1:
        n = (k + 1) // 2
        return gammaln(2 * n + 1.0) - gammaln(n + 1.0) - n * np.log(2.0)
    n = k // 2
    return n * np.log(2.0) + gammaln(n + 1.0)


def _h_seed(m: int, xi: float) -> float:
    """h_m^m(xi) via the incomplete-beta form of I_m, with a complementary
    branch below xi = 1 and an asymptotic series where the regularized beta
    would underflow (validated for m <= MAX_DEGREE)."""
    lpre = _lfac2(2 * m + 1) + 0.5 * m * np.log1p(xi * xi)
    if xi < 1.0:
        xs = xi * xi / (1.0 + xi * xi)
        im0 = 0.5 * np.exp(betaln(m + 0.5, 0.5))
        below = 0.5 * np.exp(betaln(0.5, m + 0.5)) * betainc(0.5, m + 0.5, xs)
        return np.exp(lpre) * (im0 - below)
    x = 1.0 / (1.0 + xi * xi)
    if (m + 0.5) * np.log(x) > -600.0:
        lg = lpre + betaln(m + 0.5, 0.5) - np.log(2.0)
        return np.exp(lg) * betainc(m + 0.5, 0.5, x)
    # alternating series in 1/xi^2; first term dominates in this branch
    s = 0.0
    term = 1.0
    k = 0
    while True:
        s += term / (2 * m + 1 + 2 * k)
        k += 1
        term *= -(m + k) / (k * xi * xi)
        if abs(term) / (2 * m + 1 + 2 * k) < 1e-18 * abs(s) or k > 400:
            break
    return np.exp(lpre - (2 * m + 1) * np.log(xi)) * s


def _j_chain(m: int, N: int, xi: float) -> np.ndarray:
    """j_n^m(xi) for n = 0..N (zeros below n = m); upward, all-positive."""
    j = np.zeros(N + 1)
    if m > N:
        return j
    j[m] = np.exp(0.5 * m * np.log1p(xi * xi) - _lfac2(2 * m + 1))
    if m + 1 <= N:
        j[m + 1] = xi / (2 * m + 3.0) * j[m]
    for n in range(m + 1, N):
        j[n + 1] = (xi / (2.0 * n + 3) * j[n]
                    + (n - m) * (n + m) / ((2.0 * n - 1) * (2.0 * n + 1) ** 2 * (2.0 * n + 3)) * j[n - 1])
    return j


def radial_h_table(M: int, N: int, xi: float) -> np.ndarray:
    """h_n^m(xi) for 0 <= m <= M, n <= N, as array [m, n] (zeros for n < m).

    xi must be positive; use :func:`radial_tables_at_zero` for xi = 0.
    Upward recurrence while the two solutions barely separate
    (2 N arcsinh(xi) <= 5), Miller downward otherwise.
    """
    if xi <= 0.0:
        raise ValueError("radial_h_table requires xi > 0")
    if N > MAX_DEGREE:
        raise ValueError(f"degree {N} exceeds validated range {MAX_DEGREE}")
    mu = np.arcsinh(xi)
    tab = np.zeros((M + 1, N + 1))
    upward = 2.0 * N * mu <= 5.0
    for m in range(M + 1):
        if m > N:
            break
        if upward:
            h = np.zeros(N + 2)
            h[m] = _h_seed(m, xi)
            if m + 1 <= N + 1:
                if m == 0:
                    h[1] = 3.0 * (1.0 - xi * np.arctan2(1.0, xi))
                else:
                    # raise order using the m-1 chain; at small xi the
                    # subtracted term is negligible, so no cancellation
                    h[m + 1] = (((2 * m + 3.0) * (2 * m + 1.0) * tab[m - 1, m]
                                 - 2.0 * xi * tab[m - 1, m + 1])
                                / ((2 * m + 1.0) * np.sqrt(1.0 + xi * xi)))
            for n in range(m + 1, N):
                h[n + 1] = ((2.0 * n + 3) * (2.0 * n + 1) ** 2
                            / ((n + m + 1.0) * (n - m + 1.0))
                            * ((2.0 * n - 1) * h[n - 1] - xi * h[n]))
            tab[m, m:] = h[m:N + 1]
        else:
            buf = int(np.ceil(22.0 / mu))
            ns = N + buf
            yp1, y = 0.0, 1.0
            ys = np.zeros(N + 1)
            if ns <= N:
                ys[ns] = y
            for n in range(ns, m, -1):
                ym1 = (yp1 * (n + m + 1) * (n - m + 1) / ((2.0 * n + 3) * (2.0 * n + 1) ** 2)
                       + xi * y) / (2.0 * n - 1)
                yp1, y = y, ym1
                a = abs(y)
                if a > 1e280 or 0.0 < a < 1e-280:
                    scale = 1.0 / a
                    yp1 *= scale
                    y *= scale
                    ys *= scale
                if n - 1 <= N:
                    ys[n - 1] = y
            tab[m, m:] = (_h_seed(m, xi) / ys[m]) * ys[m:]
    return tab


def radial_tables_at_zero(N: int):
    """(j, j', h, h') at xi = 0 for all 0 <= m <= n <= N, arrays [n, m].

    At xi = 0 every chain is cancellation-free: the recurrences decouple by
    parity for the values, and the derivative terms carry a single sign.
    """
    if N > MAX_DEGREE:
        raise ValueError(f"degree {N} exceeds validated range {MAX_DEGREE}")
    j0 = np.zeros((N + 1, N + 1))
    j0p = np.zeros((N + 1, N + 1))
    h0 = np.zeros((N + 1, N + 1))
    h0p = np.zeros((N + 1, N + 1))
    for m in range(N + 1):
        j0[m, m] = np.exp(-_lfac2(2 * m + 1))
        h0[m, m] = np.exp(_lfac2(2 * m + 1) + _lfac2(2 * m - 1) - _lfac2(2 * m)) * np.pi / 2.0
        h0p[m, m] = -np.exp(_lfac2(2 * m + 1))
        if m + 1 <= N:
            j0p[m + 1, m] = j0[m, m] / (2 * m + 3.0)
            if m == 0:
                h0[1, 0] = 3.0
                h0p[1, 0] = -1.5 * np.pi
            else:
                h0[m + 1, m] = (2 * m + 3.0) * h0[m, m - 1]
                h0p[m + 1, m] = (2 * m + 3.0) * h0p[m, m - 1] - 2.0 * h0[m + 1, m - 1] / (2 * m + 1.0)
        for n in range(m + 1, N):
            cj = (n - m) * (n + m) / ((2.0 * n - 1) * (2.0 * n + 1) ** 2 * (2.0 * n + 3))
            j0[n + 1, m] = cj * j0[n - 1, m]
            j0p[n + 1, m] = j0[n, m] / (2.0 * n + 3) + cj * j0p[n - 1, m]
            a = (2.0 * n + 3) * (2.0 * n + 1) ** 2 / ((n + m + 1.0) * (n - m + 1.0))
            h0[n + 1, m] = a * (2.0 * n - 1) * h0[n - 1, m]
            h0p[n + 1, m] = a * ((2.0 * n - 1) * h0p[n - 1, m] - h0[n, m])
    return j0, j0p, h0, h0p


def j_fn(idx: MultipoleIndex, xi: float) -> float:
    """Regular radial function j_n^m(xi); real and nonnegative on xi >= 0."""
    if xi < 0.0:
        raise ValueError(f"xi >= 0 required, got {xi}")
    m = abs(idx.m)
    return float(_j_chain(m, idx.n, xi)[idx.n])


def h_fn(idx: MultipoleIndex, xi: float) -> float:
    """Outgoing radial function h_n^m(xi); real, nonnegative, decaying like
    1/xi^(n+1) at large xi."""
    if xi < 0.0:
        raise ValueError(f"xi >= 0 required, got {xi}")
    m = abs(idx.m)
    if xi == 0.0:
        h0 = radial_tables_at_zero(idx.n)[2]
        return float(h0[idx.n, m])
    return float(radial_h_table(m, idx.n, xi)[m, idx.n])


def j_fn_deriv(idx: MultipoleIndex) -> float:
    """dj_n^m/dxi at xi = 0."""
    j0p = radial_tables_at_zero(idx.n)[1]
    return float(j0p[idx.n, abs(idx.m)])


def h_fn_deriv(idx: MultipoleIndex) -> float:
    """dh_n^m/dxi at xi = 0."""
    h0p = radial_tables_at_zero(idx.n)[3]
    return float(h0p[idx.n, abs(idx.m)])
