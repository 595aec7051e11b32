"""Acceptance criteria for the whole library, runnable as one suite.

Each criterion is a self-contained check with a stated tolerance; the
registry is consumed both by the CLI (`renyi2 acceptance`) and by
tests/test_acceptance.py.  Worldline runs are memoized so the suite does
not repeat identical Monte Carlo work across criteria.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass

import numpy as np

from . import disk_multipole as dm
from . import halfspace as hs
from . import specfun as sf
from . import worldline as wl

__all__ = ["CriterionResult", "CRITERIA", "run_criterion", "run_all"]


@dataclass(frozen=True)
class CriterionResult:
    number: int
    title: str
    passed: bool
    detail: str
    seconds: float


_SEED = 20260809


def _rel(a, b):
    return abs(a - b) / abs(b)


# ---------------------------------------------------------------------------
# 1. capacitance table
# ---------------------------------------------------------------------------

def _crit_capacitances():
    cd = dm.capacitance_disk(dm.BoundaryCondition.DIRICHLET, 1).entries
    cn = dm.capacitance_disk(dm.BoundaryCondition.NEUMANN, 1).entries
    idx = sf.MultipoleIndex
    targets = [
        (cd[idx(0, 0)], 2.0 / np.pi, "C_D(0,0)"),
        (cd[idx(1, 1)], 4.0 / (9.0 * np.pi), "C_D(1,1)"),
        (cd[idx(1, -1)], 4.0 / (9.0 * np.pi), "C_D(1,-1)"),
        (cn[idx(1, 0)], -2.0 / (9.0 * np.pi), "C_N(1,0)"),
    ]
    zeros = [(cd[idx(1, 0)], "C_D(1,0)"), (cn[idx(0, 0)], "C_N(0,0)"),
             (cn[idx(1, 1)], "C_N(1,1)"), (cn[idx(1, -1)], "C_N(1,-1)")]
    worst = max(_rel(got, want) for got, want, _ in targets)
    worst_zero = max(abs(v) for v, _ in zeros)
    ok = worst <= 1e-12 and worst_zero <= 1e-12
    return ok, f"max rel err {worst:.2e}, max |zero entry| {worst_zero:.2e} (tol 1e-12)"


# ---------------------------------------------------------------------------
# 2. monopole translation closed form
# ---------------------------------------------------------------------------

def _crit_translation_closed_form():
    worst = 0.0
    for r in (2.05, 3.0, 10.0, 100.0):
        xi0 = math.sqrt(r * r - 1.0)
        u = dm.translation_matrix(xi0, 0.0, np.pi / 2, 0).entries[0, 0]
        worst = max(worst, abs(complex(u) - math.asin(1.0 / r)))
    return worst <= 1e-10, f"max |U_0000 - arcsin(R/r)| = {worst:.2e} (tol 1e-10)"


# ---------------------------------------------------------------------------
# 3/4. two-disk asymptotics
# ---------------------------------------------------------------------------

def _crit_leading_asymptote():
    r = 40.0
    i2 = dm.renyi2_two_disks(dm.DiskPairGeometry(r), 3)
    scaled = i2 * r * r * np.pi ** 2 / 2.0
    return 0.99 <= scaled <= 1.01, f"I2 r^2 pi^2/2 = {scaled:.6f} (need [0.99, 1.01])"


def _crit_subleading_coefficient():
    r = 10.0
    i2 = dm.renyi2_two_disks(dm.DiskPairGeometry(r), 10)
    coeff = (i2 - 2.0 / (np.pi ** 2 * r ** 2)) * r ** 4
    target = 10.0 / (3.0 * np.pi ** 2) + 4.0 / np.pi ** 4
    rel = _rel(coeff, target)
    return rel <= 0.05, f"subleading coeff {coeff:.5f} vs {target:.5f}, rel {rel:.3f} (tol 5%)"


# ---------------------------------------------------------------------------
# 5. truncation convergence
# ---------------------------------------------------------------------------

def _crit_truncation_convergence():
    geom = dm.DiskPairGeometry(2.5)
    i15 = dm.renyi2_two_disks(geom, 15)
    i25 = dm.renyi2_two_disks(geom, 25)
    rel = abs(i25 - i15) / i25
    return rel < 0.01, f"|I2(25)-I2(15)|/I2(25) = {rel:.2e} (tol 1%)"


# ---------------------------------------------------------------------------
# 6. monotonicity and positivity
# ---------------------------------------------------------------------------

def _crit_monotonicity():
    grid = [2.1, 2.5, 3.0, 4.0, 5.0, 7.0, 10.0, 15.0, 20.0]
    vals = [p.i2_total for p in dm.separation_sweep(grid, 20)]
    positive = all(v > 0.0 for v in vals)
    decreasing = all(a > b for a, b in zip(vals, vals[1:]))
    return positive and decreasing, (
        f"positive={positive}, strictly decreasing={decreasing}, "
        f"I2 range [{vals[-1]:.3e}, {vals[0]:.3e}]")


# ---------------------------------------------------------------------------
# 7. Neumann decay exponent
# ---------------------------------------------------------------------------

def _crit_neumann_decay():
    rs = np.array([20.0, 30.0, 45.0, 65.0, 100.0])
    neu = np.array([dm.renyi2_two_disks_parts(dm.DiskPairGeometry(r), 4)[1] for r in rs])
    slope = np.polyfit(np.log(rs), np.log(neu), 1)[0]
    return abs(slope + 6.0) <= 0.2, f"Neumann log-log slope {slope:.3f} (need -6 +- 0.2)"


# ---------------------------------------------------------------------------
# 8/9. half-spaces
# ---------------------------------------------------------------------------

def _crit_first_reflection():
    target = 1.0 / (16.0 * np.pi)
    worst = 0.0
    for length in (0.5, 1.0, 2.0):
        val = hs.first_reflection_halfspaces(hs.HalfSpacePairGeometry(length))
        worst = max(worst, _rel(length * val, target))
    return worst <= 1e-6, f"max rel err of l*I2/Sigma vs 1/(16 pi): {worst:.2e} (tol 1e-6)"


def _crit_two_reflection_coefficient():
    a2 = hs.halfspace_coefficient()["A2"]
    ok = abs(a2 - 0.022) <= 0.001 and 0.020 <= a2 <= 0.024
    return ok, f"A2 = {a2:.5f} (need 0.022 +- 0.001 and in [0.020, 0.024])"


# ---------------------------------------------------------------------------
# 10. disk-half-space
# ---------------------------------------------------------------------------

def _crit_disk_halfspace():
    res = hs.disk_halfspace(hs.DiskHalfSpaceGeometry(disk_radius=1.0, separation=10.0))
    rel_value = _rel(res.value * 10.0, 1.0 / np.pi ** 2)
    rel_integral = _rel(res.double_integral, 4.0 * np.pi)
    ok = rel_value <= 1e-4 and rel_integral <= 1e-6
    return ok, (f"I2 l/R rel err {rel_value:.2e} (tol 1e-4); "
                f"double integral rel err {rel_integral:.2e} (tol 1e-6)")


# ---------------------------------------------------------------------------
# 11-13. worldline
# ---------------------------------------------------------------------------

_WL_CACHE: dict = {}


def _disk_pair(r):
    return (wl.Disk(center=(0.0, -r / 2.0), radius=1.0),
            wl.Disk(center=(0.0, +r / 2.0), radius=1.0))


def _wl_mutual(r: float, n_placements: int, seed_offset: int) -> wl.MutualEstimate:
    key = (r, n_placements, seed_offset)
    if key not in _WL_CACHE:
        a, b = _disk_pair(r)
        plan = wl.SamplingPlan(n_placements=n_placements)
        _WL_CACHE[key] = wl.estimate_mutual(a, b, plan, seed=_SEED + seed_offset)
    return _WL_CACHE[key]


def _multipole_dirichlet(r: float) -> float:
    return dm.renyi2_two_disks_parts(dm.DiskPairGeometry(r), 12)[0]


def _crit_worldline_cross_validation():
    e5 = _wl_mutual(5.0, 1_000_000, 5)
    e8 = _wl_mutual(8.0, 1_000_000, 8)
    rel5 = e5.dirichlet.stderr / e5.dirichlet.mean
    rel8 = e8.dirichlet.stderr / e8.dirichlet.mean
    kappa = _multipole_dirichlet(5.0) / e5.dirichlet.mean
    predicted = kappa * e8.dirichlet.mean
    target = _multipole_dirichlet(8.0)
    sigma = predicted * math.hypot(rel5, rel8)
    pulls = abs(predicted - target) / sigma
    ok = pulls <= 3.0 and rel5 <= 0.05 and rel8 <= 0.05
    return ok, (f"calibrated I2_dir(8) = {predicted:.3e} vs multipole {target:.3e}: "
                f"{pulls:.2f} sigma (need <= 3); rel errs {rel5:.1%}, {rel8:.1%} (cap 5%)")


def _crit_worldline_exponent():
    rs = [5.0, 8.0, 12.0, 16.0, 20.0]
    vals, errs = [], []
    for r in rs:
        n = 1_000_000 if r in (5.0, 8.0) else 400_000
        est = _wl_mutual(r, n, int(r))
        vals.append(est.dirichlet.mean)
        errs.append(est.dirichlet.stderr)
    logv = np.log(vals)
    w = (np.array(vals) / np.array(errs)) ** 2
    slope = np.polyfit(np.log(rs), logv, 1, w=np.sqrt(w))[0]
    return abs(slope + 2.0) <= 0.3, f"Dirichlet separation exponent {slope:.3f} (need -2 +- 0.3)"


def _crit_inequalities():
    a = wl.Disk(center=(0.0, -4.0), radius=1.0)
    b = wl.Disk(center=(0.0, 0.0), radius=1.0)
    c = wl.Disk(center=(0.0, 4.0), radius=1.0)
    plan = wl.SamplingPlan(n_placements=400_000)
    rep = wl.inequality_suite(a, b, c, plan, seed=_SEED + 13)
    ok = (rep.dominance_neumann_fraction == 1.0
          and rep.dominance_tripartite_fraction == 1.0
          and rep.lower_ok and rep.upper_ok)
    return ok, (f"dominance fractions {rep.dominance_neumann_fraction:.4f}/"
                f"{rep.dominance_tripartite_fraction:.4f} (need 1.0); "
                f"0 <= I2(A,B,C): margin {rep.lower_margin_sigmas:.1f} sigma; "
                f"I2(A,B,C) <= I2(A,B): margin {rep.upper_margin_sigmas:.1f} sigma")


# ---------------------------------------------------------------------------
# 14. special-function property suites
# ---------------------------------------------------------------------------

def _crit_property_suites():
    import sympy.physics.wigner as spw

    # 3j symmetries: even column permutations invariant, odd pick up (-1)^(j1+j2+j3)
    worst_sym = 0.0
    for j1 in range(5):
        for j2 in range(5):
            for j3 in range(abs(j1 - j2), min(j1 + j2, 4) + 1):
                for m1 in range(-j1, j1 + 1):
                    for m2 in range(-j2, j2 + 1):
                        m3 = -m1 - m2
                        if abs(m3) > j3:
                            continue
                        w = sf.wigner3j(j1, j2, j3, m1, m2, m3)
                        even = sf.wigner3j(j2, j3, j1, m2, m3, m1)
                        odd = sf.wigner3j(j2, j1, j3, m2, m1, m3)
                        phase = (-1.0) ** (j1 + j2 + j3)
                        worst_sym = max(worst_sym, abs(w - even), abs(w - phase * odd))
    # orthogonality
    worst_orth = 0.0
    for j1 in range(5):
        for j2 in range(5):
            for j3 in range(abs(j1 - j2), min(j1 + j2, 4) + 1):
                for m3 in range(-j3, j3 + 1):
                    acc = 0.0
                    for m1 in range(-j1, j1 + 1):
                        for m2 in range(-j2, j2 + 1):
                            if m1 + m2 + m3 != 0:
                                continue
                            acc += (2 * j3 + 1) * sf.wigner3j(j1, j2, j3, m1, m2, m3) ** 2
                    worst_orth = max(worst_orth, abs(acc - 1.0))
    # exact-rational oracle spot check
    worst_oracle = 0.0
    for (j1, j2, j3, m1, m2, m3) in [(1, 1, 2, 0, 0, 0), (2, 3, 4, 1, -2, 1),
                                     (4, 4, 4, 2, 1, -3), (3, 2, 1, -1, 0, 1)]:
        ref = float(spw.wigner_3j(j1, j2, j3, m1, m2, m3))
        worst_oracle = max(worst_oracle, abs(sf.wigner3j(j1, j2, j3, m1, m2, m3) - ref))

    # spherical-harmonic normalization by quadrature, n <= 8
    nodes, weights = np.polynomial.legendre.leggauss(48)
    nphi = 64
    phis = 2.0 * np.pi * np.arange(nphi) / nphi
    worst_norm = 0.0
    for n in range(9):
        for m in range(-n, n + 1):
            vals = np.array([[sf.sph_harm(sf.MultipoleIndex(n, m), eta, phi)
                              for phi in phis] for eta in nodes])
            integral = np.sum(weights[:, None] * np.abs(vals) ** 2) * (2.0 * np.pi / nphi)
            worst_norm = max(worst_norm, abs(integral - 1.0))

    # radial nonnegativity on xi in [0, 50], n <= 20
    xis = np.concatenate([[0.0], np.linspace(0.01, 50.0, 120)])
    neg = 0
    for xi in xis:
        if xi == 0.0:
            j0, _, h0, _ = sf.radial_tables_at_zero(20)
            for n in range(21):
                for m in range(n + 1):
                    if j0[n, m] < 0 or h0[n, m] < 0:
                        neg += 1
        else:
            htab = sf.radial_h_table(20, 20, xi)
            for m in range(21):
                jch = sf._j_chain(m, 20, xi)
                for n in range(m, 21):
                    if jch[n] < 0 or htab[m, n] < 0:
                        neg += 1
    ok = (worst_sym <= 1e-12 and worst_orth <= 1e-10 and worst_oracle <= 1e-12
          and worst_norm <= 1e-10 and neg == 0)
    return ok, (f"3j symmetry {worst_sym:.1e}, orthogonality {worst_orth:.1e}, "
                f"oracle {worst_oracle:.1e}, Y norm {worst_norm:.1e} (tol 1e-10), "
                f"negative radial values: {neg}")


CRITERIA = [
    (1, "disk capacitance matrix elements", _crit_capacitances),
    (2, "translation monopole closed form", _crit_translation_closed_form),
    (3, "two-disk leading asymptote", _crit_leading_asymptote),
    (4, "two-disk subleading coefficient", _crit_subleading_coefficient),
    (5, "truncation convergence at r/R = 2.5", _crit_truncation_convergence),
    (6, "monotonicity and positivity", _crit_monotonicity),
    (7, "Neumann decay exponent", _crit_neumann_decay),
    (8, "half-space first reflection", _crit_first_reflection),
    (9, "half-space two-reflection coefficient", _crit_two_reflection_coefficient),
    (10, "disk-half-space information", _crit_disk_halfspace),
    (11, "worldline cross-validation", _crit_worldline_cross_validation),
    (12, "worldline separation exponent", _crit_worldline_exponent),
    (13, "worldline inequality suite", _crit_inequalities),
    (14, "special-function property suites", _crit_property_suites),
]


def run_criterion(number: int) -> CriterionResult:
    for num, title, fn in CRITERIA:
        if num == number:
            t0 = time.perf_counter()
            passed, detail = fn()
            return CriterionResult(num, title, passed, detail, time.perf_counter() - t0)
    raise KeyError(f"no criterion {number}")


def run_all(printer=print) -> list[CriterionResult]:
    results = []
    for num, title, fn in CRITERIA:
        t0 = time.perf_counter()
        passed, detail = fn()
        res = CriterionResult(num, title, passed, detail, time.perf_counter() - t0)
        results.append(res)
        if printer is not None:
            status = "PASS" if res.passed else "FAIL"
            printer(f"{status}  {num:2d}. {title}: {detail} [{res.seconds:.1f}s]")
    return results
