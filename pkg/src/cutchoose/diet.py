"""Closed-form long-run diet frequencies and fairness residuals.

Each round partitions the three foods into rejected / chosen / leftover, so
the stationary frequency with which the cutter eats food k sums the two ways
food k can be left over, and likewise for the chooser:

    lam_0 = c[2|1]*p1 + c[1|2]*p2        om_0 = c[0|1]*p1 + c[0|2]*p2
    lam_1 = c[0|2]*p2 + c[2|0]*p0        om_1 = c[1|0]*p0 + c[1|2]*p2
    lam_2 = c[1|0]*p0 + c[0|1]*p1        om_2 = c[2|0]*p0 + c[2|1]*p1

Both diets are fair when every component equals 1/3. These formulas are the
primary semantics; the Monte Carlo simulator must converge to them.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NotNormalized, OutOfRange
from .strategies import ChooserStrategy, CutterStrategy

FAIR_SHARE = 1.0 / 3.0

_SUM_TOLERANCE = 1e-12

Triple = tuple[float, float, float]


@dataclass(frozen=True)
class DietProfile:
    """Exact per-food consumption frequencies: lam for the cutter, omega for the chooser."""

    lam: Triple
    omega: Triple

    def __post_init__(self) -> None:
        for name, values in (("lam", self.lam), ("omega", self.omega)):
            t = tuple(float(v) for v in values)
            if len(t) != 3:
                raise OutOfRange(f"{name} must have three entries, got {values!r}")
            if any(not (0.0 <= v <= 1.0) for v in t):
                raise OutOfRange(f"{name} entries must lie in [0, 1], got {values!r}")
            total = (t[0] + t[1]) + t[2]
            if abs(total - 1.0) > _SUM_TOLERANCE:
                raise NotNormalized(f"{name} must sum to 1, got {total!r}")
            object.__setattr__(self, name, t)


def diet_profile(cutter: CutterStrategy, chooser: ChooserStrategy) -> DietProfile:
    """Exact diet frequencies for a strategy pair."""
    p0, p1, p2 = cutter.p
    lam = (
        chooser.c21 * p1 + chooser.c12 * p2,
        chooser.c02 * p2 + chooser.c20 * p0,
        chooser.c10 * p0 + chooser.c01 * p1,
    )
    omega = (
        chooser.c01 * p1 + chooser.c02 * p2,
        chooser.c10 * p0 + chooser.c12 * p2,
        chooser.c20 * p0 + chooser.c21 * p1,
    )
    return DietProfile(lam, omega)


@dataclass(frozen=True)
class FairnessReport:
    """Signed deviations of a diet profile from the fair 1/3 share."""

    lambda_residuals: Triple
    omega_residuals: Triple
    max_abs_residual: float
    tolerance: float
    is_fair: bool


def fairness_residual(profile: DietProfile, tolerance: float = 1e-9) -> FairnessReport:
    """Signed residuals (share - 1/3) and the fairness verdict at the given tolerance."""
    tol = float(tolerance)
    if not tol >= 0.0:
        raise OutOfRange(f"tolerance must be >= 0, got {tolerance!r}")
    lam_res = tuple(v - FAIR_SHARE for v in profile.lam)
    om_res = tuple(v - FAIR_SHARE for v in profile.omega)
    max_abs = max(abs(r) for r in lam_res + om_res)
    return FairnessReport(
        lambda_residuals=lam_res,  # type: ignore[arg-type]
        omega_residuals=om_res,  # type: ignore[arg-type]
        max_abs_residual=max_abs,
        tolerance=tol,
        is_fair=max_abs <= tol,
    )
