"""Closed-form measures for the weakly perturbed harmonic oscillator and the
randomized ensemble relating them.

The ground state of V = omega^2 x^2 / 2 + eps3 x^3 + eps4 x^4 is truncated
to its three-term first-order expansion N^{-1/2} (|0> + alpha1 |1> +
alpha2 |2>) with N = 1 + alpha1^2 + alpha2^2. Everything downstream
(variances, both nonlinearity measures, the parametric curve) follows in
closed form; the number-basis oracle cross-checks every formula.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .errors import DomainError, SpecError
from .specfun import entropy_h

_SQRT2 = math.sqrt(2.0)
EPS_GUARD = 0.5


@dataclass(frozen=True)
class PerturbativeState:
    """Three-term perturbative ground state at a given frequency."""

    alpha1: float
    alpha2: float
    omega: float = 1.0

    def __post_init__(self):
        for name, value in (("alpha1", self.alpha1), ("alpha2", self.alpha2)):
            if not math.isfinite(value):
                raise SpecError(f"{name} must be finite, got {value!r}")
        if not (math.isfinite(self.omega) and self.omega > 0.0):
            raise SpecError(f"omega must be positive, got {self.omega!r}")

    @property
    def norm_n(self) -> float:
        """N = 1 + alpha1^2 + alpha2^2 (>= 1, equality iff unperturbed)."""
        return 1.0 + self.alpha1**2 + self.alpha2**2


@dataclass(frozen=True)
class ScatterRecord:
    """One randomized sample of the perturbative ensemble."""

    eps3: float
    eps4: float
    eta_b: float
    eta_ng: float


class CurvePoint(NamedTuple):
    """Both variants of the even-perturbation curve eta_ng(eta_b).

    ``printed`` is the commonly quoted closed form
    h(sqrt(1 + 24 t) / 2) with t = eta_b^2 (eta_b^2 - 2); since t < 0 for
    every eta_b in (0, sqrt(2)), its argument falls below the h domain and
    the value is None there. ``corrected`` is h(sqrt(1 + 24 t^2) / 2), the
    form that follows from the variance formulas via
    det sigma = (1 + 24 (alpha2^2/N)^2) / 4 and alpha2^2/N = -t, and is the
    one the number-basis oracle confirms.
    """

    printed: float | None
    corrected: float


def alpha_coefficients(
    eps3: float, eps4: float, omega: float = 1.0, guard: float = EPS_GUARD
) -> PerturbativeState:
    """First-order expansion coefficients of the cubic/quartic perturbation.

    alpha1 = -3 eps3 / (2 omega)^{3/2} and
    alpha2 = -(eps4 / 2) (3 / sqrt(2)) / omega^2. The matrix elements behind
    them assume unit level spacing, so omega != 1 evaluates the same
    formulas verbatim.
    """
    for name, value in (("eps3", eps3), ("eps4", eps4)):
        if not math.isfinite(value) or abs(value) > guard:
            raise SpecError(
                f"perturbative guard violated: |{name}|={abs(value)!r} exceeds {guard}"
            )
    if not (math.isfinite(omega) and omega > 0.0):
        raise SpecError(f"omega must be positive, got {omega!r}")
    alpha1 = -3.0 * eps3 / (2.0 * omega) ** 1.5
    alpha2 = -0.5 * eps4 * (3.0 / _SQRT2) / omega**2
    return PerturbativeState(alpha1=alpha1, alpha2=alpha2, omega=omega)


def perturbed_variances(state: PerturbativeState) -> tuple[float, float]:
    """Position and momentum variances of the three-term state (omega = 1
    ladder units)."""
    a1, a2 = state.alpha1, state.alpha2
    n = state.norm_n
    var_q = (
        3.0 * a1**4
        - 6.0 * _SQRT2 * a1**2 * a2
        + (1.0 + a2**2) * (1.0 + 2.0 * _SQRT2 * a2 + 5.0 * a2**2)
    ) / (2.0 * n**2)
    var_p = 1.5 - (1.0 + _SQRT2 * a2 - a2**2) / n
    return var_q, var_p


def eta_b_perturbative(state: PerturbativeState) -> float:
    """sqrt(1 - N^{-1/2}): the vacuum overlap of the three-term state is
    exactly N^{-1/2}."""
    return math.sqrt(1.0 - state.norm_n**-0.5)


def eta_ng_perturbative(state: PerturbativeState) -> float:
    """Ground-state non-Gaussianity h(sqrt(var_q var_p)) from the closed-form
    variances."""
    var_q, var_p = perturbed_variances(state)
    det = var_q * var_p
    if det < 0.25 - 1e-9:
        raise DomainError(
            f"perturbative det sigma = {det} dips below 1/4: variance formulas "
            "transcribed wrongly"
        )
    return entropy_h(math.sqrt(det))


def parametric_curve(eta_b: float) -> CurvePoint:
    """Evaluate both variants of the even-perturbation curve at eta_b."""
    if not (0.0 <= eta_b < 1.0):
        raise DomainError(f"parametric curve defined for eta_b in [0, 1), got {eta_b!r}")
    t = eta_b**2 * (eta_b**2 - 2.0)
    printed = None
    printed_arg_sq = 1.0 + 24.0 * t
    if printed_arg_sq >= 0.0:
        x = 0.5 * math.sqrt(printed_arg_sq)
        if x >= 0.5 - 1e-9:
            printed = entropy_h(x)
    corrected = entropy_h(0.5 * math.sqrt(1.0 + 24.0 * t**2))
    return CurvePoint(printed=printed, corrected=corrected)


def scatter_sample(
    n: int,
    eps3_range: tuple[float, float],
    eps4_range: tuple[float, float],
    omega: float = 1.0,
    seed: int = 0,
) -> list[ScatterRecord]:
    """Draw n independent uniform (eps3, eps4) samples and evaluate both
    measures for each.

    Deterministic for a fixed seed; both range endpoints must respect the
    perturbative guard.
    """
    if n < 0:
        raise SpecError(f"sample count must be >= 0, got {n}")
    for name, (lo, hi) in (("eps3", eps3_range), ("eps4", eps4_range)):
        if not (math.isfinite(lo) and math.isfinite(hi) and lo <= hi):
            raise SpecError(f"{name} range must be ordered and finite, got ({lo}, {hi})")
        if max(abs(lo), abs(hi)) > EPS_GUARD:
            raise SpecError(
                f"{name} range ({lo}, {hi}) exceeds the perturbative guard {EPS_GUARD}"
            )
    rng = np.random.default_rng(seed)
    eps3_draw = rng.uniform(eps3_range[0], eps3_range[1], n)
    eps4_draw = rng.uniform(eps4_range[0], eps4_range[1], n)
    records = []
    for e3, e4 in zip(eps3_draw, eps4_draw):
        state = alpha_coefficients(float(e3), float(e4), omega)
        records.append(
            ScatterRecord(
                eps3=float(e3),
                eps4=float(e4),
                eta_b=eta_b_perturbative(state),
                eta_ng=eta_ng_perturbative(state),
            )
        )
    return records
