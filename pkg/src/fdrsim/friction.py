"""Friction variation under blowing and suction at the output port.

A pad resting on the port with weight ``W`` is measured by the usual
ratios: static coefficient from the force at slip onset, kinetic from the
mean sliding force,

    mu_s = f_slip / W        mu_k = f_mean / W.

The port pressure changes the normal force the surfaces actually carry:
suction (p_out < 0) pulls the pad down over the acting contact area
``a_eff``, blowing (p_out > 0) lifts it, clamped at liftoff,

    n_eff = max(0, W + (-p_out) a_eff).

Reported coefficients keep the weight in the denominator (that is how
the measurement is normalized), so predictions scale the no-flow base
coefficients by ``n_eff / W``.  The relative change above the liftoff
clamp is exactly ``(-p_out) a_eff / W``: suction gains fall off as 1/W.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .core import Device
from .ejector import DEFAULT_COEFFS, ModelCoefficients
from .engine import OperatingState, solve_operating_point

__all__ = [
    "DEFAULT_A_EFF",
    "FrictionSample",
    "FrictionPrediction",
    "FrictionCurvePoint",
    "coefficients_from_sample",
    "effective_normal",
    "predict_coefficients",
    "friction_curve",
]

DEFAULT_A_EFF = 1.0e-4  # [m^2] pad contact area the port pressure acts on


@dataclass(frozen=True)
class FrictionSample:
    weight_load: float   # W [N]
    f_slip: float        # force at slip onset [N]
    f_mean: float        # mean sliding force [N]

    def __post_init__(self) -> None:
        if self.weight_load <= 0.0:
            raise ValueError("weight_load must be positive")
        if self.f_slip < 0.0 or self.f_mean < 0.0:
            raise ValueError("forces must be nonnegative")


@dataclass(frozen=True)
class FrictionPrediction:
    mu_s: float    # static coefficient
    mu_k: float    # kinetic coefficient
    n_eff: float   # effective normal force [N]

    def __post_init__(self) -> None:
        if self.mu_s < 0.0 or self.mu_k < 0.0 or self.n_eff < 0.0:
            raise ValueError("prediction fields must be nonnegative")


@dataclass(frozen=True)
class FrictionCurvePoint:
    q_in: float                    # [m^3/s]
    state: OperatingState          # solved device state at q_in
    prediction: FrictionPrediction


def coefficients_from_sample(s: FrictionSample) -> tuple[float, float]:
    """(mu_s, mu_k) measured from one weighted-pad trial."""
    return s.f_slip / s.weight_load, s.f_mean / s.weight_load


def effective_normal(weight_load: float, p_out: float, a_eff: float) -> float:
    """Normal force [N] carried by the contact under port pressure.

    Suction adds (-p_out) a_eff, blowing subtracts; clamped at zero when
    blowing lifts the pad off.
    """
    if weight_load < 0.0:
        raise ValueError("weight_load must be nonnegative")
    if a_eff <= 0.0:
        raise ValueError("a_eff must be positive")
    return max(0.0, weight_load + (-p_out) * a_eff)


def predict_coefficients(mu0_s: float, mu0_k: float, weight_load: float,
                         p_out: float, a_eff: float) -> FrictionPrediction:
    """Scale no-flow base coefficients by the normal-force change.

    Both coefficients share the factor n_eff / W, so their ratio never
    moves; the relative change is (-p_out) a_eff / W above liftoff.
    """
    if mu0_s <= 0.0 or mu0_k <= 0.0:
        raise ValueError("base coefficients must be positive")
    if weight_load <= 0.0:
        raise ValueError("weight_load must be positive")
    n_eff = effective_normal(weight_load, p_out, a_eff)
    factor = n_eff / weight_load
    return FrictionPrediction(mu_s=mu0_s * factor, mu_k=mu0_k * factor,
                              n_eff=n_eff)


def friction_curve(device: Device,
                   coeffs: ModelCoefficients = DEFAULT_COEFFS, *,
                   mu0_s: float, mu0_k: float, weight_load: float,
                   a_eff: float = DEFAULT_A_EFF,
                   q_list: Sequence[float]) -> tuple[FrictionCurvePoint, ...]:
    """Predicted coefficients at each supply flow in ``q_list``."""
    if not q_list:
        raise ValueError("q_list must be non-empty")
    points = []
    for q in q_list:
        state = solve_operating_point(q, device, coeffs)
        prediction = predict_coefficients(mu0_s, mu0_k, weight_load,
                                          state.p_out, a_eff)
        points.append(FrictionCurvePoint(q_in=q, state=state,
                                         prediction=prediction))
    return tuple(points)
