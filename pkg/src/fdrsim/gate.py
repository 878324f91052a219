"""Pressure-operated flap gate: stiffness ranking and opening area.

The gate is a pair of cantilevered elastomer walls (width ``w``,
thickness ``t``, height ``h``) spanning the exhaust channel.  Chamber
pressure inflates the side chambers, presses the walls apart, and opens a
flow area ``a_fg``.  A full plate solution is overkill for ranking
designs, so the model reduces to two ingredients:

* a flexural-rigidity proxy ``D = E t^3 h / w`` [N m] that orders gates
  by how hard they are to push open, and
* a saturating linear compliance

      a_fg = min(a_fg_max, (k0 D_ref / D) max(0, p - p_c))

  where ``k0`` [m^2/Pa] is the opening gain quoted for the nominal gate
  (whose stiffness is ``D_ref``), ``p_c`` [Pa] is the cracking pressure
  below which the walls stay sealed, and ``a_fg_max`` caps the opening at
  the physical window, by default ``w h``.

Softer, thinner, or wider gates have smaller ``D`` and therefore open
further at the same pressure.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import FlapGateGeometry, Material

__all__ = [
    "REFERENCE_STIFFNESS",
    "GateComplianceModel",
    "GateState",
    "gate_stiffness",
    "opening_area",
    "opening_ratio",
]


def gate_stiffness(geom: FlapGateGeometry, mat: Material) -> float:
    """Flexural-rigidity proxy D = E t^3 h / w [N m].

    Strictly increasing in modulus, thickness, and height; strictly
    decreasing in width.
    """
    if geom.w <= 0.0 or geom.t <= 0.0 or geom.h <= 0.0:
        raise ValueError("gate dimensions must be positive")
    if mat.youngs_modulus <= 0.0:
        raise ValueError("youngs_modulus must be positive")
    return mat.youngs_modulus * geom.t ** 3 * geom.h / geom.w


def _reference_stiffness() -> float:
    nominal = FlapGateGeometry(w=8.0e-3, t=0.5e-3, h=2.0e-3)
    return gate_stiffness(nominal, Material.from_shore_a(10.0))


# stiffness of the nominal gate; anchors the opening gain k0 so that the
# same k0 means the same compliance on the nominal build
REFERENCE_STIFFNESS = _reference_stiffness()


@dataclass(frozen=True)
class GateComplianceModel:
    compliance_scale: float   # k0, opening gain of the nominal gate [m^2/Pa]
    crack_pressure: float     # p_c, sealing threshold [Pa]
    a_fg_max: float           # saturation opening [m^2]

    def __post_init__(self) -> None:
        if self.compliance_scale <= 0.0:
            raise ValueError("compliance_scale must be positive")
        if self.crack_pressure < 0.0:
            raise ValueError("crack_pressure must be nonnegative")
        if self.a_fg_max <= 0.0:
            raise ValueError("a_fg_max must be positive")

    @classmethod
    def for_gate(cls, geom: FlapGateGeometry, compliance_scale: float,
                 crack_pressure: float) -> "GateComplianceModel":
        """Model saturating at the gate's own window ``w h``."""
        return cls(compliance_scale=compliance_scale,
                   crack_pressure=crack_pressure,
                   a_fg_max=geom.w * geom.h)


@dataclass(frozen=True)
class GateState:
    a_fg: float             # opened flow area [m^2]
    open_fraction: float    # a_fg / a_fg_max, in [0, 1]

    def __post_init__(self) -> None:
        if self.a_fg < 0.0:
            raise ValueError("a_fg must be nonnegative")
        if not 0.0 <= self.open_fraction <= 1.0:
            raise ValueError("open_fraction must lie in [0, 1]")


def opening_area(p: float, model: GateComplianceModel,
                 geom: FlapGateGeometry, mat: Material) -> GateState:
    """Gate opening at chamber gauge pressure ``p`` [Pa].

    Continuous and nondecreasing in ``p``; at fixed ``p`` above the
    cracking pressure, stiffer gates open less.
    """
    if p < 0.0:
        raise ValueError("p must be nonnegative (gauge)")
    stiffness = gate_stiffness(geom, mat)
    gain = model.compliance_scale * REFERENCE_STIFFNESS / stiffness
    a_fg = min(model.a_fg_max, gain * max(0.0, p - model.crack_pressure))
    return GateState(a_fg=a_fg, open_fraction=a_fg / model.a_fg_max)


def opening_ratio(a_fg: float, a_ex: float) -> float:
    """Opening area relative to the exhaust window, a_fg / a_ex."""
    if a_ex <= 0.0:
        raise ValueError("a_ex must be positive")
    if a_fg < 0.0:
        raise ValueError("a_fg must be nonnegative")
    return a_fg / a_ex
