"""Measurement ingestion and least-squares coefficient fitting.

Two fits are supported.  The supply law ``p_in = c1 q + c2 q^2`` is fit
by normal equations with a nonnegativity clamp (coordinate descent when
the unconstrained optimum goes negative): the quadratic term captures
orifice-like losses, the linear term open-channel losses, and the model
passes through the origin because gauge pressure vanishes at no flow.

The output-port closure coefficients (entrainment efficiency, gate gain,
cracking pressure) are fit by the derivative-free kernel from the engine
module against measured output pressures.  Two declared coefficients are
returned untouched: the assembly leak never enters the output pressure,
and the recirculation weight acts through the one fixed gate width of
the measured device, so single-device data cannot separate it from the
entrainment efficiency.

Measurement files are CSV with header ``q_in_lpm,p_in_kpa,p_out_kpa,
a_fg_mm2``; optional columns may be empty.  Everything is converted to
SI at the boundary.
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass, replace
from pathlib import Path

import numpy as np

from ._units import M2_PER_MM2, M3S_PER_LPM, PA_PER_KPA
from .core import Device
from .ejector import DEFAULT_COEFFS, ModelCoefficients
from .engine import nelder_mead, solve_operating_point

__all__ = [
    "FitError",
    "MeasurementRow",
    "MeasurementSet",
    "FitReport",
    "builtin_calibration_points",
    "load_measurements",
    "fit_input_pressure",
    "fit_closures",
]


class FitError(RuntimeError):
    """A fit cannot proceed (missing data or a degenerate system)."""


@dataclass(frozen=True)
class MeasurementRow:
    q_in: float                 # [m^3/s]
    p_in: float | None = None   # [Pa]
    p_out: float | None = None  # [Pa]
    a_fg: float | None = None   # [m^2]

    def __post_init__(self) -> None:
        if self.q_in < 0.0:
            raise ValueError("q_in must be nonnegative")


@dataclass(frozen=True)
class MeasurementSet:
    rows: tuple[MeasurementRow, ...]
    label: str = ""

    def __post_init__(self) -> None:
        # exact duplicate rows carry no new information: collapse them so
        # fits are invariant to repeated trials being pasted twice
        seen: dict[MeasurementRow, None] = {}
        for row in self.rows:
            seen.setdefault(row)
        deduped = tuple(seen)
        object.__setattr__(self, "rows", deduped)
        qs = [r.q_in for r in deduped]
        if len(set(qs)) != len(qs):
            raise ValueError("q_in values must be distinct")


@dataclass(frozen=True)
class FitReport:
    coefficients: dict[str, float]
    rms_residual: dict[str, float]          # per fitted quantity [same unit]
    residuals: dict[str, tuple[float, ...]]  # measured minus fitted, per point
    warnings: tuple[str, ...] = ()

    def __post_init__(self) -> None:
        for key, rms in self.rms_residual.items():
            res = self.residuals.get(key, ())
            if not res:
                raise ValueError(f"no residuals recorded for {key}")
            check = math.sqrt(sum(r * r for r in res) / len(res))
            if abs(rms - check) > 1.0e-12 * max(1.0, abs(check)):
                raise ValueError(f"rms_residual[{key!r}] does not match "
                                 "its residual list")


def builtin_calibration_points() -> MeasurementSet:
    """The six published bench measurements of the supply line, SI units."""
    points_lpm_kpa = ((5.0, 5.4), (10.0, 13.5), (15.0, 21.1),
                      (20.0, 32.2), (25.0, 41.1), (30.0, 47.1))
    rows = tuple(MeasurementRow(q_in=q * M3S_PER_LPM, p_in=p * PA_PER_KPA)
                 for q, p in points_lpm_kpa)
    return MeasurementSet(rows=rows, label="builtin")


def load_measurements(path: str | Path) -> MeasurementSet:
    """Read a measurement CSV (display units) into an SI MeasurementSet."""
    path = Path(path)
    rows: list[MeasurementRow] = []
    with path.open(newline="", encoding="utf-8") as fh:
        reader = csv.DictReader(fh)
        if reader.fieldnames is None or "q_in_lpm" not in reader.fieldnames:
            raise FitError(f"{path}: missing required column q_in_lpm")

        def grab(record: dict, column: str, scale: float) -> float | None:
            raw = (record.get(column) or "").strip()
            return float(raw) * scale if raw else None

        for record in reader:
            q_raw = (record.get("q_in_lpm") or "").strip()
            if not q_raw:
                continue
            rows.append(MeasurementRow(
                q_in=float(q_raw) * M3S_PER_LPM,
                p_in=grab(record, "p_in_kpa", PA_PER_KPA),
                p_out=grab(record, "p_out_kpa", PA_PER_KPA),
                a_fg=grab(record, "a_fg_mm2", M2_PER_MM2),
            ))
    return MeasurementSet(rows=tuple(rows), label=path.name)


def _input_fit_rows(data: MeasurementSet) -> list[MeasurementRow]:
    rows = [r for r in data.rows if r.p_in is not None]
    if len(rows) < 2:
        raise FitError("need at least 2 rows with p_in to fit the supply law")
    return rows


def fit_input_pressure(data: MeasurementSet) -> tuple[tuple[float, float], FitReport]:
    """Fit ``p_in = c1 q + c2 q^2`` with nonnegative coefficients.

    Normal equations first; when the unconstrained optimum has a negative
    coefficient, clamped coordinate descent takes over.  Deterministic.
    """
    rows = _input_fit_rows(data)
    q = np.array([r.q_in for r in rows])
    y = np.array([r.p_in for r in rows])
    design = np.column_stack([q, q * q])
    a = design.T @ design
    b = design.T @ y
    # the two columns are parallel when only one distinct nonzero q exists;
    # the relative determinant is O((dq/q)^2) for informative data, so a
    # 1e-12 floor only rejects genuinely degenerate sets
    det = a[0, 0] * a[1, 1] - a[0, 1] * a[1, 0]
    if not det > 1.0e-12 * max(a[0, 0] * a[1, 1], 1.0e-300):
        raise FitError("flow values do not span a quadratic fit "
                       "(need two distinct nonzero q_in)")
    try:
        c = np.linalg.solve(a, b)
    except np.linalg.LinAlgError as exc:
        raise FitError("flow values do not span a quadratic fit "
                       "(need two distinct nonzero q_in)") from exc
    if c[0] < 0.0 or c[1] < 0.0:
        c = np.maximum(c, 0.0)
        for _ in range(500):
            prev = c.copy()
            c[0] = max(0.0, (b[0] - a[0, 1] * c[1]) / a[0, 0])
            c[1] = max(0.0, (b[1] - a[1, 0] * c[0]) / a[1, 1])
            if np.max(np.abs(c - prev)) <= 1.0e-16 * max(1.0, np.max(np.abs(c))):
                break
    c1, c2 = float(c[0]), float(c[1])
    assert c1 >= 0.0 and c2 >= 0.0  # fitted curve monotone on q >= 0
    residuals = tuple(float(yi - (c1 * qi + c2 * qi * qi))
                      for qi, yi in zip(q, y))
    rms = math.sqrt(sum(r * r for r in residuals) / len(residuals))
    report = FitReport(coefficients={"c1": c1, "c2": c2},
                       rms_residual={"p_in": rms},
                       residuals={"p_in": residuals})
    return (c1, c2), report


def fit_closures(data: MeasurementSet, device: Device, *,
                 start: ModelCoefficients = DEFAULT_COEFFS,
                 max_evals: int = 400,
                 diam_tol: float = 1.0e-9) -> tuple[ModelCoefficients, FitReport]:
    """Fit (eta, k0, p_c) to measured output pressures on one device.

    Minimizes the squared p_out residual over the measured flows with the
    engine's derivative-free kernel, searching multiplicative factors on
    the starting values (seed simplex fixed by ``start``, so the fit is
    deterministic).  ``c_recirc`` and ``leak_fraction`` are reported
    unchanged: see the module docstring for why this data cannot move
    them.
    """
    rows = [r for r in data.rows if r.p_out is not None]
    if not rows:
        raise FitError("no rows with p_out; cannot fit the output closure")
    warnings: tuple[str, ...] = ()
    signs = {p > 0.0 for p in (r.p_out for r in rows) if p != 0.0}
    if len(signs) < 2:
        warnings = ("p_out never changes sign; "
                    "the switching point is unconstrained",)

    qs = [r.q_in for r in rows]
    ps = np.array([r.p_out for r in rows])
    scale = float(np.std(ps))
    if scale <= 0.0:
        scale = max(float(np.max(np.abs(ps))), 1.0)

    ref = np.array([start.eta, start.k0, max(start.p_c, 1.0e3)])
    lo = np.array([1.0e-6, 1.0e-16, 0.0])
    hi = np.array([1.0, np.inf, np.inf])

    def objective(u: np.ndarray) -> float:
        params = u * ref
        clipped = np.minimum(np.maximum(params, lo), hi)
        violation = float(np.sum(((params - clipped) / ref) ** 2))
        penalty = 1.0e9 * (1.0 + violation) if violation > 0.0 else 0.0
        trial = replace(start, eta=float(clipped[0]), k0=float(clipped[1]),
                        p_c=float(clipped[2]))
        total = 0.0
        for q, p_ref in zip(qs, ps):
            p = solve_operating_point(q, device, trial,
                                      solve_network=False).p_out
            total += ((p - p_ref) / scale) ** 2
        return total + penalty

    best_u, _, _ = nelder_mead(objective, np.ones(3), max_evals=max_evals,
                               diam_tol=diam_tol)
    params = np.minimum(np.maximum(best_u * ref, lo), hi)
    fitted = replace(start, eta=float(params[0]), k0=float(params[1]),
                     p_c=float(params[2]))

    residuals = tuple(
        float(p_ref - solve_operating_point(q, device, fitted,
                                            solve_network=False).p_out)
        for q, p_ref in zip(qs, ps))
    rms = math.sqrt(sum(r * r for r in residuals) / len(residuals))
    report = FitReport(
        coefficients={"eta": fitted.eta, "c_recirc": fitted.c_recirc,
                      "k0": fitted.k0, "p_c": fitted.p_c,
                      "leak_fraction": fitted.leak_fraction},
        rms_residual={"p_out": rms},
        residuals={"p_out": residuals},
        warnings=warnings)
    return fitted, report
