"""Coupled operating points, ramp sweeps, design comparison, optimization.

One operating point chains the calibrated pieces together: the supply law
gives the inlet pressure at a commanded flow, the junction balance gives
the chamber pressure, the gate compliance turns that into an opening
area, the internal network is re-solved with the new opening, and the
jet closure prices the output port.  The chain is iterated to a fixed
point on the opening area (it settles immediately because the closure
has no feedback path, but the loop is kept as a guard for future
couplings and as the convergence contract).

Ramps are quasi-static: each grid point is an independent steady state,
so sweeping up and sweeping down give pointwise identical results and
grid points may be solved concurrently.  A sweep reports the switching
point, where the output pressure crosses zero (blowing to suction),
refined by bisection between the bracketing grid points.

Geometry exploration uses a small deterministic Nelder-Mead kernel
(reflection 1, expansion 2, contraction 0.5, shrink 0.5) over a box on
(w, t, h, a_ne), with out-of-box candidates evaluated at their clipped
projection plus a dominating penalty.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, Mapping, Sequence

import numpy as np

from ._units import M3S_PER_LPM
from .core import Device, catalog_device, with_gate
from .ejector import DEFAULT_COEFFS, ModelCoefficients, output_pressure
from .flow import assemble_network, bifurcation_pressure, input_pressure, solve_steady
from .gate import GateComplianceModel, opening_area

__all__ = [
    "MODE_BLOWING",
    "MODE_SUCTION",
    "MODE_NEUTRAL",
    "MODE_DEADBAND",
    "DEFAULT_Q_END",
    "DEFAULT_Q_STEP",
    "OperatingState",
    "SweepResult",
    "FixedPointError",
    "SweepError",
    "solve_operating_point",
    "sweep",
    "compare_designs",
    "design_orderings",
    "nelder_mead",
    "OptimizationResult",
    "optimize_geometry",
    "curve_match_objective",
    "switching_objective",
    "suction_objective",
    "blowing_objective",
]

MODE_BLOWING = "blowing"
MODE_SUCTION = "suction"
MODE_NEUTRAL = "neutral"
MODE_DEADBAND = 1.0     # [Pa] band around zero treated as neither mode

DEFAULT_Q_END = 30.0 * M3S_PER_LPM   # canonical ramp top [m^3/s]
DEFAULT_Q_STEP = 0.1 * M3S_PER_LPM   # canonical ramp step [m^3/s]

_FIXED_POINT_TOL = 1.0e-12   # [m^2] opening-area agreement between passes
_FIXED_POINT_MAX_ITER = 100


class FixedPointError(RuntimeError):
    """Operating-point iteration failed; carries the last two opening areas."""

    def __init__(self, message: str, iterates: tuple[float, float],
                 q_in: float):
        super().__init__(message)
        self.iterates = iterates
        self.q_in = q_in


class SweepError(RuntimeError):
    """A grid point inside a sweep failed; carries the offending q_in."""

    def __init__(self, message: str, q_in: float):
        super().__init__(message)
        self.q_in = q_in


def _mode_for(p_out: float) -> str:
    if p_out > MODE_DEADBAND:
        return MODE_BLOWING
    if p_out < -MODE_DEADBAND:
        return MODE_SUCTION
    return MODE_NEUTRAL


@dataclass(frozen=True)
class OperatingState:
    q_in: float       # commanded supply flow [m^3/s]
    p_in: float       # supply gauge pressure [Pa]
    p_chamber: float  # chamber (junction) gauge pressure [Pa]
    a_fg: float       # gate opening area [m^2]
    p_out: float      # output-port gauge pressure [Pa], positive blows
    mode: str         # blowing | suction | neutral

    def __post_init__(self) -> None:
        if self.mode != _mode_for(self.p_out):
            raise ValueError("mode inconsistent with p_out and the deadband")


@dataclass(frozen=True)
class SweepResult:
    states: tuple[OperatingState, ...]   # ordered by q_in, strictly increasing
    switching_q: float | None            # [m^3/s], present iff p_out changes sign
    switching_p_in: float | None         # [Pa], supply pressure at switching_q
    max_blow: float                      # largest p_out on the grid [Pa]
    max_suck: float                      # largest -p_out on the grid [Pa]

    def __post_init__(self) -> None:
        for a, b in zip(self.states, self.states[1:]):
            if not a.q_in < b.q_in:
                raise ValueError("states must be strictly ordered by q_in")
        if (self.switching_q is None) != (self.switching_p_in is None):
            raise ValueError("switching fields must be present together")


def _compliance_for(device: Device, coeffs: ModelCoefficients) -> GateComplianceModel:
    return GateComplianceModel.for_gate(device.geometry.gate, coeffs.k0,
                                        coeffs.p_c)


def solve_operating_point(q_in: float, device: Device,
                          coeffs: ModelCoefficients = DEFAULT_COEFFS, *,
                          solve_network: bool = True) -> OperatingState:
    """Steady state of the whole device at one commanded flow.

    Iterates supply pressure -> chamber pressure -> gate opening ->
    internal network until successive opening areas agree within 1e-12
    m^2 (at most 100 passes), then prices the output port.  With
    ``solve_network=False`` the internal network re-solve is skipped;
    the returned state is identical because the network has no feedback
    into the closure, so optimization loops use this cheaper path.
    """
    if q_in < 0.0:
        raise ValueError("q_in must be nonnegative")
    g = device.geometry
    model = _compliance_for(device, coeffs)

    p_in = input_pressure(q_in, coeffs)
    p_chamber = bifurcation_pressure(q_in, p_in, device.fluid, g)
    a_fg_prev = 0.0
    state = None
    for _ in range(_FIXED_POINT_MAX_ITER):
        state = opening_area(max(0.0, p_chamber), model, g.gate,
                             device.material)
        if solve_network:
            solve_steady(assemble_network(g, state.a_fg, coeffs, device.fluid),
                         q_in)
        if abs(state.a_fg - a_fg_prev) < _FIXED_POINT_TOL:
            break
        a_fg_prev = state.a_fg
    else:
        raise FixedPointError(
            f"operating point did not settle at q_in={q_in:.9g} m^3/s",
            iterates=(a_fg_prev, state.a_fg), q_in=q_in)

    p_out = output_pressure(q_in, state, g, device.fluid, coeffs)
    return OperatingState(q_in=q_in, p_in=p_in, p_chamber=p_chamber,
                          a_fg=state.a_fg, p_out=p_out, mode=_mode_for(p_out))


def _grid(q_start: float, q_end: float, step: float) -> list[float]:
    if step <= 0.0:
        raise ValueError("step must be positive")
    if not q_start < q_end:
        raise ValueError("q_start must be less than q_end")
    n = int(round((q_end - q_start) / step))
    if n < 1:
        raise ValueError("step larger than the sweep range")
    return [q_start + i * step for i in range(n + 1)]


def _refine_switching(device: Device, coeffs: ModelCoefficients,
                      q_lo: float, q_hi: float, p_lo: float) -> float:
    """Bisect a sign-change bracket until |p_out| < the mode deadband."""
    lo, hi = q_lo, q_hi
    sign_lo = math.copysign(1.0, p_lo)
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        p_mid = solve_operating_point(mid, device, coeffs,
                                      solve_network=False).p_out
        if abs(p_mid) < MODE_DEADBAND or hi - lo < 1.0e-18:
            return mid
        if math.copysign(1.0, p_mid) == sign_lo:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def sweep(device: Device, coeffs: ModelCoefficients = DEFAULT_COEFFS,
          q_start: float = 0.0, q_end: float = DEFAULT_Q_END,
          step: float = DEFAULT_Q_STEP, *, workers: int = 1,
          solve_network: bool = True) -> SweepResult:
    """Quasi-static ramp over the inclusive grid q_start, +step, .., q_end.

    Each point is an independent steady state; ``workers`` > 1 fans the
    grid out to that many threads with results assembled back in grid
    order, so the outcome is identical for any worker count.
    """
    if workers < 1:
        raise ValueError("workers must be at least 1")
    qs = _grid(q_start, q_end, step)

    def point(q: float) -> OperatingState:
        try:
            return solve_operating_point(q, device, coeffs,
                                         solve_network=solve_network)
        except (ValueError, RuntimeError) as exc:
            raise SweepError(
                f"sweep failed at q_in={q:.9g} m^3/s: {exc}", q_in=q) from exc

    if workers == 1:
        states = tuple(point(q) for q in qs)
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            states = tuple(pool.map(point, qs))

    switching_q: float | None = None
    switching_p_in: float | None = None
    last_sign = 0.0
    last_q = qs[0]
    last_p = states[0].p_out
    for st in states:
        sign = 0.0 if st.p_out == 0.0 else math.copysign(1.0, st.p_out)
        if sign != 0.0 and last_sign != 0.0 and sign != last_sign:
            switching_q = _refine_switching(device, coeffs, last_q, st.q_in,
                                            last_p)
            switching_p_in = input_pressure(switching_q, coeffs)
            break
        if sign != 0.0:
            last_sign = sign
            last_q = st.q_in
            last_p = st.p_out
    p_outs = [st.p_out for st in states]
    return SweepResult(states=states, switching_q=switching_q,
                       switching_p_in=switching_p_in,
                       max_blow=max(p_outs), max_suck=-min(p_outs))


def compare_designs(type_ids: Sequence[str],
                    coeffs: ModelCoefficients = DEFAULT_COEFFS, *,
                    q_start: float = 0.0, q_end: float = DEFAULT_Q_END,
                    step: float = DEFAULT_Q_STEP,
                    workers: int = 1) -> dict[str, SweepResult]:
    """One sweep per catalog type under a single shared coefficient set."""
    if not type_ids:
        raise ValueError("type_ids must be non-empty")
    table: dict[str, SweepResult] = {}
    for tid in type_ids:
        device = catalog_device(tid)
        table[device.type_id] = sweep(device, coeffs, q_start, q_end, step,
                                      workers=workers)
    return table


def design_orderings(table: Mapping[str, SweepResult]) -> dict[str, tuple[str, ...]]:
    """Type ids ranked high-to-low by switching pressure, blow, and suck.

    Types that never switch rank last in the switching order; ties keep
    the table's own order.
    """
    ids = list(table)

    def ranked(key: Callable[[SweepResult], float]) -> tuple[str, ...]:
        return tuple(sorted(ids, key=lambda t: -key(table[t])))

    return {
        "switching_p_in": ranked(
            lambda r: r.switching_p_in if r.switching_p_in is not None
            else -math.inf),
        "max_blow": ranked(lambda r: r.max_blow),
        "max_suck": ranked(lambda r: r.max_suck),
    }


# --- derivative-free kernel -------------------------------------------------

def nelder_mead(f: Callable[[np.ndarray], float], x0: Sequence[float], *,
                step: float = 0.1, max_evals: int = 400,
                diam_tol: float = 1.0e-6) -> tuple[np.ndarray, float, int]:
    """Minimize ``f`` from ``x0`` with a fixed-coefficient Nelder-Mead.

    Reflection 1, expansion 2, contraction 0.5, shrink 0.5.  The initial
    simplex offsets each coordinate by ``step`` (flipped downward when
    that would leave the unit box).  Stops when the simplex diameter
    falls below ``diam_tol`` or the evaluation budget is spent; the
    budget is strict and never overrun.  Returns (best x, best f, evals).
    Deterministic for identical inputs; evaluation failures count as
    +infinity.
    """
    x0 = np.asarray(x0, dtype=float)
    n = x0.size
    if n == 0:
        raise ValueError("x0 must have at least one coordinate")
    if max_evals < n + 1:
        raise ValueError("max_evals too small for the initial simplex")

    evals = 0

    def guarded(x: np.ndarray) -> float:
        nonlocal evals
        evals += 1
        try:
            y = float(f(x))
        except Exception:
            return math.inf
        return y if not math.isnan(y) else math.inf

    pts = [x0.copy()]
    for i in range(n):
        v = x0.copy()
        v[i] = v[i] + step if v[i] + step <= 1.0 else v[i] - step
        pts.append(v)
    pts = np.array(pts)
    vals = np.array([guarded(p) for p in pts])

    while evals < max_evals:
        order = np.argsort(vals, kind="stable")
        pts, vals = pts[order], vals[order]
        diam = max(float(np.max(np.abs(pts[i] - pts[0])))
                   for i in range(1, n + 1))
        if diam < diam_tol:
            break
        centroid = pts[:-1].mean(axis=0)
        reflected = centroid + (centroid - pts[-1])
        f_r = guarded(reflected)
        if f_r < vals[0] and evals < max_evals:
            expanded = centroid + 2.0 * (centroid - pts[-1])
            f_e = guarded(expanded)
            if f_e < f_r:
                pts[-1], vals[-1] = expanded, f_e
            else:
                pts[-1], vals[-1] = reflected, f_r
        elif f_r < vals[-2]:
            pts[-1], vals[-1] = reflected, f_r
        else:
            if evals >= max_evals:
                break
            contracted = centroid + 0.5 * (pts[-1] - centroid)
            f_c = guarded(contracted)
            if f_c < vals[-1]:
                pts[-1], vals[-1] = contracted, f_c
            else:
                for i in range(1, n + 1):
                    if evals >= max_evals:
                        break
                    pts[i] = pts[0] + 0.5 * (pts[i] - pts[0])
                    vals[i] = guarded(pts[i])

    order = np.argsort(vals, kind="stable")
    return pts[order][0].copy(), float(vals[order][0]), evals


# --- geometry optimization ---------------------------------------------------

_DESIGN_KEYS = ("w", "t", "h", "a_ne")


@dataclass(frozen=True)
class OptimizationResult:
    device: Device              # best candidate found
    params: dict[str, float]    # its (w, t, h, a_ne) in SI units
    value: float                # objective at the best candidate
    evaluations: int
    converged: bool             # simplex collapsed before the budget ran out


def _candidate(template: Device, params: Mapping[str, float]) -> Device:
    return with_gate(template, w=params["w"], t=params["t"], h=params["h"],
                     a_ne=params["a_ne"])


def optimize_geometry(objective: Callable[[Device], float],
                      bounds: Mapping[str, tuple[float, float]],
                      device: Device, *,
                      start: Mapping[str, float] | None = None,
                      max_evals: int = 400,
                      diam_tol: float = 1.0e-6) -> OptimizationResult:
    """Search gate/nozzle dimensions minimizing ``objective(candidate)``.

    ``bounds`` maps any of ``w, t, h, a_ne`` (SI) to a (lo, hi) box;
    omitted keys stay frozen at the template device's value, and a key
    with lo == hi is likewise frozen.  The search runs in box-normalized
    coordinates; candidates outside the box are evaluated at their
    clipped projection plus a penalty that dominates any in-box value.
    ``start`` optionally seeds the search (defaults to the box center).
    A failing objective evaluation counts as +infinity, not an error.
    """
    unknown = set(bounds) - set(_DESIGN_KEYS)
    if unknown:
        raise ValueError(f"unknown bound keys: {sorted(unknown)}")
    base = {
        "w": device.geometry.gate.w,
        "t": device.geometry.gate.t,
        "h": device.geometry.gate.h,
        "a_ne": device.geometry.a_ne,
    }
    lows: dict[str, float] = {}
    widths: dict[str, float] = {}
    for key in _DESIGN_KEYS:
        lo, hi = bounds.get(key, (base[key], base[key]))
        if not lo <= hi:
            raise ValueError(f"bounds for {key} must satisfy lo <= hi")
        if lo <= 0.0:
            raise ValueError(f"bounds for {key} must be positive")
        lows[key] = lo
        widths[key] = hi - lo
    free = [k for k in _DESIGN_KEYS if widths[k] > 0.0]

    def params_at(x: np.ndarray) -> dict[str, float]:
        clipped = np.clip(x, 0.0, 1.0)
        p = dict(lows)
        for i, k in enumerate(free):
            p[k] = lows[k] + clipped[i] * widths[k]
        return p

    def value_at(x: np.ndarray) -> float:
        over = np.maximum(0.0, x - 1.0)
        under = np.maximum(0.0, -x)
        penalty = 0.0
        if over.any() or under.any():
            penalty = 1.0e9 * (1.0 + float(np.sum(over ** 2 + under ** 2)))
        return objective(_candidate(device, params_at(x))) + penalty

    if not free:
        # zero-volume box: the single admissible point is the answer
        params = dict(lows)
        cand = _candidate(device, params)
        try:
            value = float(objective(cand))
        except Exception:
            value = math.inf
        return OptimizationResult(device=cand, params=params, value=value,
                                  evaluations=1, converged=True)

    if start is None:
        x0 = np.full(len(free), 0.5)
    else:
        x0 = np.array([
            (float(start[k]) - lows[k]) / widths[k] for k in free])
        if np.any(x0 < 0.0) or np.any(x0 > 1.0):
            raise ValueError("start must lie inside the bounds")

    best_x, best_f, evals = nelder_mead(value_at, x0, max_evals=max_evals,
                                        diam_tol=diam_tol)
    params = params_at(best_x)
    return OptimizationResult(device=_candidate(device, params),
                              params=params, value=best_f,
                              evaluations=evals,
                              converged=evals < max_evals)


def _target_curve(target: SweepResult) -> tuple[list[float], np.ndarray, float]:
    qs = [st.q_in for st in target.states]
    ps = np.array([st.p_out for st in target.states])
    scale = float(np.std(ps))
    return qs, ps, scale if scale > 0.0 else 1.0


def curve_match_objective(coeffs: ModelCoefficients,
                          target: SweepResult) -> Callable[[Device], float]:
    """Least-squares distance between a candidate's output-pressure curve
    and a reference curve, evaluated on the reference's own grid."""
    qs, ps, scale = _target_curve(target)

    def objective(candidate: Device) -> float:
        total = 0.0
        for q, p_ref in zip(qs, ps):
            p = solve_operating_point(q, candidate, coeffs,
                                      solve_network=False).p_out
            total += ((p - p_ref) / scale) ** 2
        return total

    return objective


_NO_SWITCHING_VALUE = 1.0e6


def switching_objective(coeffs: ModelCoefficients, *,
                        target_p_in: float | None = None,
                        q_start: float = 0.0, q_end: float = DEFAULT_Q_END,
                        step: float = 1.0 * M3S_PER_LPM) -> Callable[[Device], float]:
    """Objective on the switching supply pressure: its squared mismatch to
    ``target_p_in`` [Pa], or the pressure itself (to be minimized) when no
    target is given.  Candidates that never switch score a large flat
    value."""

    def objective(candidate: Device) -> float:
        result = sweep(candidate, coeffs, q_start, q_end, step,
                       solve_network=False)
        if result.switching_p_in is None:
            return _NO_SWITCHING_VALUE
        if target_p_in is None:
            return result.switching_p_in
        return ((result.switching_p_in - target_p_in)
                / max(abs(target_p_in), 1.0)) ** 2

    return objective


def suction_objective(coeffs: ModelCoefficients,
                      q_star: float) -> Callable[[Device], float]:
    """Maximize suction at ``q_star``: minimizes p_out (most negative wins)."""

    def objective(candidate: Device) -> float:
        return solve_operating_point(q_star, candidate, coeffs,
                                     solve_network=False).p_out

    return objective


def blowing_objective(coeffs: ModelCoefficients,
                      q_star: float) -> Callable[[Device], float]:
    """Maximize blowing at ``q_star``: minimizes the negated p_out."""

    def objective(candidate: Device) -> float:
        return -solve_operating_point(q_star, candidate, coeffs,
                                      solve_network=False).p_out

    return objective
