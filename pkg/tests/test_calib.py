"""Measurement handling and the two calibration fits."""

import dataclasses
import math

import numpy as np
import pytest

from fdrsim import (
    DEFAULT_COEFFS,
    FitError,
    FitReport,
    MeasurementRow,
    MeasurementSet,
    builtin_calibration_points,
    catalog_device,
    fit_closures,
    fit_input_pressure,
    load_measurements,
    solve_operating_point,
)
from fdrsim._units import M3S_PER_LPM, PA_PER_KPA

_B = catalog_device("B")


def _rows(pairs_lpm_kpa):
    return tuple(MeasurementRow(q_in=q * M3S_PER_LPM, p_in=p * PA_PER_KPA)
                 for q, p in pairs_lpm_kpa)


def test_builtin_points_shape():
    data = builtin_calibration_points()
    assert data.label == "builtin"
    assert len(data.rows) == 6
    first = data.rows[0]
    assert first.q_in == pytest.approx(5.0 * M3S_PER_LPM, rel=1e-12)
    assert first.p_in == pytest.approx(5.4e3, rel=1e-12)
    assert first.p_out is None and first.a_fg is None
    qs = [r.q_in for r in data.rows]
    assert all(b > a for a, b in zip(qs, qs[1:]))


def test_measurement_row_validation():
    with pytest.raises(ValueError):
        MeasurementRow(q_in=-1.0e-4)
    MeasurementRow(q_in=0.0)  # rest point is legal


def test_measurement_set_collapses_exact_duplicates():
    row = MeasurementRow(q_in=1.0e-4, p_in=5.0e3)
    data = MeasurementSet(rows=(row, row, MeasurementRow(q_in=2.0e-4)))
    assert len(data.rows) == 2


def test_measurement_set_rejects_conflicting_duplicates():
    with pytest.raises(ValueError):
        MeasurementSet(rows=(MeasurementRow(q_in=1.0e-4, p_in=5.0e3),
                             MeasurementRow(q_in=1.0e-4, p_in=6.0e3)))


def test_load_measurements_roundtrip(tmp_path):
    path = tmp_path / "meas.csv"
    path.write_text(
        "q_in_lpm,p_in_kpa,p_out_kpa,a_fg_mm2\n"
        "5,5.4,,\n"
        "10,13.5,0.3,1.5\n"
        ",,,\n"            # blank flow: skipped
        "30,47.1,-26.6,\n",
        encoding="utf-8")
    data = load_measurements(path)
    assert data.label == "meas.csv"
    assert len(data.rows) == 3
    assert data.rows[0].q_in == pytest.approx(5.0 * M3S_PER_LPM)
    assert data.rows[0].p_out is None
    assert data.rows[1].p_out == pytest.approx(0.3e3)
    assert data.rows[1].a_fg == pytest.approx(1.5e-6)
    assert data.rows[2].p_out == pytest.approx(-26.6e3)


def test_load_measurements_requires_flow_column(tmp_path):
    path = tmp_path / "bad.csv"
    path.write_text("flow,p_in_kpa\n1,2\n", encoding="utf-8")
    with pytest.raises(FitError):
        load_measurements(path)


def test_fit_recovers_exact_linear_law():
    # p_in = 2 q in display units means c1 = 2 kPa/(L/min), c2 = 0
    data = MeasurementSet(rows=_rows([(q, 2.0 * q) for q in (5, 10, 20, 30)]))
    (c1, c2), report = fit_input_pressure(data)
    c1_display = c1 * M3S_PER_LPM / PA_PER_KPA
    assert c1_display == pytest.approx(2.0, rel=1e-9)
    assert abs(c2) * (30 * M3S_PER_LPM) ** 2 < 1.0e-6  # no quadratic part
    assert report.rms_residual["p_in"] < 1.0e-6


def test_fit_recovers_random_nonnegative_coefficients():
    rng = np.random.default_rng(88)
    qs = np.linspace(2.0, 30.0, 8) * M3S_PER_LPM
    for _ in range(20):
        c1 = rng.uniform(1.0e6, 1.0e8)
        c2 = rng.uniform(0.0, 5.0e10)
        rows = tuple(MeasurementRow(q_in=float(q),
                                    p_in=float(c1 * q + c2 * q * q))
                     for q in qs)
        (f1, f2), _ = fit_input_pressure(MeasurementSet(rows=rows))
        assert f1 == pytest.approx(c1, rel=1e-9)
        assert f2 == pytest.approx(c2, rel=1e-9, abs=1e-9 * c1 / qs[-1])


def test_fit_clamps_negative_linear_term():
    # pure quadratic data shifted down: the unconstrained linear term
    # would go negative, the constrained one lands on the boundary
    qs = np.linspace(5.0, 30.0, 6) * M3S_PER_LPM
    rows = tuple(MeasurementRow(q_in=float(q), p_in=1.0e10 * q * q - 100.0)
                 for q in qs)
    (c1, c2), report = fit_input_pressure(MeasurementSet(rows=rows))
    assert c1 == 0.0
    expected_c2 = float(np.sum(qs ** 2 * (1.0e10 * qs ** 2 - 100.0))
                        / np.sum(qs ** 4))
    assert c2 == pytest.approx(expected_c2, rel=1e-6)


def test_fit_needs_two_informative_rows():
    with pytest.raises(FitError):
        fit_input_pressure(MeasurementSet(rows=_rows([(10, 13.5)])))
    # two rows but only one nonzero flow: columns are parallel
    with pytest.raises(FitError):
        fit_input_pressure(MeasurementSet(rows=_rows([(0, 0), (10, 13.5)])))


def test_fit_ignores_rows_without_supply_pressure():
    rows = _rows([(5, 5.4), (10, 13.5), (20, 32.2)])
    rows += (MeasurementRow(q_in=15.0 * M3S_PER_LPM, p_out=-1.0e3),)
    (c1, c2), report = fit_input_pressure(MeasurementSet(rows=rows))
    assert len(report.residuals["p_in"]) == 3


def test_fit_builtin_matches_default_coefficients():
    (c1, c2), report = fit_input_pressure(builtin_calibration_points())
    assert c1 == pytest.approx(DEFAULT_COEFFS.c1, rel=1e-9)
    assert c2 == pytest.approx(DEFAULT_COEFFS.c2, rel=1e-9)
    rms = report.rms_residual["p_in"]
    assert rms == pytest.approx(1436.0512886284491, rel=1e-9)
    assert rms <= 2.5e3


def test_fit_report_self_consistency():
    with pytest.raises(ValueError):
        FitReport(coefficients={"c1": 1.0},
                  rms_residual={"p_in": 5.0},
                  residuals={"p_in": (1.0, -1.0)})
    rms = math.sqrt(2.5e5)
    FitReport(coefficients={"c1": 1.0},
              rms_residual={"p_in": rms},
              residuals={"p_in": (500.0, -500.0)})


def _device_rows(device, qs_lpm, coeffs=DEFAULT_COEFFS):
    rows = []
    for q in qs_lpm:
        st = solve_operating_point(q * M3S_PER_LPM, device, coeffs)
        rows.append(MeasurementRow(q_in=st.q_in, p_in=st.p_in,
                                   p_out=st.p_out, a_fg=st.a_fg))
    return MeasurementSet(rows=tuple(rows), label="synthetic")


def test_fit_closures_zero_residual_on_model_data():
    data = _device_rows(_B, range(2, 31, 4))
    fitted, report = fit_closures(data, _B, max_evals=200)
    assert report.rms_residual["p_out"] == pytest.approx(0.0, abs=1e-9)
    assert fitted.eta == pytest.approx(DEFAULT_COEFFS.eta, rel=1e-6)
    assert fitted.k0 == pytest.approx(DEFAULT_COEFFS.k0, rel=1e-6)
    assert fitted.c_recirc == DEFAULT_COEFFS.c_recirc
    assert fitted.leak_fraction == DEFAULT_COEFFS.leak_fraction
    assert report.warnings == ()


def test_fit_closures_requires_output_rows():
    data = builtin_calibration_points()  # supply-side only
    with pytest.raises(FitError):
        fit_closures(data, _B)


def test_fit_closures_warns_on_single_signed_data():
    data = _device_rows(_B, (2, 4, 6, 8, 10))  # blowing branch only
    _, report = fit_closures(data, _B, max_evals=40)
    assert any("sign" in w for w in report.warnings)


def test_fit_closures_coefficient_keys():
    data = _device_rows(_B, (5, 15, 25))
    _, report = fit_closures(data, _B, max_evals=40)
    assert set(report.coefficients) == {
        "eta", "c_recirc", "k0", "p_c", "leak_fraction"}
