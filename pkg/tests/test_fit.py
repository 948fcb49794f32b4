import math

import numpy as np
import pytest

from critsqueeze.dicke import dicke_bogoliubov, dicke_boson_coefficients, dicke_time_grid, dicke_zeta
from critsqueeze.errors import DomainError
from critsqueeze.fit import (
    InsufficientSpan,
    SweepRecord,
    envelope_min,
    extract_period,
    extract_zeta_min,
    fit_affine_square,
    fit_powerlaw,
    local_minima,
    records_from_columns,
    refine_zeta_min,
)
from critsqueeze.oat import oat_squeezing_period, oat_time_grid, oat_timeseries
from critsqueeze.params import DickeParams, OatParams, delta_to_psi, xi_from_side

D = np.logspace(-4, -2, 9)


def test_powerlaw_exact_recovery():
    fit = fit_powerlaw((D, 3.0 * D**-0.5), side="ordered")
    assert fit.exponent == pytest.approx(-0.5, abs=1e-12)
    assert fit.amplitude == pytest.approx(3.0, rel=1e-12)
    assert fit.max_residual < 1e-12 and fit.r2 == pytest.approx(1.0)
    assert not fit.span_warning


def test_affine_exact_recovery():
    d = np.linspace(1e-3, 2e-2, 8)
    fit = fit_affine_square((d, np.sqrt(0.01 + 2 * d)), side="normal")
    assert fit.u == pytest.approx(0.01, abs=1e-12)
    assert fit.v == pytest.approx(2.0, abs=1e-10)
    assert fit.max_residual < 1e-12 and not fit.u_clamped


def test_affine_clamps_negative_intercept():
    d = np.linspace(1e-3, 2e-2, 8)
    fit = fit_affine_square((d, np.sqrt(2 * d - 1e-4)), side="normal")
    assert fit.u == 0.0 and fit.u_clamped and fit.notes


def test_affine_rejects_wide_window():
    with pytest.raises(DomainError):
        fit_affine_square((np.linspace(0.01, 0.1, 6), np.ones(6)), side="normal")


def test_span_warning_for_narrow_window():
    d = np.linspace(1e-3, 5e-3, 6)
    assert fit_powerlaw((d, d**0.5), side="ordered").span_warning


def test_too_few_records():
    with pytest.raises(InsufficientSpan):
        fit_powerlaw((D[:4], D[:4]), side="ordered")


def test_mixed_phases_rejected():
    recs = records_from_columns(D[:5], D[:5], "zeta_min", "ordered")
    recs += records_from_columns(D[5:], D[5:], "zeta_min", "disordered")
    with pytest.raises(DomainError):
        fit_powerlaw(recs)
    assert fit_powerlaw(recs, side="ordered").n_points == 5


@pytest.mark.parametrize("delta,value", [(0.0, 1.0), (0.1, math.nan)])
def test_record_validation(delta, value):
    with pytest.raises(DomainError):
        SweepRecord(1.0, delta, "zeta_min", value, "ordered")


def test_oat_period_matches_mode_frequency():
    p = OatParams.from_xi(0.98)
    tr = oat_timeseries(p, None, oat_time_grid(p, 3, 2000))
    T = extract_period(tr)
    assert T == pytest.approx(15.78710, abs=1e-4)
    assert T == pytest.approx(oat_squeezing_period(p), rel=1e-4)


@pytest.mark.parametrize("side,delta,expected", [
    ("ordered", 0.2, 0.6),
    ("disordered", 0.02, 0.14002800840280097),  # 1/sqrt(51)
])
def test_oat_zeta_min(side, delta, expected):
    p = OatParams.from_xi(xi_from_side(side, delta))
    m = extract_zeta_min(oat_timeseries(p, None, oat_time_grid(p, 2, 2000)))
    assert m.value == pytest.approx(expected, rel=1e-9)
    assert not m.at_boundary


def test_monotone_trace_flags_boundary():
    t = np.linspace(0, 1, 50)
    m = extract_zeta_min((t, 1 - 0.5 * t))
    assert m.at_boundary and m.value == 0.5
    with pytest.raises(InsufficientSpan):
        extract_period((t, 1 - 0.5 * t))


def test_dicke_period_uses_slow_polariton():
    p = DickeParams.from_xi_psi(xi_from_side("normal", 0.005), delta_to_psi(-0.9))
    b = dicke_bogoliubov(dicke_boson_coefficients(p))
    T = math.pi / b.Omega_b
    ts = dicke_time_grid(p, window=4 * T)
    z = dicke_zeta(p, None, ts)[0]
    assert extract_period((ts, z), min_separation=0.8 * T) == pytest.approx(T, rel=0.02)


def test_refine_beats_grid_and_envelope_smooths():
    def fn(t):
        return 1 + np.cos(t) - 0.01 * np.cos(40 * t)
    t = np.linspace(0, 2 * math.pi, 400)
    m = refine_zeta_min(fn, t)
    assert m.value <= fn(t).min() and m.value == pytest.approx(-0.01, abs=1e-6)
    assert envelope_min(t, fn(t), 2 * math.pi / 40) == pytest.approx(0.0, abs=2e-3)
    assert len(local_minima(t, fn(t))) > 5
