"""Closed-form squeezing dynamics of the transverse-field one-axis-twisting model.

All energies are in units of 2*kappa*J and times in units of 1/(2*kappa*J).
The quadratic boson theory is

    H = c1 a^dag a + c2 (a^dag a^dag + a a) + c3,

whose vacuum evolution is fixed by the Bogoliubov angle theta_a
(tanh 4 theta_a = 2 c2 / c1) and the mode frequency omega_a.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import CriticalSingularity, DomainError
from .params import ORDERED, OatParams, Phase, classify_phase, normalize_side

__all__ = [
    "OatBosonCoeffs",
    "OatMode",
    "QuadratureTrace",
    "oat_boson_coefficients",
    "oat_bogoliubov_angle",
    "oat_theta_closed_form",
    "oat_mode_frequency",
    "oat_mode",
    "oat_abc",
    "oat_zeta_s",
    "oat_zeta_direct",
    "oat_squeezing_period",
    "oat_series_zeta",
    "oat_timeseries",
    "oat_time_grid",
    "min_phi",
]


@dataclass(frozen=True)
class OatBosonCoeffs:
    c1: float
    c2: float
    c3: float  # extensive, O(J)

    @property
    def ratio(self) -> float:
        return 2.0 * self.c2 / self.c1


@dataclass(frozen=True)
class OatMode:
    theta_a: float
    omega_a: float
    period_T: float
    side: str
    delta: float


@dataclass
class QuadratureTrace:
    times: np.ndarray
    a_vals: np.ndarray
    b_vals: np.ndarray
    c_vals: np.ndarray
    zeta: np.ndarray
    phi_min: np.ndarray
    degenerate: np.ndarray


def _phase_of(p: OatParams, phase: Phase | None) -> Phase:
    actual = classify_phase(p.xi)
    if phase is None:
        return actual
    if phase.label != actual.label:
        raise DomainError(f"phase {phase.label} inconsistent with xi={p.xi}")
    return actual


def _require_noncritical(phase: Phase):
    if phase.delta == 0.0:
        raise CriticalSingularity("delta = 0: theta_a diverges and the mode frequency vanishes")


def oat_boson_coefficients(p: OatParams, phase: Phase | None = None) -> OatBosonCoeffs:
    """c1, c2 (units 2 kappa J) and c3 (units 2 kappa J^2) of the bosonized Hamiltonian."""
    phase = _phase_of(p, phase)
    _require_noncritical(phase)
    xi = p.xi
    cos_t = xi if phase.is_ordered else 1.0
    sin2 = 1.0 - cos_t**2
    c1 = xi * cos_t + sin2 - 0.5 * cos_t**2
    c2 = -0.25 * cos_t**2
    c3 = -p.J * (xi * cos_t + 0.5 * sin2) - 0.25 * cos_t**2
    return OatBosonCoeffs(c1, c2, c3)


def oat_bogoliubov_angle(c: OatBosonCoeffs) -> float:
    r = c.ratio
    if not abs(r) < 1.0:
        raise CriticalSingularity(f"|2 c2/c1| = {abs(r)} >= 1")
    return 0.25 * math.atanh(r)


def oat_theta_closed_form(side: str, delta: float) -> float:
    """theta_a written directly in terms of delta (more accurate near delta = 0)."""
    side = normalize_side(side)
    if not delta > 0:
        raise CriticalSingularity("delta must be positive")
    if side == ORDERED:
        return 0.125 * (math.log(delta) + math.log(2.0 - delta))
    return 0.125 * (math.log(delta) - math.log1p(delta))


def oat_mode_frequency(p: OatParams, phase: Phase | None = None) -> float:
    phase = _phase_of(p, phase)
    d = phase.delta
    if phase.is_ordered:
        return math.sqrt(d * (2.0 - d))
    return math.sqrt(d * (1.0 + d))


def oat_mode(p: OatParams, phase: Phase | None = None) -> OatMode:
    phase = _phase_of(p, phase)
    _require_noncritical(phase)
    w = oat_mode_frequency(p, phase)
    th = oat_theta_closed_form(phase.label, phase.delta)
    return OatMode(theta_a=th, omega_a=w, period_T=math.pi / w, side=phase.label, delta=phase.delta)


def oat_squeezing_period(p: OatParams, phase: Phase | None = None) -> float:
    phase = _phase_of(p, phase)
    _require_noncritical(phase)
    return math.pi / oat_mode_frequency(p, phase)


def oat_abc(p: OatParams, phase: Phase | None, t):
    """(A_s, B_s, C_s) at time(s) t."""
    m = oat_mode(p, phase)
    t = np.asarray(t, dtype=float)
    s = np.sin(m.omega_a * t)
    return (
        -(s**2) * math.sinh(8.0 * m.theta_a),
        np.sin(2.0 * m.omega_a * t) * math.sinh(4.0 * m.theta_a),
        np.cos(m.omega_a * t) ** 2 + s**2 * math.cosh(8.0 * m.theta_a),
    )


def min_phi(a, b):
    """Minimizing quadrature angle in [0, pi); 0 where A = B = 0."""
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    degenerate = (a == 0.0) & (b == 0.0)
    phi = np.mod(0.5 * np.arctan2(b, a) + 0.5 * np.pi, np.pi)
    return np.where(degenerate, 0.0, phi), degenerate


def oat_zeta_s(p: OatParams, phase: Phase | None, t):
    """(zeta_s, phi_min) at time(s) t, using the cancellation-free form.

    With w = |sinh(4 theta_a) sin(omega_a t)| one has C = 1 + 2 w^2 and
    A^2 + B^2 = 4 w^2 (1 + w^2), hence zeta = sqrt(1 + w^2) - w.
    """
    m = oat_mode(p, phase)
    t = np.asarray(t, dtype=float)
    s = np.sin(m.omega_a * t)
    w = np.abs(math.sinh(4.0 * m.theta_a) * s)
    zeta = 1.0 / (np.hypot(1.0, w) + w)
    a = -(s**2) * math.sinh(8.0 * m.theta_a)
    b = np.sin(2.0 * m.omega_a * t) * math.sinh(4.0 * m.theta_a)
    phi, _ = min_phi(a, b)
    return zeta, phi


def oat_zeta_direct(p: OatParams, phase: Phase | None, t):
    """Textbook sqrt(C - sqrt(A^2 + B^2)); loses digits near criticality."""
    a, b, c = oat_abc(p, phase, t)
    return np.sqrt(np.maximum(c - np.hypot(a, b), 0.0))


_SERIES = {
    ORDERED: (2.0, (1.0, 1.0, 5.0 / 6.0, 61.0 / 90.0)),
    "disordered": (1.0, (1.0, 0.5, 5.0 / 24.0, 61.0 / 720.0)),
}


def oat_series_zeta(side: str, delta: float, tau, order: int = 3):
    """Expansion of zeta_s(T/2 + tau) in powers of delta*tau^2, truncated after tau^(2*order)."""
    if order not in (0, 1, 2, 3):
        raise DomainError("order must be 0, 1, 2 or 3")
    pref, coeffs = _SERIES[normalize_side(side)]
    x = delta * np.asarray(tau, dtype=float) ** 2
    total = np.zeros_like(x)
    for k in range(order, -1, -1):
        total = total * x + coeffs[k]
    return math.sqrt(pref * delta) * total


def oat_time_grid(p: OatParams, periods: float = 1.0, points_per_period: int = 2000):
    if points_per_period < 100:
        raise DomainError("points_per_period must be >= 100")
    T = oat_squeezing_period(p)
    n = int(round(periods * points_per_period))
    return np.linspace(0.0, periods * T, n + 1)


def oat_timeseries(p: OatParams, phase: Phase | None, t_grid) -> QuadratureTrace:
    t = np.asarray(t_grid, dtype=float)
    if t.ndim != 1 or np.any(np.diff(t) < 0):
        raise DomainError("t_grid must be a monotone 1-d array")
    a, b, c = oat_abc(p, phase, t)
    zeta, phi = oat_zeta_s(p, phase, t)
    _, degenerate = min_phi(a, b)
    return QuadratureTrace(t, a, b, c, zeta, phi, degenerate)
