"""Critical-law extraction: power laws, the affine square law, and minima of traces."""
from __future__ import annotations

import math
from dataclasses import asdict, dataclass, field
from typing import Callable, Iterable, Sequence

import numpy as np
from scipy.optimize import minimize_scalar
from scipy.signal import find_peaks

from .errors import DomainError


class InsufficientSpan(DomainError):
    """Trace or record set too short for the requested extraction."""


@dataclass(frozen=True)
class SweepRecord:
    xi: float
    delta: float
    observable: str
    value: float
    phase: str
    psi: float | None = None

    def __post_init__(self):
        if not self.delta > 0:
            raise DomainError("delta must be positive")
        if not math.isfinite(self.value):
            raise DomainError("value must be finite")


@dataclass
class ScalingFit:
    model: str  # "powerlaw" or "affine_square"
    side: str
    window: tuple
    n_points: int
    r2: float
    residual_norm: float
    max_residual: float
    residual_fraction: float  # max |residual| / range of the fitted quantity
    exponent: float | None = None
    amplitude: float | None = None
    u: float | None = None
    v: float | None = None
    u_clamped: bool = False
    span_warning: bool = False
    notes: list = field(default_factory=list)

    def to_dict(self):
        return asdict(self)


def _single_side(records: Sequence[SweepRecord]) -> str:
    sides = {r.phase for r in records}
    if len(sides) != 1:
        raise DomainError(f"records mix phases {sorted(sides)}; fit one side at a time")
    return sides.pop()


def _as_records(records, side: str | None, observable: str) -> list:
    if isinstance(records, tuple) and len(records) == 2 and not isinstance(records[0], SweepRecord):
        d, y = (np.asarray(x, dtype=float) for x in records)
        return [SweepRecord(1.0 + di, di, observable, yi, side or "unknown") for di, yi in zip(d, y)]
    if side is not None:
        records = [r for r in records if r.phase == side]
    return sorted(records, key=lambda r: r.delta)


def _linear_lsq(x, y):
    X = np.column_stack([np.ones_like(x), x])
    (c0, c1), *_ = np.linalg.lstsq(X, y, rcond=None)
    res = y - (c0 + c1 * x)
    ss_tot = float(np.sum((y - y.mean()) ** 2))
    r2 = 1.0 - float(np.sum(res**2)) / ss_tot if ss_tot > 0 else 1.0
    spread = float(np.ptp(y))
    frac = float(np.max(np.abs(res)) / spread) if spread > 0 else 0.0
    return float(c0), float(c1), res, r2, frac


def fit_powerlaw(records, side: str | None = None, observable: str = "value") -> ScalingFit:
    """OLS of log(value) on log(delta): value = amplitude * delta^exponent.

    ``records`` is a list of SweepRecord or a (delta, value) pair of arrays.
    """
    recs = _as_records(records, side, observable)
    if len(recs) < 5:
        raise InsufficientSpan("power-law fit needs at least 5 records")
    side = _single_side(recs)
    d = np.array([r.delta for r in recs])
    y = np.array([r.value for r in recs])
    if np.any(y <= 0):
        raise DomainError("power-law fit needs positive values")
    c0, c1, res, r2, frac = _linear_lsq(np.log(d), np.log(y))
    span = math.log10(d.max() / d.min())
    fit = ScalingFit("powerlaw", side, (float(d.min()), float(d.max())), len(recs), r2,
                     float(np.linalg.norm(res)), float(np.max(np.abs(res))), frac,
                     exponent=c1, amplitude=math.exp(c0), span_warning=span < 2.0)
    if fit.span_warning:
        fit.notes.append(f"delta spans only {span:.2f} decades")
    return fit


def fit_affine_square(records, side: str | None = None, observable: str = "zeta_min") -> ScalingFit:
    """Least squares of zeta_min^2 = u + v * delta; u is clamped at 0 when negative."""
    recs = _as_records(records, side, observable)
    if len(recs) < 5:
        raise InsufficientSpan("affine fit needs at least 5 records")
    side = _single_side(recs)
    d = np.array([r.delta for r in recs])
    y = np.array([r.value for r in recs]) ** 2
    if np.any(d > 0.05):
        raise DomainError("affine square law is fitted only for delta <= 0.05")
    u, v, res, r2, frac = _linear_lsq(d, y)
    fit = ScalingFit("affine_square", side, (float(d.min()), float(d.max())), len(recs), r2,
                     float(np.linalg.norm(res)), float(np.max(np.abs(res))), frac, u=u, v=v,
                     span_warning=math.log10(d.max() / d.min()) < 1.0)
    if u < 0:
        fit.u, fit.u_clamped = 0.0, True
        fit.notes.append(f"negative intercept {u:.3e} clamped to 0")
    return fit


# --- minima -------------------------------------------------------------------


def _parabolic_vertex(t, z, i):
    """Three-point parabola through (i-1, i, i+1); returns (t*, z*)."""
    t0, t1, t2 = t[i - 1], t[i], t[i + 1]
    z0, z1, z2 = z[i - 1], z[i], z[i + 1]
    den = (t0 - t1) * (t0 - t2) * (t1 - t2)
    a = (t2 * (z1 - z0) + t1 * (z0 - z2) + t0 * (z2 - z1)) / den
    b = (t2**2 * (z0 - z1) + t1**2 * (z2 - z0) + t0**2 * (z1 - z2)) / den
    if a <= 0:
        return t1, z1
    ts = -b / (2 * a)
    if not t0 <= ts <= t2:
        return t1, z1
    c = z1 - a * t1**2 - b * t1
    return ts, a * ts**2 + b * ts + c


def local_minima(t, z, distance: int | None = None):
    """Refined (t, z) of interior local minima; ``distance`` (samples) keeps
    only the lowest minimum within that separation."""
    t = np.asarray(t, dtype=float)
    z = np.asarray(z, dtype=float)
    idx, _ = find_peaks(-z, distance=distance)
    return [_parabolic_vertex(t, z, i) for i in idx if 0 < i < len(z) - 1]


def _trace_arrays(trace, which):
    if isinstance(trace, tuple):
        return np.asarray(trace[0], float), np.asarray(trace[1], float)
    return np.asarray(trace.times, float), np.asarray(getattr(trace, which), float)


def extract_period(trace, which: str = "zeta", min_separation: float | None = None) -> float:
    """Mean spacing of successive minima of a trace.

    ``trace`` is a QuadratureTrace-like object or a (t, zeta) pair.  With
    ``min_separation`` (time units) only the lowest minimum in each such
    window counts, which filters fast ripple riding on a slow oscillation.
    """
    t, z = _trace_arrays(trace, which)
    distance = None
    if min_separation is not None:
        distance = max(1, int(round(min_separation / (t[1] - t[0]))))
    mins = local_minima(t, z, distance)
    if len(mins) < 2:
        raise InsufficientSpan("need at least two minima to measure a period")
    tm = np.array([m[0] for m in mins])
    return float((tm[-1] - tm[0]) / (len(tm) - 1))


@dataclass(frozen=True)
class MinimumResult:
    t: float
    value: float
    at_boundary: bool


def extract_zeta_min(trace, which: str = "zeta") -> MinimumResult:
    """Global minimum of a trace with three-point parabolic refinement."""
    t, z = _trace_arrays(trace, which)
    if len(t) < 3:
        raise InsufficientSpan("trace too short")
    i = int(np.argmin(z))
    if i == 0 or i == len(z) - 1:
        return MinimumResult(float(t[i]), float(z[i]), True)
    ts, zs = _parabolic_vertex(t, z, i)
    return MinimumResult(float(ts), float(zs), False)


def refine_zeta_min(fn: Callable[[np.ndarray], np.ndarray], t_grid, candidates: int = 8,
                    xatol: float = 1e-10, values=None) -> MinimumResult:
    """Global minimum of an evaluator: the ``candidates`` lowest grid minima are
    each polished with a bounded scalar minimization inside their grid bracket.
    ``values`` may carry fn(t_grid) when it is already known."""
    t = np.asarray(t_grid, dtype=float)
    z = np.asarray(fn(t) if values is None else values, dtype=float)
    idx, _ = find_peaks(-z)
    idx = idx[np.argsort(z[idx])][:candidates]
    best = MinimumResult(float(t[np.argmin(z)]), float(np.min(z)), True)
    if np.argmin(z) not in (0, len(z) - 1):
        best = MinimumResult(best.t, best.value, False)
    for i in idx:
        r = minimize_scalar(lambda s: float(fn(np.array([s]))[0]), bounds=(t[i - 1], t[i + 1]),
                            method="bounded", options={"xatol": xatol})
        if r.fun < best.value:
            best = MinimumResult(float(r.x), float(r.fun), False)
    return best


def envelope_min(t, z, window: float) -> float:
    """Minimum of the running mean of z over ``window`` (time units).

    Averages out a fast ripple so the result follows the slow squeezing cycle.
    """
    t = np.asarray(t, dtype=float)
    k = max(1, int(round(window / (t[1] - t[0]))))
    if k >= len(t):
        raise InsufficientSpan("trace shorter than the averaging window")
    return float(np.min(np.convolve(np.asarray(z, dtype=float), np.ones(k) / k, mode="valid")))


def records_from_columns(delta: Iterable[float], values: Iterable[float], observable: str,
                         phase: str, xi: Iterable[float] | None = None, psi: float | None = None):
    delta = list(delta)
    xi = list(xi) if xi is not None else [float("nan")] * len(delta)
    return [SweepRecord(x, d, observable, v, phase, psi) for x, d, v in zip(xi, delta, values)]
