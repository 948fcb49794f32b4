"""Batch engine: run configuration, per-point evaluators and parallel sweeps.

Each grid point is evaluated by a pure function of (config, delta); a
process pool works through the points and a single collector sorts the
rows by delta, so the output does not depend on the pool width.
"""
from __future__ import annotations

import json
import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field, fields

import numpy as np

from .dicke import dicke_bogoliubov, dicke_boson_coefficients, dicke_time_grid, dicke_timeseries, dicke_zeta
from .errors import CriticalSingularity, DomainError
from .fit import envelope_min, extract_period, extract_zeta_min, refine_zeta_min
from .oat import oat_squeezing_period, oat_time_grid, oat_timeseries
from .params import DickeParams, OatParams, classify_phase, delta_to_psi, normalize_side, xi_from_side
from .tables import Column, ResultTable, package_version

WORKERS_ENV = "CRITSQUEEZE_WORKERS"
OAT_TIME = "1/(2kJ)"
DICKE_TIME = "1/g"


def default_workers() -> int:
    raw = os.environ.get(WORKERS_ENV)
    if raw is None:
        return 1
    try:
        n = int(raw)
    except ValueError:
        raise DomainError(f"{WORKERS_ENV} must be an integer, got {raw!r}") from None
    if n < 1:
        raise DomainError(f"{WORKERS_ENV} must be >= 1")
    return n


@dataclass
class RunConfig:
    model: str = "oat"  # oat | dicke
    side: str = "ordered"
    deltas: list = field(default_factory=list)
    delta_range: list | None = None  # [lo, hi, count]
    log_spaced: bool = True
    Delta: float | None = None  # detuning; psi wins when both are given
    psi: float | None = None
    observable: str = "spin"  # spin | photon (dicke sweeps)
    periods: float = 2.0
    t_max: float | None = None
    points_per_period: int = 2000
    points_per_fast: int = 16
    n_max_start: int = 32
    tol: float = 1e-10
    workers: int | None = None
    outdir: str = "."
    prefix: str | None = None

    @classmethod
    def from_dict(cls, d: dict) -> "RunConfig":
        known = {f.name for f in fields(cls)}
        unknown = set(d) - known
        if unknown:
            raise DomainError(f"unknown config keys: {sorted(unknown)}")
        cfg = cls(**d)
        cfg.validate()
        return cfg

    @classmethod
    def from_json_file(cls, path) -> "RunConfig":
        with open(path) as fh:
            return cls.from_dict(json.load(fh))

    def to_dict(self) -> dict:
        return asdict(self)

    def validate(self):
        if self.model not in ("oat", "dicke"):
            raise DomainError(f"model must be 'oat' or 'dicke', got {self.model!r}")
        normalize_side(self.side)
        if self.points_per_period < 100:
            raise DomainError("points_per_period must be >= 100")
        if self.workers is not None and self.workers < 1:
            raise DomainError("workers must be >= 1")
        if self.observable not in ("spin", "photon"):
            raise DomainError("observable must be 'spin' or 'photon'")
        for d in self.delta_values():
            if d == 0:
                raise CriticalSingularity("delta = 0 is the critical point; no finite closed form exists")
            if not d > 0:
                raise DomainError(f"delta values must be positive, got {d}")
        return self

    def delta_values(self) -> list:
        vals = [float(d) for d in self.deltas]
        if self.delta_range is not None:
            lo, hi, count = self.delta_range
            grid = np.geomspace(lo, hi, int(count)) if self.log_spaced else np.linspace(lo, hi, int(count))
            vals += [float(x) for x in grid]
        return vals

    def detuning_psi(self) -> float:
        if self.psi is not None:
            return float(self.psi)
        if self.Delta is not None:
            return delta_to_psi(float(self.Delta))
        return 0.0

    def width(self) -> int:
        return self.workers if self.workers is not None else default_workers()


# --- per-point evaluators -----------------------------------------------------


def oat_sweep_point(cfg: RunConfig, delta: float) -> list:
    p = OatParams.from_xi(xi_from_side(cfg.side, delta))
    trace = oat_timeseries(p, None, oat_time_grid(p, max(cfg.periods, 2.0), cfg.points_per_period))
    m = extract_zeta_min(trace)
    return [p.xi, delta, extract_period(trace), m.value, m.t]


def dicke_sweep_point(cfg: RunConfig, delta: float) -> list:
    psi = cfg.detuning_psi()
    p = DickeParams.from_xi_psi(xi_from_side(cfg.side, delta), psi)
    b = dicke_bogoliubov(dicke_boson_coefficients(p))
    ts = dicke_time_grid(p, points_per_slow=cfg.points_per_period, points_per_fast=cfg.points_per_fast)

    def fn(t):
        return dicke_zeta(p, None, t, cfg.observable)[0]

    z = fn(ts)
    m = refine_zeta_min(fn, ts, values=z)
    env = envelope_min(ts, z, 2 * math.pi / b.Omega_a)
    return [p.xi, delta, psi, math.pi / b.Omega_b, m.value, m.t, env]


def sweep_columns(model: str) -> list:
    if model == "oat":
        return [Column("xi"), Column("delta"), Column("period_T", OAT_TIME), Column("zeta_min"),
                Column("t_min", OAT_TIME)]
    return [Column("xi"), Column("delta"), Column("psi"), Column("period_T", DICKE_TIME), Column("zeta_min"),
            Column("t_min", DICKE_TIME), Column("zeta_min_envelope")]


def _point(args):
    cfg, delta = args
    return (oat_sweep_point if cfg.model == "oat" else dicke_sweep_point)(cfg, delta)


def run_sweep(cfg: RunConfig, workers: int | None = None) -> ResultTable:
    """Evaluate every delta of ``cfg``; rows sorted by delta."""
    cfg.validate()
    deltas = sorted(set(cfg.delta_values()))
    if not deltas:
        raise DomainError("empty delta list")
    width = workers if workers is not None else cfg.width()
    jobs = [(cfg, d) for d in deltas]
    if width == 1 or len(jobs) == 1:
        rows = [_point(j) for j in jobs]
    else:
        with ProcessPoolExecutor(max_workers=width) as pool:
            rows = list(pool.map(_point, jobs))
    rows.sort(key=lambda r: r[1])
    meta = {"command": "sweep", "config": cfg.to_dict(), "code_version": package_version()}
    return ResultTable(sweep_columns(cfg.model), rows, meta)


# --- time series ----------------------------------------------------------------


def timeseries_table(cfg: RunConfig, delta: float) -> ResultTable:
    meta = {"command": "timeseries", "config": cfg.to_dict(), "delta": delta}
    if cfg.model == "oat":
        p = OatParams.from_xi(xi_from_side(cfg.side, delta))
        if cfg.t_max is not None:
            n = int(math.ceil(cfg.t_max / oat_squeezing_period(p) * cfg.points_per_period))
            t = np.linspace(0.0, cfg.t_max, max(n, 2) + 1)
        else:
            t = oat_time_grid(p, cfg.periods, cfg.points_per_period)
        tr = oat_timeseries(p, None, t)
        cols = [Column("t", OAT_TIME), Column("A"), Column("B"), Column("C"), Column("zeta"), Column("phi_min", "rad")]
        rows = [list(r) for r in zip(tr.times, tr.a_vals, tr.b_vals, tr.c_vals, tr.zeta, tr.phi_min)]
        meta["params"] = p.to_json()
        return ResultTable(cols, rows, meta)
    p = DickeParams.from_xi_psi(xi_from_side(cfg.side, delta), cfg.detuning_psi())
    b = dicke_bogoliubov(dicke_boson_coefficients(p))
    window = cfg.t_max
    if window is None:
        window = cfg.periods * 2 * math.pi / b.Omega_b
    t = dicke_time_grid(p, cfg.points_per_period, cfg.points_per_fast, window=window)
    tr = dicke_timeseries(p, None, t)
    cols = [Column("t", DICKE_TIME), Column("zeta_s"), Column("zeta_p"), Column("phi_min_s", "rad"),
            Column("phi_min_p", "rad")]
    rows = [list(r) for r in zip(tr.times, tr.zeta_s, tr.zeta_p, tr.phi_min_s, tr.phi_min_p)]
    meta["params"] = p.to_json()
    meta["extended_precision"] = tr.extended
    return ResultTable(cols, rows, meta)


def phase_diagram_table(omega_range=(0.1, 4.0), count: int = 50, points=()) -> ResultTable:
    """Boundary samples epsilon*omega = g^2 plus labeled probe points (xi, psi)."""
    from .params import phase_boundary_samples

    rows = [[w, e, 1.0, "boundary"] for w, e in phase_boundary_samples(tuple(omega_range), count)]
    for xi, psi in points:
        p = DickeParams.from_xi_psi(xi, psi)
        rows.append([p.omega, p.epsilon, p.xi, classify_phase(p.xi).dicke_label()])
    cols = [Column("omega", "g"), Column("epsilon", "g"), Column("xi"), Column("region", None)]
    meta = {"command": "phase-diagram", "omega_range": list(omega_range), "count": count}
    return ResultTable(cols, rows, meta)
