"""Closed-form squeezing dynamics of the Dicke model in the large-N boson theory.

Energies are in units of g and times in units of 1/g.  The bosonized
Hamiltonian is

    H = omega a^dag a + eps~ b^dag b + gamma (a^dag + a)(b^dag + b) + e0

with photon mode a and spin-deviation mode b.  The vacuum |0,0> evolves
under four Bogoliubov angles (phi1, phi2, phi_a, phi_b) and two polariton
frequencies Omega_a > Omega_b.

Near the critical line the spin/photon radicand C - sqrt(A^2 + B^2) is a
small difference of large terms.  When the amplification factor
max(cosh 4phi_a, cosh 4phi_b, cosh 2phi2)^2 exceeds ``EXTENDED_THRESHOLD``
the time-independent constants are computed with mpmath and the time
series is evaluated in double-double arithmetic.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from types import SimpleNamespace

import mpmath
import numpy as np

from .ddouble import DD, dd_hypot, dd_sincos
from .errors import ConsistencyError, CriticalSingularity, DomainError
from .oat import min_phi
from .params import DickeParams, Phase, classify_phase

EXTENDED_THRESHOLD = 1e6
RADICAND_TOL = 1e-9
_MP_DPS = 40

__all__ = [
    "DickeBosonCoeffs",
    "DickeBogoliubov",
    "DickeQuadratureTrace",
    "dicke_boson_coefficients",
    "dicke_bogoliubov",
    "dicke_polariton_explicit",
    "dicke_soft_mode_leading",
    "dicke_abc_spin",
    "dicke_abc_photon",
    "dicke_abc_photon_exchange",
    "dicke_zeta",
    "dicke_timeseries",
    "dicke_beat_window",
    "dicke_time_grid",
    "amplification",
]


@dataclass(frozen=True)
class DickeBosonCoeffs:
    omega: float
    varepsilon: float
    gamma: float
    e0: float


@dataclass(frozen=True)
class DickeBogoliubov:
    phi1: float
    phi2: float
    phi_a: float
    phi_b: float
    omega_a_mid: float
    omega_b_mid: float
    Omega_a: float
    Omega_b: float


@dataclass
class DickeQuadratureTrace:
    times: np.ndarray
    a_s: np.ndarray
    b_s: np.ndarray
    c_s: np.ndarray
    zeta_s: np.ndarray
    phi_min_s: np.ndarray
    a_p: np.ndarray
    b_p: np.ndarray
    c_p: np.ndarray
    zeta_p: np.ndarray
    phi_min_p: np.ndarray
    extended: bool


def _phase_of(p: DickeParams, phase: Phase | None) -> Phase:
    actual = classify_phase(p.xi)
    if phase is None:
        return actual
    if phase.label != actual.label:
        raise DomainError(f"phase {phase.label} inconsistent with xi={p.xi}")
    return actual


def _coeffs_generic(omega, epsilon, g, N, superradiant, fn):
    """Boson coefficients in units of g for either float or mpmath inputs."""
    w, e = omega / g, epsilon / g
    if superradiant:
        xi = w * e
        return w, 1 / w, e * w / 2, -N / (4 * w) * (1 + xi**2)
    return w, e, fn.mpf(1) / 2 if fn is mpmath else 0.5, -e * N / 2


def dicke_boson_coefficients(p: DickeParams, phase: Phase | None = None) -> DickeBosonCoeffs:
    """Coefficients of the quadratic Hamiltonian (normal branch at xi = 1)."""
    phase = _phase_of(p, phase)
    w, e, gam, e0 = _coeffs_generic(p.omega, p.epsilon, p.g, p.N, phase.is_ordered, math)
    return DickeBosonCoeffs(w, e, gam, e0)


def _angles_generic(w, e, gam, fn):
    atan2 = fn.atan2
    atanh = fn.atanh
    sqrt = fn.sqrt
    phi1 = atan2(2 * gam, w - e) / 2
    c1, s1 = fn.cos(2 * phi1), fn.sin(2 * phi1)
    arg2 = 2 * gam * c1 / (w + e)
    if not abs(arg2) < 1:
        raise CriticalSingularity("|tanh 2 phi2| >= 1")
    phi2 = atanh(arg2) / 2
    r1 = sqrt(((w + e) / 2) ** 2 - (gam * c1) ** 2)
    r2 = sqrt(((w - e) / 2) ** 2 + gam**2)
    wa, wb = r1 + r2, r1 - r2
    gs = gam * s1
    if not (wb > 0 and abs(gs / wb) < 1):
        raise CriticalSingularity("soft polariton mode vanishes (xi = 1)")
    phia = atanh(gs / wa) / 2
    phib = atanh(-gs / wb) / 2
    Oa = sqrt((wa - gs) * (wa + gs))
    Ob = sqrt((wb - gs) * (wb + gs))
    return phi1, phi2, phia, phib, wa, wb, Oa, Ob


def dicke_bogoliubov(c: DickeBosonCoeffs) -> DickeBogoliubov:
    vals = _angles_generic(c.omega, c.varepsilon, c.gamma, math)
    return DickeBogoliubov(*(float(v) for v in vals))


def _mp_angles(p: DickeParams, phase: Phase):
    w, e, gam, _ = _coeffs_generic(
        mpmath.mpf(p.omega), mpmath.mpf(p.epsilon), mpmath.mpf(p.g), mpmath.mpf(p.N), phase.is_ordered, mpmath
    )
    return _angles_generic(w, e, gam, mpmath)


def dicke_polariton_explicit(p: DickeParams, phase: Phase | None = None) -> tuple[float, float]:
    """(Omega_a, Omega_b) in units of g from the explicit closed forms in (omega, epsilon, g)."""
    phase = _phase_of(p, phase)
    w, e = p.omega / p.g, p.epsilon / p.g
    if phase.is_ordered:
        mid = (w**4 + 1.0) / (2 * w**2)
        rad = math.sqrt(((w**4 - 1.0) / (2 * w**2)) ** 2 + e**2 * w**2)
    else:
        mid = (w**2 + e**2) / 2
        rad = math.sqrt(((w**2 - e**2) / 2) ** 2 + e * w)
    return math.sqrt(mid + rad), math.sqrt(max(mid - rad, 0.0))


def dicke_soft_mode_leading(p: DickeParams, phase: Phase | None = None) -> float:
    """Leading-order soft polariton frequency g sqrt(delta / (k cosh psi))."""
    phase = _phase_of(p, phase)
    k = 1.0 if phase.is_ordered else 2.0
    return math.sqrt(phase.delta / (k * math.cosh(p.psi)))


def amplification(b: DickeBogoliubov) -> float:
    return max(math.cosh(4 * b.phi_a), math.cosh(4 * b.phi_b), math.cosh(2 * b.phi2)) ** 2


def dicke_beat_window(b: DickeBogoliubov) -> float:
    return max(2 * math.pi / b.Omega_b, 2 * math.pi / (b.Omega_a - b.Omega_b))


def dicke_time_grid(p: DickeParams, points_per_slow: int = 2000, points_per_fast: int = 16,
                    window: float | None = None, max_points: int = 2_000_000):
    """Uniform grid over one beat window resolving both polariton periods."""
    if points_per_slow < 100:
        raise DomainError("points_per_slow must be >= 100")
    b = _bog(p, None)
    if window is None:
        window = dicke_beat_window(b)
    n_slow = window / (2 * math.pi / b.Omega_b) * points_per_slow
    n_fast = window / (2 * math.pi / b.Omega_a) * points_per_fast
    n = int(min(max(n_slow, n_fast, 2), max_points))
    return np.linspace(0.0, window, n + 1)


# --- closed forms ---------------------------------------------------------
#
# The spin formulas are written once over a constant namespace ``k`` and a
# trig namespace ``tr`` so the same code serves float64 arrays, mpmath
# scalars and double-double arrays.


def _constants(phi1, phi2, pa, pb, fn):
    S, D = pa + pb, pa - pb
    return SimpleNamespace(
        c2=fn.cosh(2 * phi2), s2=fn.sinh(2 * phi2), sh4p2=fn.sinh(4 * phi2),
        c1=fn.cos(2 * phi1), s1=fn.sin(2 * phi1),
        sh4a=fn.sinh(4 * pa), ch4a=fn.cosh(4 * pa), sh4b=fn.sinh(4 * pb), ch4b=fn.cosh(4 * pb),
        sh2a=fn.sinh(2 * pa), sh2b=fn.sinh(2 * pb),
        shS=fn.sinh(S), chS=fn.cosh(S), shD=fn.sinh(D), chD=fn.cosh(D),
    )


def _trig_from(sa, ca, sb, cb):
    """Time functions from sin/cos of Omega_a t and Omega_b t."""
    return SimpleNamespace(
        sa2=sa * sa, ca2=ca * ca, sb2=sb * sb, cb2=cb * cb,
        s2a=2 * (sa * ca), s2b=2 * (sb * cb),
        cm=ca * cb + sa * sb, cp=ca * cb - sa * sb,
        sm=sa * cb - ca * sb, sp=sa * cb + ca * sb,
    )


def _spin_formula(k, tr):
    A = (-0.5 * k.c2 * ((k.c2 - k.c1) * k.sh4a * tr.sa2 + (k.c2 + k.c1) * k.sh4b * tr.sb2)
         - 0.25 * k.s1 * k.sh4p2 * (tr.ca2 + k.ch4a * tr.sa2 + tr.cb2 + k.ch4b * tr.sb2)
         - (k.s2 * k.chS + k.s1 * k.c2 * k.shS) * k.shS * k.s2 * tr.cm
         + (k.s2 * k.shS + k.s1 * k.c2 * k.chS) * k.chS * k.s2 * tr.cp)
    B = (0.5 * k.c2 * ((1 - k.c1 * k.c2) * k.sh2a * tr.s2a + (1 + k.c1 * k.c2) * k.sh2b * tr.s2b)
         + (k.c1 * k.s2 * k.chD + k.s1 * k.shD) * k.shS * k.s2 * tr.sm
         + (k.c1 * k.s2 * k.shD + k.s1 * k.chD) * k.chS * k.s2 * tr.sp)
    C = (0.5 * k.c2 * (k.c2 - k.c1) * (tr.ca2 + k.ch4a * tr.sa2)
         + 0.5 * k.c2 * (k.c2 + k.c1) * (tr.cb2 + k.ch4b * tr.sb2)
         + 0.25 * k.s1 * k.sh4p2 * (k.sh4a * tr.sa2 + k.sh4b * tr.sb2)
         + (k.s2 * k.shS + k.s1 * k.c2 * k.chS) * k.shS * k.s2 * tr.cm
         - (k.s2 * k.chS + k.s1 * k.c2 * k.shS) * k.chS * k.s2 * tr.cp)
    return A, B, C


def _photon_formula(k, tr):
    A = (-0.5 * k.c2 * ((k.c2 + k.c1) * k.sh4a * tr.sa2 + (k.c2 - k.c1) * k.sh4b * tr.sb2)
         + 0.25 * k.s1 * k.sh4p2 * (tr.ca2 + k.ch4a * tr.sa2 + tr.cb2 + k.ch4b * tr.sb2)
         - (k.s2 * k.chS - k.s1 * k.c2 * k.shS) * k.shS * k.s2 * tr.cm
         + (k.s2 * k.shS - k.s1 * k.c2 * k.chS) * k.chS * k.s2 * tr.cp)
    B = (0.5 * k.c2 * ((1 + k.c1 * k.c2) * k.sh2a * tr.s2a + (1 - k.c1 * k.c2) * k.sh2b * tr.s2b)
         - (k.c1 * k.s2 * k.chD + k.s1 * k.shD) * k.shS * k.s2 * tr.sm
         - (k.c1 * k.s2 * k.shD + k.s1 * k.chD) * k.chS * k.s2 * tr.sp)
    C = (0.5 * k.c2 * (k.c2 + k.c1) * (tr.ca2 + k.ch4a * tr.sa2)
         + 0.5 * k.c2 * (k.c2 - k.c1) * (tr.cb2 + k.ch4b * tr.sb2)
         - 0.25 * k.s1 * k.sh4p2 * (k.sh4a * tr.sa2 + k.sh4b * tr.sb2)
         + (k.s2 * k.shS - k.s1 * k.c2 * k.chS) * k.shS * k.s2 * tr.cm
         - (k.s2 * k.chS - k.s1 * k.c2 * k.shS) * k.chS * k.s2 * tr.cp)
    return A, B, C


def _exchange(phi1, phi2, pa, pb, Oa, Ob):
    """phi_a <-> phi_b, Omega_a <-> Omega_b, phi1 -> -phi1, phi2 unchanged."""
    return -phi1, phi2, pb, pa, Ob, Oa


def _eval_float(phi1, phi2, pa, pb, Oa, Ob, t, formula):
    k = _constants(phi1, phi2, pa, pb, math)
    t = np.asarray(t, dtype=float)
    tr = _trig_from(np.sin(Oa * t), np.cos(Oa * t), np.sin(Ob * t), np.cos(Ob * t))
    return formula(k, tr)


def _eval_dd(mp_angles, t, formula):
    """Double-double evaluation; ``mp_angles`` = (phi1, phi2, pa, pb, Oa, Ob) as mpf."""
    phi1, phi2, pa, pb, Oa, Ob = mp_angles
    with mpmath.workdps(_MP_DPS):
        kmp = _constants(phi1, phi2, pa, pb, mpmath)
        k = SimpleNamespace(**{name: DD.from_mpf(v) for name, v in vars(kmp).items()})
        Oa_dd, Ob_dd = DD.from_mpf(Oa), DD.from_mpf(Ob)
    t = np.asarray(t, dtype=float)
    sa, ca = dd_sincos(Oa_dd * t)
    sb, cb = dd_sincos(Ob_dd * t)
    return formula(k, _trig_from(sa, ca, sb, cb))


def _bog(p: DickeParams, phase: Phase | None) -> DickeBogoliubov:
    phase = _phase_of(p, phase)
    if phase.is_critical:
        raise CriticalSingularity("xi = 1: soft polariton mode vanishes")
    return dicke_bogoliubov(dicke_boson_coefficients(p, phase))


def _float_args(b: DickeBogoliubov):
    return b.phi1, b.phi2, b.phi_a, b.phi_b, b.Omega_a, b.Omega_b


def dicke_abc_spin(p: DickeParams, phase: Phase | None, t):
    """(A_s, B_s, C_s) of the spin-deviation mode in float64."""
    return _eval_float(*_float_args(_bog(p, phase)), t, _spin_formula)


def dicke_abc_photon(p: DickeParams, phase: Phase | None, t):
    """(A_p, B_p, C_p) of the photon mode, evaluated from the photon formulas directly."""
    return _eval_float(*_float_args(_bog(p, phase)), t, _photon_formula)


def dicke_abc_photon_exchange(p: DickeParams, phase: Phase | None, t):
    """(A_p, B_p, C_p) obtained by applying the exchange rule to the spin formulas."""
    return _eval_float(*_exchange(*_float_args(_bog(p, phase))), t, _spin_formula)


def _mp_args(p: DickeParams, phase: Phase):
    with mpmath.workdps(_MP_DPS):
        phi1, phi2, pa, pb, _, _, Oa, Ob = _mp_angles(p, phase)
    return phi1, phi2, pa, pb, Oa, Ob


def _abc_extended(p, phase, t, which):
    args = _mp_args(p, phase)
    if which == "spin":
        return _eval_dd(args, t, _spin_formula)
    return _eval_dd(args, t, _photon_formula)


def _zeta_from(A, B, C):
    """zeta and a consistency check on the radicand; inputs float or DD."""
    if isinstance(C, DD):
        rad = (C - dd_hypot(A, B)).to_float()
        Cf = C.to_float()
    else:
        rad = C - np.hypot(A, B)
        Cf = C
    rad = np.asarray(rad, dtype=float)
    bad = rad < -RADICAND_TOL * np.abs(Cf)
    if np.any(bad):
        raise ConsistencyError(f"negative radicand {rad[bad].min()} (transcription or precision failure)")
    return np.sqrt(np.maximum(rad, 0.0))


def _use_extended(b: DickeBogoliubov, extended) -> bool:
    if extended is None:
        return amplification(b) > EXTENDED_THRESHOLD
    return bool(extended)


def dicke_zeta(p: DickeParams, phase: Phase | None, t, which: str = "spin", extended: bool | None = None):
    """(zeta, phi_min) for the spin or photon mode.

    ``extended`` forces (True) or forbids (False) the double-double path; by
    default it is chosen from the amplification factor.
    """
    if which not in ("spin", "photon"):
        raise DomainError("which must be 'spin' or 'photon'")
    phase = _phase_of(p, phase)
    b = _bog(p, phase)
    if _use_extended(b, extended):
        A, B, C = _abc_extended(p, phase, t, which)
        zeta = _zeta_from(A, B, C)
        A, B = A.to_float(), B.to_float()
    else:
        formula = _spin_formula if which == "spin" else _photon_formula
        A, B, C = _eval_float(*_float_args(b), t, formula)
        zeta = _zeta_from(A, B, C)
    phi, _ = min_phi(A, B)
    return zeta, phi


def dicke_timeseries(p: DickeParams, phase: Phase | None, t_grid, extended: bool | None = None) -> DickeQuadratureTrace:
    t = np.asarray(t_grid, dtype=float)
    if t.ndim != 1 or np.any(np.diff(t) < 0):
        raise DomainError("t_grid must be a monotone 1-d array")
    phase = _phase_of(p, phase)
    b = _bog(p, phase)
    use_ext = _use_extended(b, extended)
    out = {}
    for which, formula in (("s", _spin_formula), ("p", _photon_formula)):
        if use_ext:
            A, B, C = _abc_extended(p, phase, t, "spin" if which == "s" else "photon")
            zeta = _zeta_from(A, B, C)
            A, B, C = A.to_float(), B.to_float(), C.to_float()
        else:
            A, B, C = _eval_float(*_float_args(b), t, formula)
            zeta = _zeta_from(A, B, C)
        phi, _ = min_phi(A, B)
        out[which] = (A, B, C, zeta, phi)
    return DickeQuadratureTrace(t, *out["s"], *out["p"], extended=use_ext)


def dicke_abc_mp(p: DickeParams, t, which: str = "spin", dps: int = 50):
    """Arbitrary-precision (A, B, C) at a single time, as mpf values."""
    phase = classify_phase(p.xi)
    with mpmath.workdps(dps):
        phi1, phi2, pa, pb, _, _, Oa, Ob = _mp_angles(p, phase)
        k = _constants(phi1, phi2, pa, pb, mpmath)
        tt = mpmath.mpf(float(t))
        tr = _trig_from(mpmath.sin(Oa * tt), mpmath.cos(Oa * tt), mpmath.sin(Ob * tt), mpmath.cos(Ob * tt))
        return (_spin_formula if which == "spin" else _photon_formula)(k, tr)


def dicke_zeta_mp(p: DickeParams, t, which: str = "spin", dps: int = 50):
    with mpmath.workdps(dps):
        A, B, C = dicke_abc_mp(p, t, which, dps)
        return mpmath.sqrt(C - mpmath.sqrt(A**2 + B**2))
