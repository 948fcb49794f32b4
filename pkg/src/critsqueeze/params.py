"""Model parameters, phase classification and mean-field order parameters.

Unit conventions: OAT energies are measured in units of 2*kappa*J (times in
1/(2*kappa*J)); Dicke energies in units of g (times in 1/g).
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import DomainError

ORDERED = "ordered"
DISORDERED = "disordered"
CRITICAL = "critical"

# Aliases accepted wherever a phase side is given by name.
_SIDE_ALIASES = {
    "ordered": ORDERED,
    "superradiant": ORDERED,
    "below": ORDERED,
    "disordered": DISORDERED,
    "normal": DISORDERED,
    "above": DISORDERED,
}


def normalize_side(side: str) -> str:
    try:
        return _SIDE_ALIASES[side.lower()]
    except KeyError:
        raise DomainError(f"unknown phase side {side!r}") from None


@dataclass(frozen=True)
class Phase:
    label: str
    delta: float

    @property
    def is_ordered(self) -> bool:
        return self.label == ORDERED

    @property
    def is_critical(self) -> bool:
        return self.label == CRITICAL

    def dicke_label(self) -> str:
        return {ORDERED: "superradiant", DISORDERED: "normal", CRITICAL: "critical"}[self.label]


def classify_phase(xi: float) -> Phase:
    """Ordered for xi < 1, disordered for xi > 1, critical exactly at 1."""
    if not xi >= 0:
        raise DomainError(f"xi must be non-negative, got {xi}")
    delta = abs(xi - 1.0)
    if delta == 0.0:
        return Phase(CRITICAL, 0.0)
    return Phase(ORDERED if xi < 1.0 else DISORDERED, delta)


def xi_from_side(side: str, delta: float) -> float:
    side = normalize_side(side)
    if not delta > 0:
        raise DomainError(f"delta must be positive, got {delta}")
    return 1.0 - delta if side == ORDERED else 1.0 + delta


@dataclass(frozen=True)
class OatParams:
    kappa: float
    Omega: float
    J: float
    xi: float = field(init=False)

    def __post_init__(self):
        if not self.kappa > 0:
            raise DomainError("kappa must be positive")
        if not self.J > 0:
            raise DomainError("J must be positive")
        if not self.Omega >= 0:
            raise DomainError("Omega must be non-negative")
        object.__setattr__(self, "xi", self.Omega / (2.0 * self.kappa * self.J))

    @classmethod
    def from_xi(cls, xi: float, J: float = 1.0) -> "OatParams":
        """Parameters with 2*kappa*J = 1, so Omega equals xi."""
        return cls(kappa=1.0 / (2.0 * J), Omega=float(xi), J=J)

    @property
    def energy_unit(self) -> float:
        return 2.0 * self.kappa * self.J

    @property
    def phase(self) -> Phase:
        return classify_phase(self.xi)

    def to_json(self) -> dict:
        return {"kappa": self.kappa, "omega_field": self.Omega, "j_spin": self.J, "xi": self.xi}

    @classmethod
    def from_json(cls, d: dict) -> "OatParams":
        return cls(kappa=d["kappa"], Omega=d["omega_field"], J=d["j_spin"])


@dataclass(frozen=True)
class DickeParams:
    omega: float
    epsilon: float
    g: float
    N: float = 1.0
    xi: float = field(init=False)
    Delta: float = field(init=False)
    psi: float = field(init=False)

    def __post_init__(self):
        for name in ("omega", "epsilon", "g"):
            if not getattr(self, name) > 0:
                raise DomainError(f"{name} must be positive")
        if not self.N > 0:
            raise DomainError("N must be positive")
        object.__setattr__(self, "xi", self.epsilon * self.omega / self.g**2)
        object.__setattr__(self, "Delta", (self.epsilon - self.omega) / (self.epsilon + self.omega))
        # log(omega/epsilon) is the same number as -2 atanh(Delta) but keeps
        # full relative accuracy when |Delta| is close to 1.
        object.__setattr__(self, "psi", math.log(self.omega / self.epsilon))

    @classmethod
    def from_xi_psi(cls, xi: float, psi: float, N: float = 1.0) -> "DickeParams":
        """omega/g = sqrt(xi) e^{psi/2}, epsilon/g = sqrt(xi) e^{-psi/2}, g = 1."""
        if not xi > 0:
            raise DomainError("xi must be positive")
        r = math.sqrt(xi)
        return cls(omega=r * math.exp(psi / 2), epsilon=r * math.exp(-psi / 2), g=1.0, N=N)

    @classmethod
    def from_xi_delta(cls, xi: float, Delta: float, N: float = 1.0) -> "DickeParams":
        return cls.from_xi_psi(xi, delta_to_psi(Delta), N)

    @property
    def J(self) -> float:
        return self.N / 2.0

    @property
    def phase(self) -> Phase:
        return classify_phase(self.xi)

    def to_json(self) -> dict:
        return {
            "omega_cavity": self.omega,
            "epsilon_atom": self.epsilon,
            "g_coupling": self.g,
            "n_atoms": self.N,
            "xi": self.xi,
            "delta_detune": self.Delta,
            "psi": self.psi,
        }

    @classmethod
    def from_json(cls, d: dict) -> "DickeParams":
        return cls(omega=d["omega_cavity"], epsilon=d["epsilon_atom"], g=d["g_coupling"], N=d["n_atoms"])


def oat_order_parameter(p: OatParams) -> tuple[float, float]:
    """Both signs of m/J."""
    if p.xi < 1.0:
        m = math.sqrt(1.0 - p.xi**2)
        return (m, -m)
    return (0.0, 0.0)


def oat_rotation_angle(p: OatParams) -> float:
    return math.acos(p.xi) if p.xi < 1.0 else 0.0


def dicke_order_parameters(p: DickeParams) -> tuple[tuple[float, float], tuple[float, float]]:
    """Return ((m+, m-), (alpha+, alpha-)) with alpha = -g m / (omega sqrt(N))."""
    if p.xi < 1.0:
        m = 0.5 * p.N * math.sqrt(1.0 - p.xi**2)
        alpha = -p.g * m / (p.omega * math.sqrt(p.N))
        return (m, -m), (alpha, -alpha)
    return (0.0, 0.0), (0.0, 0.0)


def delta_to_psi(Delta: float) -> float:
    if not abs(Delta) < 1:
        raise DomainError(f"|Delta| must be < 1, got {Delta}")
    return -2.0 * math.atanh(Delta)


def psi_to_delta(psi: float) -> float:
    return -math.tanh(psi / 2.0)


def detuning_convert(value: float, direction: str) -> float:
    """direction is 'Delta->psi' or 'psi->Delta'."""
    key = direction.replace(" ", "").lower()
    if key in ("delta->psi", "delta_to_psi"):
        return delta_to_psi(value)
    if key in ("psi->delta", "psi_to_delta"):
        return psi_to_delta(value)
    raise DomainError(f"unknown conversion direction {direction!r}")


def phase_boundary_samples(omega_range: tuple[float, float], count: int, log: bool = True):
    """Points (omega/g, epsilon/g) on the critical hyperbola epsilon*omega = g^2."""
    lo, hi = omega_range
    if not (lo > 0 and hi > 0):
        raise DomainError("omega/g range must be positive")
    if count < 2:
        raise DomainError("count must be >= 2")
    xs = np.geomspace(lo, hi, count) if log else np.linspace(lo, hi, count)
    return [(float(x), 1.0 / float(x)) for x in xs]
