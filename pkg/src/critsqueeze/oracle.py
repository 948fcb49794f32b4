"""Brute-force oracles for the closed forms.

* Truncated-Fock evolution of the quadratic boson Hamiltonians: the
  single-mode problem through a tridiagonal eigendecomposition, the two-mode
  problem by sparse Krylov propagation.
* Linear Heisenberg evolution of the Dicke quadratures (Gaussian covariance),
  optionally in mpmath, for symplectic-purity checks.
* Finite-J exact diagonalization of the full OAT spin Hamiltonian with a
  Kitagawa-Ueda squeezing measurement.

None of these use the Bogoliubov angles.
"""
from __future__ import annotations

import json
import math
from dataclasses import asdict, dataclass, field
from typing import Callable, Sequence

import mpmath
import numpy as np
import scipy.linalg as sla
import scipy.sparse as sp
from scipy.sparse.linalg import expm_multiply

from .dicke import DickeBosonCoeffs
from .errors import ConvergenceFailure, DomainError
from .oat import OatBosonCoeffs
from .params import OatParams, classify_phase

MAX_DIM = 60000


@dataclass
class ConvergenceStep:
    n_max: object
    observable: str
    value: float
    delta_on_doubling: float | None


@dataclass
class FockBasis:
    mode_count: int
    n_max: tuple
    states: np.ndarray  # (dimension, mode_count) occupation numbers
    even_only: bool = True

    @property
    def dimension(self) -> int:
        return len(self.states)


@dataclass
class OracleState:
    amplitudes: np.ndarray  # (n_times, dimension)
    basis: FockBasis
    times: np.ndarray
    convergence: list = field(default_factory=list)

    def norms(self):
        return np.sum(np.abs(self.amplitudes) ** 2, axis=-1)


def dump_convergence(record: Sequence[ConvergenceStep], path=None) -> str:
    text = json.dumps([asdict(s) for s in record], indent=2, default=str)
    if path is not None:
        with open(path, "w") as fh:
            fh.write(text + "\n")
    return text


def convergence_doubling(evaluator: Callable[[int], object], start_n_max: int, tol: float,
                         max_doublings: int = 8, observable: str = "value"):
    """Double the cutoff until successive evaluations differ by less than ``tol``.

    ``evaluator(n_max)`` may return a scalar or an array; the change is the
    max-abs difference.  Returns (value, n_max, record).
    """
    if not tol > 0:
        raise DomainError("tol must be positive")
    n = int(start_n_max)
    prev = np.asarray(evaluator(n), dtype=float)
    record = [ConvergenceStep(n, observable, float(np.max(np.abs(prev))), None)]
    for _ in range(max_doublings):
        n *= 2
        cur = np.asarray(evaluator(n), dtype=float)
        change = float(np.max(np.abs(cur - prev)))
        record.append(ConvergenceStep(n, observable, float(np.max(np.abs(cur))), change))
        if change < tol:
            return cur, n, record
        prev = cur
    raise ConvergenceFailure(f"no convergence to {tol} after {max_doublings} doublings", record)


# --- single mode: H = c1 n + c2 (a^dag^2 + a^2) -------------------------------


def oat_fock_basis(n_max: int, even_only: bool = True) -> FockBasis:
    if n_max < 4:
        raise DomainError("n_max must be >= 4")
    n = np.arange(0, n_max + 1, 2 if even_only else 1)
    return FockBasis(1, (n_max,), n[:, None], even_only)


def oat_fock_matrix(c: OatBosonCoeffs, basis: FockBasis) -> np.ndarray:
    """Dense Hamiltonian (without the constant c3) in the given basis."""
    n = basis.states[:, 0]
    H = np.diag(c.c1 * n.astype(float))
    pos = {int(v): i for i, v in enumerate(n)}
    for i, v in enumerate(n):
        j = pos.get(int(v) + 2)
        if j is not None:
            H[i, j] = H[j, i] = c.c2 * math.sqrt((v + 1) * (v + 2))
    return H


def _oat_eig(c: OatBosonCoeffs, basis: FockBasis):
    n = basis.states[:, 0].astype(float)
    if basis.even_only:
        # the even sector is tridiagonal: <n+2|H|n> = c2 sqrt((n+1)(n+2))
        off = c.c2 * np.sqrt((n[:-1] + 1) * (n[:-1] + 2))
        return sla.eigh_tridiagonal(c.c1 * n, off)
    return sla.eigh(oat_fock_matrix(c, basis))


def _evolve_vacuum(w, V, t):
    t = np.atleast_1d(np.asarray(t, dtype=float))
    phases = np.exp(-1j * np.outer(t, w))
    return (phases * V[0].conj()) @ V.T


def oat_fock_state(c: OatBosonCoeffs, t, n_max: int, even_only: bool = True) -> OracleState:
    basis = oat_fock_basis(n_max, even_only)
    w, V = _oat_eig(c, basis)
    return OracleState(_evolve_vacuum(w, V, t), basis, np.atleast_1d(np.asarray(t, float)))


def _single_mode_abc(amps, n, step):
    """A, B, C of <a^dag^2 + a^2>, -i<a^dag^2 - a^2>, 1 + 2<n> for a state on occupations n."""
    pos = {int(v): i for i, v in enumerate(n)}
    src = [i for i, v in enumerate(n) if int(v) + 2 in pos]
    dst = [pos[int(n[i]) + 2] for i in src]
    coef = np.sqrt((n[src] + 1.0) * (n[src] + 2.0))
    aa = np.sum(amps[:, src].conj() * amps[:, dst] * coef, axis=1)  # <a a>
    num = np.sum(np.abs(amps) ** 2 * n, axis=1)
    return 2 * aa.real, -2 * aa.imag, 1 + 2 * num


def fock_evolve_oat(c: OatBosonCoeffs, t, n_max: int, even_only: bool = True):
    """(A, B, C) arrays from truncated-Fock evolution of the vacuum."""
    st = oat_fock_state(c, t, n_max, even_only)
    return _single_mode_abc(st.amplitudes, st.basis.states[:, 0].astype(float), 2)


def fock_evolve_oat_auto(c: OatBosonCoeffs, t, tol: float = 1e-12, start_n_max: int = 32,
                         max_doublings: int = 9):
    """Cutoff-converged (A, B, C); returns ((A, B, C), n_max, record)."""
    value, n, record = convergence_doubling(
        lambda n: np.stack(fock_evolve_oat(c, t, n)), start_n_max, tol, max_doublings, "A,B,C"
    )
    return (value[0], value[1], value[2]), n, record


# --- two modes: H = w a^dag a + e b^dag b + g (a^dag + a)(b^dag + b) -----------


def dicke_fock_basis(n_max_a: int, n_max_b: int, even_only: bool = True) -> FockBasis:
    """Product cutoffs n_a <= N_a, n_b <= N_b, restricted to even total parity."""
    if min(n_max_a, n_max_b) < 4:
        raise DomainError("per-mode cutoffs must be >= 4")
    ia, ib = np.meshgrid(np.arange(n_max_a + 1), np.arange(n_max_b + 1), indexing="ij")
    ia, ib = ia.ravel(), ib.ravel()
    if even_only:
        keep = (ia + ib) % 2 == 0
        ia, ib = ia[keep], ib[keep]
    return FockBasis(2, (n_max_a, n_max_b), np.stack([ia, ib], axis=1), even_only)


def _index_table(basis: FockBasis):
    na, nb = basis.n_max
    table = -np.ones((na + 3, nb + 3), dtype=int)
    table[basis.states[:, 0], basis.states[:, 1]] = np.arange(basis.dimension)
    return table


def dicke_fock_matrix(c: DickeBosonCoeffs, basis: FockBasis) -> sp.csr_matrix:
    """Sparse Hamiltonian (without e0) in the given basis."""
    if basis.dimension > MAX_DIM:
        raise MemoryError(f"dimension {basis.dimension} exceeds MAX_DIM={MAX_DIM}")
    ia, ib = basis.states[:, 0], basis.states[:, 1]
    table = _index_table(basis)
    rows, cols, vals = [], [], []
    for dj in (1, -1):
        # a^dag (b^dag or b): n_a -> n_a + 1, n_b -> n_b + dj
        jb = ib + dj
        ok = jb >= 0
        dst = np.full(len(ia), -1)
        dst[ok] = table[ia[ok] + 1, jb[ok]]
        ok &= dst >= 0
        src = np.nonzero(ok)[0]
        amp = c.gamma * np.sqrt(ia[ok] + 1.0) * np.sqrt(np.maximum(ib[ok], jb[ok]).astype(float))
        rows += [dst[ok], src]
        cols += [src, dst[ok]]
        vals += [amp, amp]
    D = basis.dimension
    off = sp.csr_matrix((np.concatenate(vals), (np.concatenate(rows), np.concatenate(cols))), shape=(D, D))
    return (off + sp.diags(c.omega * ia + c.varepsilon * ib.astype(float))).tocsr()


def _krylov_propagate(H, v0, t):
    """Rows psi(t_k) = exp(-i H t_k) v0 for an increasing time grid."""
    t = np.atleast_1d(np.asarray(t, dtype=float))
    if len(t) > 2 and np.allclose(np.diff(t), t[1] - t[0], rtol=1e-12, atol=0.0):
        head = v0 if t[0] == 0 else expm_multiply(-1j * t[0] * H, v0)
        return expm_multiply(-1j * H, head, start=0.0, stop=t[-1] - t[0], num=len(t), endpoint=True)
    out = np.empty((len(t), len(v0)), dtype=complex)
    cur, prev = v0, 0.0
    for k, tk in enumerate(t):
        if tk != prev:
            cur = expm_multiply(-1j * (tk - prev) * H, cur)
        out[k], prev = cur, tk
    return out


def dicke_fock_state(c: DickeBosonCoeffs, t, n_max_a: int, n_max_b: int) -> OracleState:
    basis = dicke_fock_basis(n_max_a, n_max_b)
    v0 = np.zeros(basis.dimension, dtype=complex)
    v0[0] = 1.0
    amps = _krylov_propagate(dicke_fock_matrix(c, basis), v0, t)
    return OracleState(amps, basis, np.atleast_1d(np.asarray(t, float)))


def _two_mode_abc(amps, basis: FockBasis):
    table = _index_table(basis)
    ia, ib = basis.states[:, 0], basis.states[:, 1]
    p2 = np.abs(amps) ** 2

    def pair(raise_a, raise_b):
        dst = table[ia + raise_a, ib + raise_b]
        ok = dst >= 0
        n = (ia if raise_a else ib)[ok].astype(float)
        return np.sum(amps[:, ok].conj() * amps[:, dst[ok]] * np.sqrt((n + 1) * (n + 2)), axis=1)

    bb, aa = pair(0, 2), pair(2, 0)
    spin = (2 * bb.real, -2 * bb.imag, 1 + 2 * p2 @ ib)
    photon = (2 * aa.real, -2 * aa.imag, 1 + 2 * p2 @ ia)
    return spin, photon


def fock_evolve_dicke(c: DickeBosonCoeffs, t, n_max_a: int, n_max_b: int | None = None):
    """(A_s, B_s, C_s, A_p, B_p, C_p) from two-mode truncated-Fock evolution."""
    st = dicke_fock_state(c, t, n_max_a, n_max_a if n_max_b is None else n_max_b)
    spin, photon = _two_mode_abc(st.amplitudes, st.basis)
    return (*spin, *photon)


def cutoff_estimate(n_bar: float, tol: float) -> int:
    """Cutoff at which a squeezed vacuum with mean occupation n_bar has
    occupation-weighted tail below tol (amplitudes fall as tanh(r)^(n/2))."""
    n_bar = max(float(n_bar), 1e-6)
    decay = -math.log(math.sqrt(n_bar / (1.0 + n_bar)))  # -ln tanh r
    n = 8
    while n * math.exp(-decay * n) > tol * 1e-2 and n < 100000:
        n += 2
    return n


def fock_evolve_dicke_auto(c: DickeBosonCoeffs, t, tol: float = 1e-10, growth: float = 1.3,
                           max_steps: int = 4):
    """Cutoff-converged two-mode evolution.

    Initial per-mode cutoffs come from the peak occupations of the Gaussian
    moment evolution; both are then enlarged by ``growth`` until the six
    observables change by less than ``tol``.  Returns (values, (N_a, N_b), record).
    """
    t = np.atleast_1d(np.asarray(t, dtype=float))
    probe = np.linspace(t.min(), t.max(), 64)
    occ_a = occ_b = 0.0
    for tk in probe:
        (_, _, cs), (_, _, cp) = gaussian_abc(gaussian_covariance(c, tk))
        occ_b, occ_a = max(occ_b, (cs - 1) / 2), max(occ_a, (cp - 1) / 2)
    na, nb = cutoff_estimate(occ_a, tol), cutoff_estimate(occ_b, tol)
    prev = None
    record = []
    for _ in range(max_steps):
        cur = np.stack(fock_evolve_dicke(c, t, na, nb))
        change = None if prev is None else float(np.max(np.abs(cur - prev)))
        record.append(ConvergenceStep((na, nb), "A,B,C spin+photon", float(np.max(np.abs(cur))), change))
        if change is not None and change < tol:
            return tuple(cur), (na, nb), record
        prev = cur
        na, nb = int(math.ceil(na * growth)), int(math.ceil(nb * growth))
        if (na + 1) * (nb + 1) // 2 > MAX_DIM:
            break
    raise ConvergenceFailure(f"two-mode cutoff did not converge to {tol}", record)


# --- Gaussian (Heisenberg) evolution of the two-mode quadratures ---------------


def _dicke_generator(c: DickeBosonCoeffs, fn=np):
    """Omega @ M for r = (x_a, p_a, x_b, p_b), H = r^T M r / 2, a = (x + i p)/sqrt(2)."""
    w, e, g2 = c.omega, c.varepsilon, 2 * c.gamma
    if fn is np:
        M = np.array([[w, 0, g2, 0], [0, w, 0, 0], [g2, 0, e, 0], [0, 0, 0, e]], dtype=float)
        Om = np.kron(np.eye(2), np.array([[0.0, 1.0], [-1.0, 0.0]]))
        return Om @ M
    M = mpmath.matrix([[w, 0, g2, 0], [0, w, 0, 0], [g2, 0, e, 0], [0, 0, 0, e]])
    Om = mpmath.matrix([[0, 1, 0, 0], [-1, 0, 0, 0], [0, 0, 0, 1], [0, 0, -1, 0]])
    return Om * M


def gaussian_covariance(c: DickeBosonCoeffs, t: float, dps: int | None = None):
    """Covariance V(t) (vacuum V = I/2) of (x_a, p_a, x_b, p_b).

    With ``dps`` the propagator is computed by mpmath at that precision.
    """
    if dps is None:
        S = sla.expm(_dicke_generator(c) * float(t))
        return S @ S.T * 0.5
    with mpmath.workdps(dps):
        cm = DickeBosonCoeffs(*(mpmath.mpf(v) for v in (c.omega, c.varepsilon, c.gamma, c.e0)))
        S = mpmath.expm(_dicke_generator(cm, mpmath) * mpmath.mpf(t))
        return S * S.T * mpmath.mpf(0.5)


def gaussian_abc(V):
    """(spin, photon) tuples of (A, B, C) from a covariance matrix."""
    def mode(i):
        xx, pp, xp = V[i, i], V[i + 1, i + 1], V[i, i + 1]
        return xx - pp, -2 * xp, xx + pp
    return mode(2), mode(0)


def symplectic_eigenvalues(V):
    """Two-mode symplectic eigenvalues (nu_+, nu_-) via the Serafini invariants."""
    fn = mpmath if isinstance(V, mpmath.matrix) else np
    if fn is np:
        V = np.asarray(V, dtype=float)
        det = np.linalg.det
        A, B, Cab = V[:2, :2], V[2:, 2:], V[:2, 2:]
        total = np.linalg.det(V)
    else:
        det = mpmath.det
        A, B, Cab = V[0:2, 0:2], V[2:4, 2:4], V[0:2, 2:4]
        total = mpmath.det(V)
    big = det(A) + det(B) + 2 * det(Cab)
    disc = fn.sqrt(max(big**2 - 4 * total, 0))
    return fn.sqrt((big + disc) / 2), fn.sqrt(max((big - disc) / 2, 0))


# --- finite-J exact diagonalization of H = -kappa S_x^2 + Omega S_z ------------


def spin_matrices(J: float):
    """(S_x, S_y, S_z) in the |J, m> basis ordered m = -J ... J."""
    dim = int(round(2 * J)) + 1
    if abs((dim - 1) / 2 - J) > 1e-12:
        raise DomainError("J must be an integer or half-integer")
    m = -J + np.arange(dim)
    up = np.sqrt(J * (J + 1) - m[:-1] * (m[:-1] + 1))
    Sp = np.diag(up, -1)  # <m+1|S+|m>
    Sx = 0.5 * (Sp + Sp.T)
    Sy = -0.5j * (Sp - Sp.T)
    return Sx, Sy, np.diag(m)


def _min_perp_variance(state, ops):
    mean = np.array([np.vdot(state, o @ state).real for o in ops])
    n = mean / np.linalg.norm(mean)
    ref = np.array([0.0, 1.0, 0.0]) if abs(n[1]) < 0.9 else np.array([1.0, 0.0, 0.0])
    u = np.cross(n, ref)
    u /= np.linalg.norm(u)
    v = np.cross(n, u)
    Ju = sum(u[i] * ops[i] for i in range(3))
    Jv = sum(v[i] * ops[i] for i in range(3))
    psi_u, psi_v = Ju @ state, Jv @ state
    mu, mv = np.vdot(state, psi_u).real, np.vdot(state, psi_v).real
    vuu = np.vdot(psi_u, psi_u).real - mu**2
    vvv = np.vdot(psi_v, psi_v).real - mv**2
    vuv = np.vdot(psi_u, psi_v).real - mu * mv
    return 0.5 * (vuu + vvv) - math.hypot(0.5 * (vuu - vvv), vuv)


def spin_ed_oat(p: OatParams | float, J_finite: float, t_grid, kappa_scale: float = 1.0):
    """Kitagawa-Ueda zeta_s(t) from exact evolution of the full spin Hamiltonian.

    The model is taken at the same xi as ``p`` with 2 kappa J_finite = 1, so
    times are in units of 1/(2 kappa J).  The initial state is the mean-field
    ground state: |J,-J> rotated about y by theta = arccos(xi) in the ordered
    phase (mean spin -J(sin theta, 0, cos theta)), |J,-J> otherwise.  The
    variance is minimized in the plane perpendicular to the instantaneous mean
    spin and normalized by J/2.
    """
    xi = p.xi if isinstance(p, OatParams) else float(p)
    if not 1 <= J_finite <= 2000:
        raise DomainError("J_finite out of range")
    Sx, Sy, Sz = spin_matrices(J_finite)
    kappa = kappa_scale / (2.0 * J_finite)
    H = -kappa * Sx @ Sx + xi * Sz
    w, V = np.linalg.eigh(H)
    psi0 = np.zeros(len(Sz), dtype=complex)
    psi0[0] = 1.0
    if classify_phase(xi).is_ordered:
        psi0 = sla.expm(-1j * math.acos(xi) * Sy) @ psi0
    coeff = V.conj().T @ psi0
    ops = (Sx, Sy, Sz)
    out = []
    for t in np.atleast_1d(np.asarray(t_grid, dtype=float)):
        state = V @ (np.exp(-1j * w * t) * coeff)
        out.append(math.sqrt(max(_min_perp_variance(state, ops), 0.0) / (J_finite / 2.0)))
    return np.array(out)
