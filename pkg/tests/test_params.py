import math

import pytest
from hypothesis import given, strategies as st

from critsqueeze.errors import DomainError
from critsqueeze.params import (
    CRITICAL,
    DISORDERED,
    ORDERED,
    DickeParams,
    OatParams,
    classify_phase,
    delta_to_psi,
    detuning_convert,
    dicke_order_parameters,
    oat_order_parameter,
    oat_rotation_angle,
    phase_boundary_samples,
    psi_to_delta,
)


@pytest.mark.parametrize("xi,label,delta", [(0.8, ORDERED, 0.2), (1.0, CRITICAL, 0.0), (1.2, DISORDERED, 0.2)])
def test_classify(xi, label, delta):
    ph = classify_phase(xi)
    assert ph.label == label
    assert ph.delta == pytest.approx(delta, abs=1e-15)


def test_classify_rejects_negative():
    with pytest.raises(DomainError):
        classify_phase(-0.1)


@pytest.mark.parametrize("xi,m", [(0.6, 0.8), (1.0, 0.0), (2.0, 0.0)])
def test_oat_order_parameter(xi, m):
    plus, minus = oat_order_parameter(OatParams.from_xi(xi))
    assert plus == pytest.approx(m, abs=1e-15)
    assert minus == pytest.approx(-m, abs=1e-15)


@pytest.mark.parametrize("xi,theta", [(0.6, 0.9272952180016122), (1.0, 0.0), (0.0, math.pi / 2)])
def test_rotation_angle(xi, theta):
    assert oat_rotation_angle(OatParams.from_xi(xi)) == pytest.approx(theta, abs=1e-15)


def test_dicke_order_parameters_ordered():
    p = DickeParams(omega=1.0, epsilon=0.6, g=1.0, N=100)
    (m_plus, m_minus), (a_plus, a_minus) = dicke_order_parameters(p)
    assert (m_plus, m_minus) == pytest.approx((40.0, -40.0))
    assert (a_plus, a_minus) == pytest.approx((-4.0, 4.0))


@pytest.mark.parametrize("xi", [1.0, 1.5])
def test_dicke_order_parameters_normal(xi):
    p = DickeParams.from_xi_psi(xi, 0.3)
    assert dicke_order_parameters(p) == ((0.0, 0.0), (0.0, 0.0))


def test_detuning_values():
    assert delta_to_psi(-0.9) == pytest.approx(2.944439, abs=1e-6)
    assert delta_to_psi(0.0) == 0.0
    assert psi_to_delta(2.944439) == pytest.approx(-0.9, abs=1e-7)
    # cosh psi = (eps/omega + omega/eps) / 2 with eps/omega = 0.1/1.9
    r = 0.1 / 1.9
    assert math.cosh(delta_to_psi(-0.9)) == pytest.approx((r + 1 / r) / 2, rel=1e-12)
    assert detuning_convert(-0.9, "Delta->psi") == delta_to_psi(-0.9)
    with pytest.raises(DomainError):
        delta_to_psi(1.0)


@given(st.floats(min_value=-0.999, max_value=0.999))
def test_detuning_round_trip(D):
    assert psi_to_delta(delta_to_psi(D)) == pytest.approx(D, abs=1e-12)


@given(st.floats(min_value=0.05, max_value=5.0), st.floats(min_value=-6.0, max_value=6.0))
def test_dicke_from_xi_psi(xi, psi):
    p = DickeParams.from_xi_psi(xi, psi)
    assert p.xi == pytest.approx(xi, rel=1e-13)
    assert p.psi == pytest.approx(psi, abs=1e-12)
    assert p.Delta == pytest.approx(-math.tanh(psi / 2), abs=1e-13)


def test_json_round_trip():
    p = OatParams(kappa=0.3, Omega=1.1, J=5.0)
    d = p.to_json()
    assert set(d) == {"kappa", "omega_field", "j_spin", "xi"}
    assert OatParams.from_json(d) == p
    q = DickeParams(omega=1.3, epsilon=0.7, g=0.9, N=40)
    dq = q.to_json()
    assert {"omega_cavity", "epsilon_atom", "g_coupling", "n_atoms", "xi", "delta_detune", "psi"} <= set(dq)
    assert DickeParams.from_json(dq) == q


@pytest.mark.parametrize("w,e", [(1.0, 1.0), (2.0, 0.5), (0.25, 4.0)])
def test_boundary_samples(w, e):
    pts = dict(phase_boundary_samples((w, w), 2))
    assert pts[w] == pytest.approx(e)


def test_boundary_rejects_nonpositive():
    with pytest.raises(DomainError):
        phase_boundary_samples((0.0, 1.0), 5)
