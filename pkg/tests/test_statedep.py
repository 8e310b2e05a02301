import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from cloning import qmath, statedep
from cloning.statedep import TwoStateEnsemble

QP = np.pi / 4
thetas = st.floats(0, QP * (1 - 1e-9))


def test_input_states():
    a, b = statedep.input_states(TwoStateEnsemble(0.0))
    np.testing.assert_allclose(a, [1, 0])
    np.testing.assert_allclose(b, [0, 1])
    a, b = statedep.input_states(TwoStateEnsemble(QP))
    np.testing.assert_allclose(a, b, atol=1e-16)
    assert TwoStateEnsemble(QP).overlap == pytest.approx(1)
    assert TwoStateEnsemble(np.pi / 8).overlap == pytest.approx(np.sqrt(2) / 2)


def test_theta_range():
    with pytest.raises(ValueError):
        TwoStateEnsemble(-0.1)
    with pytest.raises(ValueError):
        TwoStateEnsemble(1.0)
    assert TwoStateEnsemble.from_overlap(0.5).overlap == pytest.approx(0.5)


def test_coeffs_orthogonal_limit():
    k = statedep.coeffs(TwoStateEnsemble(0.0))
    assert (k.a, k.b, k.c) == pytest.approx((1, 0, 0), abs=1e-15)
    assert (k.P, k.Q) == pytest.approx((0.5, 0.5))


def test_coeffs_reference_values():
    k = statedep.coeffs(TwoStateEnsemble(np.pi / 8))
    assert (k.a, k.b, k.c) == pytest.approx((0.908248, 0.288675, -0.091752), abs=1e-6)


def test_coeffs_degenerate():
    with pytest.raises(ValueError):
        statedep.coeffs(TwoStateEnsemble(QP))


@given(st.floats(1e-3, QP - 1e-3))
def test_stable_coeffs_match_printed(t):
    k = statedep.coeffs(TwoStateEnsemble(t))
    assert (k.a, k.b, k.c) == pytest.approx(statedep.printed_coeffs(t), abs=1e-9)


@given(thetas)
def test_unitarity_and_overlap(t):
    e = TwoStateEnsemble(t)
    v = statedep.isometry(e)
    np.testing.assert_allclose(v.conj().T @ v, np.eye(2), atol=1e-12)
    alpha, beta = statedep.outputs(e)
    assert np.vdot(alpha, beta) == pytest.approx(e.overlap, abs=1e-12)


def test_apply():
    joint, rho = statedep.apply(TwoStateEnsemble(0.0), "a")
    np.testing.assert_allclose(joint, qmath.ket(0, 0), atol=1e-15)
    with pytest.raises(ValueError):
        statedep.apply(TwoStateEnsemble(0.0), "c")


def test_global_fidelity_values():
    e = TwoStateEnsemble(np.pi / 8)
    ka, kb = statedep.input_states(e)
    assert statedep.global_fidelity(e, np.kron(ka, ka), np.kron(kb, kb)) == pytest.approx(1)
    f = statedep.global_fidelity(e, *statedep.outputs(e))
    assert f == pytest.approx(0.98296291, abs=1e-8)
    assert f == pytest.approx(0.98299, abs=1e-4)
    assert f == pytest.approx(statedep.global_fidelity_opt(e), abs=1e-12)
    # the single-branch overlap equals the closed form, by symmetry of the two inputs
    alpha, _ = statedep.outputs(e)
    assert abs(np.vdot(alpha, np.kron(ka, ka))) ** 2 == pytest.approx(f, abs=1e-12)
    for t in (0.0, QP):
        e = TwoStateEnsemble(t)
        assert statedep.global_fidelity_opt(e) == pytest.approx(1)
        assert statedep.global_fidelity(e, *statedep.outputs(e)) == pytest.approx(1)


def test_geometry():
    g = statedep.geometry(TwoStateEnsemble(0.0))
    assert (g.phi, g.gamma, g.delta) == pytest.approx((np.pi / 2, np.pi / 2, 0))
    g = statedep.geometry(TwoStateEnsemble(QP))
    assert (g.phi, g.gamma, g.delta) == pytest.approx((0, 0, 0), abs=1e-7)


@given(thetas)
def test_geometric_form_matches_closed_form(t):
    e = TwoStateEnsemble(t)
    g = statedep.geometry(e)
    assert statedep.geometric_fidelity(g.phi, g.gamma, g.delta) == pytest.approx(
        statedep.global_fidelity_opt(e), abs=1e-12
    )


@given(thetas, st.floats(-0.5, 0.5))
def test_delta_choice_is_optimal(t, shift):
    g = statedep.geometry(TwoStateEnsemble(t))
    best = statedep.geometric_fidelity(g.phi, g.gamma, g.delta)
    assert statedep.geometric_fidelity(g.phi, g.gamma, g.delta + shift) <= best + 1e-12


def test_local_fidelity_1():
    assert statedep.local_fidelity_1(0.0) == pytest.approx(1)
    assert statedep.local_fidelity_1(1.0) == pytest.approx(1)
    assert statedep.local_fidelity_1(0.5) == pytest.approx(0.985410197, abs=1e-9)


@given(thetas)
def test_local_fidelity_1_matches_clone(t):
    e = TwoStateEnsemble(t)
    ka, _ = statedep.input_states(e)
    _, rho = statedep.apply(e, "a")
    assert qmath.fidelity_pure(rho, ka) == pytest.approx(statedep.local_fidelity_1(e.overlap), abs=1e-12)


@given(thetas)
def test_bloch_modulus_matches_clone(t):
    e = TwoStateEnsemble(t)
    _, rho = statedep.apply(e, "a")
    s = qmath.bloch_from_density(rho)
    assert np.linalg.norm(s) == pytest.approx(statedep.bloch_modulus(e), abs=1e-12)
    assert statedep.bloch_modulus(e) > 2 / 3


def test_bloch_endpoints():
    e = TwoStateEnsemble(0.0)
    assert statedep.bloch_modulus(e) == pytest.approx(1)
    assert statedep.rotation_angle(e) == pytest.approx(0, abs=1e-7)
    assert statedep.bloch_modulus(TwoStateEnsemble(QP)) == pytest.approx(1)


@given(st.floats(1e-3, QP - 1e-3))
def test_rotation_angle_matches_clone(t):
    e = TwoStateEnsemble(t)
    ka, _ = statedep.input_states(e)
    s_in = qmath.bloch_from_density(qmath.projector(ka))
    _, rho = statedep.apply(e, "a")
    s = qmath.bloch_from_density(rho)
    angle = np.arccos(np.clip(s @ s_in / np.linalg.norm(s), -1, 1))
    assert abs(statedep.rotation_angle(e)) == pytest.approx(angle, abs=1e-6)
