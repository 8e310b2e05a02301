import numpy as np
import pytest

from cloning import qmath, teleport, universal
from cloning.qmath import I2, KET0, KET1, SX
from cloning.teleport import BellOutcome


def test_resource_state():
    psi = teleport.psi_clone_state()
    assert psi[0b100] == pytest.approx(np.sqrt(2 / 3))
    assert np.linalg.norm(psi) == pytest.approx(1, abs=1e-15)


def test_corrections():
    np.testing.assert_array_equal(teleport.correction(BellOutcome.PSI_MINUS), I2)
    np.testing.assert_array_equal(teleport.correction(BellOutcome.PHI_MINUS), SX)
    for o in teleport.OUTCOMES:
        assert qmath.is_unitary(teleport.correction(o))


def test_bell_basis_orthonormal():
    m = np.column_stack([o.ket for o in teleport.OUTCOMES])
    np.testing.assert_allclose(m.conj().T @ m, np.eye(4), atol=1e-15)


def test_singlet_teleport_uniform_outcomes(rng):
    psi = qmath.random_pure_qubit(rng)
    joint = np.kron(psi, teleport.singlet_resource())
    probs = teleport.outcome_probabilities(joint)
    for p in probs.values():
        assert p == pytest.approx(0.25, abs=1e-14)
    # with the singlet the corrected Bob state is the input itself
    bob, _ = teleport.corrected_branches(psi, teleport.singlet_resource())
    for o in teleport.OUTCOMES:
        assert qmath.trace_distance(bob[o] / 0.25, qmath.projector(psi)) < 1e-14


def test_clone_phi_group_probability():
    joint = np.kron(KET0, teleport.psi_clone_state())
    probs = teleport.outcome_probabilities(joint)
    assert probs[BellOutcome.PHI_PLUS] + probs[BellOutcome.PHI_MINUS] == pytest.approx(1 / 3)


def test_bell_measure_residual_normalized(rng):
    joint = np.kron(KET1, teleport.psi_clone_state())
    outcome, residual, p = teleport.bell_measure(joint, rng)
    assert outcome in teleport.OUTCOMES
    assert np.linalg.norm(residual) == pytest.approx(1)
    assert p > 0


def test_bell_measure_requires_four_qubits(rng):
    with pytest.raises(ValueError):
        teleport.bell_measure(np.ones(8) / np.sqrt(8), rng)


def test_run_exact_average_and_sampling():
    run = teleport.run_teleport_clone(KET0, 100_000, np.random.default_rng(5))
    np.testing.assert_allclose(run.bob_average, np.diag([5 / 6, 1 / 6]), atol=1e-15)
    np.testing.assert_allclose(run.charlie_average, np.diag([5 / 6, 1 / 6]), atol=1e-15)
    p = 1 / 3
    assert abs(run.group_frequency("Phi") - p) < 3 * np.sqrt(p * (1 - p) / 1e5)
    assert run.shots == 100_000
    assert qmath.trace_distance(run.bob_empirical, run.bob_average) < 0.01


def test_run_is_seed_deterministic():
    a = teleport.run_teleport_clone(KET0, 1000, np.random.default_rng(9))
    b = teleport.run_teleport_clone(KET0, 1000, np.random.default_rng(9))
    assert a.counts == b.counts


def test_run_rejects_zero_shots(rng):
    with pytest.raises(ValueError):
        teleport.run_teleport_clone(KET0, 0, rng)


def test_kraus_operators():
    ch = teleport.kraus_channel()
    a_phi1 = ch.groups["Phi"][0]
    np.testing.assert_allclose(a_phi1, np.sqrt(2 / 3) * np.array([[0.5, 0], [0, 1]]), atol=1e-16)
    assert ch.completeness_error() < 1e-14
    e_phi = sum(a.conj().T @ a for a in ch.groups["Phi"])
    np.testing.assert_allclose(e_phi, np.diag([1 / 3, 2 / 3]), atol=1e-16)


def test_channel_apply():
    ch = teleport.kraus_channel()
    rho = qmath.projector(KET0)
    np.testing.assert_allclose(teleport.channel_apply(ch, rho), np.diag([5 / 6, 1 / 6]), atol=1e-15)
    assert np.trace(teleport.channel_apply(ch, rho, "Phi")).real == pytest.approx(1 / 3)
    with pytest.raises(KeyError):
        teleport.channel_apply(ch, rho, "Omega")


def test_conditional_bloch_matches_matrices(rng):
    ch = teleport.kraus_channel()
    for _ in range(20):
        rho = qmath.random_density(rng)
        s = qmath.bloch_from_density(rho)
        for g in ch.groups:
            out = teleport.channel_apply(ch, rho, g)
            prob, s_o = teleport.conditional_bloch(ch, g, s)
            assert prob == pytest.approx(np.trace(out).real, abs=1e-14)
            np.testing.assert_allclose(prob * qmath.density_from_bloch(s_o), out, atol=1e-14)


@pytest.mark.parametrize(
    "psi, target",
    [
        (KET0, np.diag([5 / 6, 1 / 6])),
        (KET1, np.diag([1 / 6, 5 / 6])),
        (np.array([1, 1j]) / np.sqrt(2), qmath.density_from_bloch([0, 2 / 3, 0])),
    ],
)
def test_three_paths_agree(psi, target):
    bob, _ = teleport.corrected_branches(psi)
    sim = sum(bob.values())
    kraus = teleport.channel_apply(teleport.kraus_channel(), qmath.projector(psi))
    uni = universal.clone(universal.bh_isometry(), psi)[0]
    for rho in (sim, kraus, uni):
        np.testing.assert_allclose(rho, target, atol=1e-15)


def test_equivalence_report():
    rep = teleport.verify_channel_equivalence(100, seed=2)
    assert rep.worst < 1e-12 and rep.max_bob_vs_charlie < 1e-12
