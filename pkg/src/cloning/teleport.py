"""Universal cloning by teleportation through a three-qubit shared state.

Register order for the explicit simulation is (input, Alice, Bob, Charlie).
Alice measures (input, Alice) in the Bell basis and broadcasts the outcome;
Bob and Charlie both apply the teleportation correction for that outcome.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

import numpy as np

from . import qmath, universal
from .qmath import I2, SX, SY, SZ

_R2 = np.sqrt(2.0)


class BellOutcome(enum.Enum):
    PHI_PLUS = "Phi+"
    PHI_MINUS = "Phi-"
    PSI_PLUS = "Psi+"
    PSI_MINUS = "Psi-"

    @property
    def group(self) -> str:
        return "Phi" if self in (BellOutcome.PHI_PLUS, BellOutcome.PHI_MINUS) else "Psi"

    @property
    def ket(self) -> np.ndarray:
        return _BELL[self]


OUTCOMES = tuple(BellOutcome)

_BELL = {
    BellOutcome.PHI_PLUS: (qmath.ket(0, 0) + qmath.ket(1, 1)) / _R2,
    BellOutcome.PHI_MINUS: (qmath.ket(0, 0) - qmath.ket(1, 1)) / _R2,
    BellOutcome.PSI_PLUS: (qmath.ket(0, 1) + qmath.ket(1, 0)) / _R2,
    BellOutcome.PSI_MINUS: (qmath.ket(0, 1) - qmath.ket(1, 0)) / _R2,
}

_CORRECTIONS = {
    BellOutcome.PSI_MINUS: I2,
    BellOutcome.PSI_PLUS: SZ,
    BellOutcome.PHI_MINUS: SX,
    BellOutcome.PHI_PLUS: SY,
}


def correction(outcome: BellOutcome) -> np.ndarray:
    return _CORRECTIONS[BellOutcome(outcome)].copy()


def psi_clone_state() -> np.ndarray:
    """Shared resource: first qubit Alice's, then Bob's, then Charlie's."""
    return (
        np.sqrt(2 / 3) * qmath.ket(1, 0, 0)
        - np.sqrt(1 / 6) * qmath.ket(0, 1, 0)
        - np.sqrt(1 / 6) * qmath.ket(0, 0, 1)
    )


def singlet_resource() -> np.ndarray:
    """Ordinary teleportation resource |Psi->_{Alice,Bob} with Charlie idle in |0>."""
    return np.kron(_BELL[BellOutcome.PSI_MINUS], qmath.KET0)


def born_branches(joint: np.ndarray) -> dict[BellOutcome, np.ndarray]:
    """Unnormalized (Bob, Charlie) state left behind by each Bell outcome."""
    j = np.asarray(joint, dtype=complex)
    if j.shape != (16,):
        raise ValueError("joint state must span four qubits")
    m = j.reshape(4, 4)  # rows: measured pair, columns: (Bob, Charlie)
    return {o: o.ket.conj() @ m for o in OUTCOMES}


def outcome_probabilities(joint: np.ndarray) -> dict[BellOutcome, float]:
    return {o: float(np.vdot(r, r).real) for o, r in born_branches(joint).items()}


def _sample(probs: np.ndarray, rng: np.random.Generator, size=None):
    cdf = np.cumsum(probs)
    cdf /= cdf[-1]
    return np.searchsorted(cdf, rng.random(size), side="right")


def bell_measure(joint: np.ndarray, rng: np.random.Generator):
    """Sample one Bell measurement on the first two of four qubits.

    Returns ``(outcome, residual, probability)`` with ``residual`` the
    normalized, uncorrected (Bob, Charlie) state.
    """
    branches = born_branches(joint)
    probs = np.array([np.vdot(branches[o], branches[o]).real for o in OUTCOMES])
    k = int(_sample(probs, rng))
    outcome = OUTCOMES[k]
    return outcome, qmath.normalize(branches[outcome]), float(probs[k])


@dataclass
class TeleportRun:
    probabilities: dict[BellOutcome, float]
    counts: dict[BellOutcome, int]
    # unnormalized, post-correction: trace equals the outcome probability
    bob_conditional: dict[BellOutcome, np.ndarray] = field(repr=False)
    charlie_conditional: dict[BellOutcome, np.ndarray] = field(repr=False)
    bob_average: np.ndarray = field(repr=False)
    charlie_average: np.ndarray = field(repr=False)
    bob_empirical: np.ndarray = field(repr=False)

    @property
    def shots(self) -> int:
        return sum(self.counts.values())

    def group_frequency(self, group: str) -> float:
        return sum(n for o, n in self.counts.items() if o.group == group) / self.shots

    def group_probability(self, group: str) -> float:
        return sum(p for o, p in self.probabilities.items() if o.group == group)


def corrected_branches(psi: np.ndarray, resource: np.ndarray | None = None):
    """Per-outcome (Bob, Charlie) unnormalized density matrices after correction."""
    psi = qmath.state_vector(psi)
    resource = psi_clone_state() if resource is None else resource
    joint = np.kron(psi, resource)
    bob, charlie = {}, {}
    for o, r in born_branches(joint).items():
        c = correction(o)
        r = np.kron(c, c) @ r
        bob[o] = qmath.reduced_from_state(r, [0], (2, 2))
        charlie[o] = qmath.reduced_from_state(r, [1], (2, 2))
    return bob, charlie


def run_teleport_clone(psi: np.ndarray, shots: int, rng: np.random.Generator) -> TeleportRun:
    if shots < 1:
        raise ValueError("shots must be at least 1")
    bob, charlie = corrected_branches(psi)
    probs = {o: float(np.trace(bob[o]).real) for o in OUTCOMES}
    p = np.array([probs[o] for o in OUTCOMES])
    draws = np.bincount(_sample(p, rng, shots), minlength=4)
    counts = {o: int(n) for o, n in zip(OUTCOMES, draws)}
    empirical = sum(
        (counts[o] / shots) * (bob[o] / probs[o]) for o in OUTCOMES if counts[o]
    )
    return TeleportRun(
        probabilities=probs,
        counts=counts,
        bob_conditional=bob,
        charlie_conditional=charlie,
        bob_average=sum(bob.values()),
        charlie_average=sum(charlie.values()),
        bob_empirical=empirical,
    )


@dataclass(frozen=True)
class KrausChannel:
    groups: dict[str, tuple[np.ndarray, ...]]
    povm: dict[str, np.ndarray]

    def operators(self):
        for ops in self.groups.values():
            yield from ops

    def completeness_error(self) -> float:
        total = sum(a.conj().T @ a for a in self.operators())
        return float(np.max(np.abs(total - np.eye(2))))


def kraus_channel() -> KrausChannel:
    big, small = np.sqrt(2 / 3), np.sqrt(1 / 6)
    groups = {
        "Phi": (
            big * np.array([[0.5, 0], [0, 1]], dtype=complex),
            small * np.array([[0, 0], [1, 0]], dtype=complex),
        ),
        "Psi": (
            big * np.array([[1, 0], [0, 0.5]], dtype=complex),
            small * np.array([[0, 1], [0, 0]], dtype=complex),
        ),
    }
    povm = {
        "Phi": np.diag([1 / 3, 2 / 3]).astype(complex),
        "Psi": np.diag([2 / 3, 1 / 3]).astype(complex),
    }
    return KrausChannel(groups, povm)


def channel_apply(ch: KrausChannel, rho: np.ndarray, group: str | None = None) -> np.ndarray:
    """Total output, or the unnormalized output conditioned on ``group``."""
    rho = np.asarray(rho, dtype=complex)
    if rho.shape != (2, 2):
        raise ValueError("channel acts on single-qubit operators")
    if group is None:
        ops = list(ch.operators())
    elif group in ch.groups:
        ops = ch.groups[group]
    else:
        raise KeyError(f"unknown outcome group {group!r}")
    return sum(a @ rho @ a.conj().T for a in ops)


def outcome_probability_bloch(effect: np.ndarray, s) -> float:
    """Pr(i) = Tr(E_i)/2 + sum_a s_a Tr(E_i sigma_a)/2."""
    s = np.asarray(s, dtype=float)
    p = 0.5 * np.trace(effect).real
    p += 0.5 * sum(s[k] * np.trace(effect @ qmath.PAULIS[k]).real for k in range(3))
    return float(p)


def conditional_bloch(ch: KrausChannel, group: str, s) -> tuple[float, np.ndarray]:
    """(Pr(i), s_o) in the Bloch picture, with rho_o^i = Pr(i)(1 + s_o.sigma)/2."""
    s = np.asarray(s, dtype=float)
    ops = ch.groups[group]
    prob = outcome_probability_bloch(ch.povm[group], s)
    aa = sum(a @ a.conj().T for a in ops)
    weighted = np.empty(3)
    for beta, sb in enumerate(qmath.PAULIS):
        w = 0.5 * np.trace(aa @ sb).real
        for alpha, sa in enumerate(qmath.PAULIS):
            w += 0.5 * s[alpha] * np.trace(sum(a @ sa @ a.conj().T for a in ops) @ sb).real
        weighted[beta] = w
    return prob, weighted / prob


@dataclass
class EquivalenceReport:
    trials: int
    max_sim_vs_kraus: float
    max_sim_vs_universal: float
    max_kraus_vs_universal: float
    max_bob_vs_charlie: float

    @property
    def worst(self) -> float:
        return max(self.max_sim_vs_kraus, self.max_sim_vs_universal, self.max_kraus_vs_universal)


def verify_channel_equivalence(trials: int = 100, seed: int = 0) -> EquivalenceReport:
    """Compare explicit teleportation, the Kraus channel and the unitary cloner."""
    rng = np.random.default_rng(seed)
    ch = kraus_channel()
    iso = universal.bh_isometry()
    worst = np.zeros(4)
    for _ in range(trials):
        psi = qmath.random_pure_qubit(rng)
        bob, charlie = corrected_branches(psi)
        sim = sum(bob.values())
        kraus = channel_apply(ch, qmath.projector(psi))
        uni = universal.clone(iso, psi)[0]
        worst = np.maximum(
            worst,
            [
                qmath.trace_distance(sim, kraus),
                qmath.trace_distance(sim, uni),
                qmath.trace_distance(kraus, uni),
                qmath.trace_distance(sim, sum(charlie.values())),
            ],
        )
    return EquivalenceReport(trials, *map(float, worst))
