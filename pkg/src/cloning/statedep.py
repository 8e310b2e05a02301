"""Optimal global-fidelity cloner for a two-state ensemble.

The ensemble is |a> = cos t|0> + sin t|1>, |b> = sin t|0> + cos t|1>
with t in [0, pi/4] and overlap S = sin 2t. No ancilla is used: the
cloner acts on (input, blank) only.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import qmath

QUARTER_PI = np.pi / 4


@dataclass(frozen=True)
class TwoStateEnsemble:
    theta: float

    def __post_init__(self):
        if not (0.0 <= self.theta <= QUARTER_PI + 1e-15):
            raise ValueError(f"theta={self.theta} outside [0, pi/4]")

    @property
    def overlap(self) -> float:
        return float(np.sin(2 * self.theta))

    @classmethod
    def from_overlap(cls, S: float) -> "TwoStateEnsemble":
        if not 0.0 <= S <= 1.0:
            raise ValueError(f"overlap S={S} outside [0, 1]")
        return cls(float(np.arcsin(S) / 2))


@dataclass(frozen=True)
class StateDepCoeffs:
    a: float
    b: float
    c: float
    P: float
    Q: float

    def columns(self) -> tuple[np.ndarray, np.ndarray]:
        """U|00> and U|10> in the basis |00>, |01>, |10>, |11>."""
        return (
            np.array([self.a, self.b, self.b, self.c], dtype=complex),
            np.array([self.c, self.b, self.b, self.a], dtype=complex),
        )


@dataclass(frozen=True)
class CloneGeometry:
    phi: float  # angle between |aa> and |bb>
    gamma: float  # angle between |alpha> and |beta>
    delta: float  # angle between |aa> and |alpha>


def input_states(e: TwoStateEnsemble) -> tuple[np.ndarray, np.ndarray]:
    c, s = np.cos(e.theta), np.sin(e.theta)
    return np.array([c, s], dtype=complex), np.array([s, c], dtype=complex)


def _stable_abc(theta: float) -> tuple[float, float, float]:
    # the printed coefficients share a factor (cos t - sin t)/cos 2t = 1/(cos t + sin t);
    # cancelling it removes the 0/0 at t = pi/4 and Q*(cos t + sin t) = 1/2 exactly
    s2 = np.sin(2 * theta)
    w = np.cos(theta) + np.sin(theta)
    P = 0.5 * np.sqrt(1 + s2) / np.sqrt(1 + s2**2)
    return P / w + 0.5, P * s2 / w, P / w - 0.5


def coeffs(e: TwoStateEnsemble) -> StateDepCoeffs:
    t = e.theta
    if np.cos(2 * t) <= 0.0 or t >= QUARTER_PI:
        raise ValueError("theta = pi/4 is a degenerate ensemble (identical states)")
    s2 = np.sin(2 * t)
    P = 0.5 * np.sqrt(1 + s2) / np.sqrt(1 + s2**2)
    Q = 0.5 * np.sqrt(1 - s2) / np.cos(2 * t)
    a, b, c = _stable_abc(t)
    return StateDepCoeffs(a, b, c, P, Q)


def printed_coeffs(theta: float) -> tuple[float, float, float]:
    """a, b, c exactly as the closed forms are usually written (division by cos 2t)."""
    c_, s_ = np.cos(theta), np.sin(theta)
    s2, c2 = np.sin(2 * theta), np.cos(2 * theta)
    P = 0.5 * np.sqrt(1 + s2) / np.sqrt(1 + s2**2)
    Q = 0.5 * np.sqrt(1 - s2) / c2
    a = (c_ * (P + Q * c2) - s_ * (P - Q * c2)) / c2
    b = P * s2 * (c_ - s_) / c2
    c = (c_ * (P - Q * c2) - s_ * (P + Q * c2)) / c2
    return a, b, c


def isometry(e: TwoStateEnsemble) -> np.ndarray:
    """4x2 map from the input qubit into (clone 1, clone 2)."""
    a, b, c = _stable_abc(e.theta)
    return np.array([[a, c], [b, b], [b, b], [c, a]], dtype=complex)


def outputs(e: TwoStateEnsemble) -> tuple[np.ndarray, np.ndarray]:
    """(|alpha>, |beta>) = (U|a>|0>, U|b>|0>)."""
    ka, kb = input_states(e)
    if e.theta >= QUARTER_PI:
        # identical inputs are cloned perfectly
        return np.kron(ka, ka), np.kron(kb, kb)
    v = isometry(e)
    return v @ ka, v @ kb


def apply(e: TwoStateEnsemble, which: str = "a") -> tuple[np.ndarray, np.ndarray]:
    """Joint two-clone output and the clone marginal for input ``which``."""
    if which not in ("a", "b"):
        raise ValueError("which must be 'a' or 'b'")
    alpha, beta = outputs(e)
    joint = alpha if which == "a" else beta
    rho1 = qmath.reduced_from_state(joint, [0], (2, 2))
    rho2 = qmath.reduced_from_state(joint, [1], (2, 2))
    if np.max(np.abs(rho1 - rho2)) > 1e-12:
        raise AssertionError("clone marginals differ; coefficients are not symmetric")
    return joint, rho1


def global_fidelity(e: TwoStateEnsemble, alpha: np.ndarray, beta: np.ndarray) -> float:
    ka, kb = input_states(e)
    return 0.5 * (
        abs(np.vdot(alpha, np.kron(ka, ka))) ** 2 + abs(np.vdot(beta, np.kron(kb, kb))) ** 2
    )


def global_fidelity_opt(e: TwoStateEnsemble) -> float:
    s2 = np.sin(2 * e.theta)
    c2 = np.cos(2 * e.theta)
    return 0.25 * (np.sqrt(1 + s2**2) * np.sqrt(1 + s2) + c2 * np.sqrt(1 - s2)) ** 2


def geometry(e: TwoStateEnsemble) -> CloneGeometry:
    S = e.overlap
    phi = float(np.arccos(S**2))
    gamma = float(np.arccos(S))
    return CloneGeometry(phi, gamma, 0.5 * (phi - gamma))


def geometric_fidelity(phi: float, gamma: float, delta: float) -> float:
    """Global fidelity in terms of the three angles between the four states."""
    return 0.5 * (np.cos(delta) ** 2 + np.cos(phi - gamma - delta) ** 2)


def local_fidelity_1(S: float) -> float:
    S = np.asarray(S, dtype=float)
    return 0.5 * (1 + (1 - S**2) / np.sqrt(1 + S**2) + S**2 * (1 + S) / (1 + S**2))


def bloch_modulus(e: TwoStateEnsemble) -> float:
    S = e.overlap
    c2 = np.cos(2 * e.theta)
    return float(np.sqrt(S**2 * (1 + S) ** 2 / (1 + S**2) ** 2 + c2**2 / (1 + S**2)))


def rotation_angle(e: TwoStateEnsemble) -> float:
    """Angle by which the clone's Bloch vector is turned away from the input's."""
    S = e.overlap
    c2 = np.cos(2 * e.theta)
    arg = c2 / np.sqrt(1 + S**2) / bloch_modulus(e)
    return float(np.arccos(np.clip(arg, -1.0, 1.0)) - 2 * e.theta)
