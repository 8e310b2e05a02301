"""Eavesdropping interactions on a two-state protocol and the cloners they induce.

The probe is a single qubit. The interaction family has two angles
(alpha, phi); the sender's ensemble is fixed by theta, S = sin 2 theta.
rho_E is the eavesdropper's probe state, rho_A the receiver's qubit.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import qmath
from .statedep import TwoStateEnsemble, input_states, local_fidelity_1


@dataclass(frozen=True)
class EaveInteraction:
    alpha: float
    phi: float
    theta: float

    @property
    def overlap(self) -> float:
        return float(np.sin(2 * self.theta))


def _trig(theta: float, sent: str) -> tuple[float, float]:
    c, s = np.cos(theta), np.sin(theta)
    if sent == "a":
        return c, s
    if sent == "b":
        return s, c
    raise ValueError("sent must be 'a' or 'b'")


def probe_density(i: EaveInteraction, sent: str = "a") -> np.ndarray:
    c, s = _trig(i.theta, sent)
    cos2t = c * c - s * s
    e00 = 0.5 * (1 + cos2t * np.cos(2 * i.phi))
    e11 = 0.5 * (1 - cos2t * np.cos(2 * i.phi))
    e01 = 0.25 * (
        (c - s) ** 2 * np.sin(2 * (i.phi - i.alpha)) + (c + s) ** 2 * np.sin(2 * (i.phi + i.alpha))
    )
    return qmath.density_operator([[e00, e01], [e01, e11]])


def receiver_density(i: EaveInteraction, sent: str = "a") -> np.ndarray:
    c, s = _trig(i.theta, sent)
    ca2, sa2 = np.cos(i.alpha) ** 2, np.sin(i.alpha) ** 2
    r00 = c * c * ca2 + s * s * sa2
    r11 = s * s * ca2 + c * c * sa2
    r01 = c * s * np.sin(2 * i.phi) * np.cos(2 * i.alpha) + 0.5 * np.cos(2 * i.phi) * np.sin(
        2 * i.alpha
    )
    return qmath.density_operator([[r00, r01], [r01, r11]])


def eave_fidelity(i: EaveInteraction) -> float:
    S = i.overlap
    a, p = i.alpha, i.phi
    return float(
        np.cos(a) ** 2
        + 0.5 * S * np.cos(2 * p) * np.sin(2 * a)
        - 0.5 * S**2 * (1 - np.sin(2 * p)) * np.cos(2 * a)
    )


def receiver_fidelity(i: EaveInteraction, sent: str = "a") -> float:
    """<s|rho_A_s|s> from the matrix elements (independent of the closed form)."""
    ka, kb = input_states(TwoStateEnsemble(i.theta))
    return qmath.fidelity_pure(receiver_density(i, sent), ka if sent == "a" else kb)


def optimal_alpha(phi: float, S: float) -> float:
    """Disturbance angle tied to ``phi`` by the optimal-tradeoff condition."""
    num = S * np.cos(2 * phi)
    den = 1 - S**2 * (1 - np.sin(2 * phi))
    if abs(num) < 1e-15 and abs(den) < 1e-15:
        raise ValueError("tradeoff condition is indeterminate at this (phi, S)")
    return float(0.5 * np.arctan2(num, den))


def cloner_x(S: float) -> float:
    """Root in [0, 1] of (S + S^2) x^2 + (1 - S^2) x - S = 0, where x = sin 2 phi."""
    if not 0.0 < S <= 1.0:
        raise ValueError(f"S={S} must lie in (0, 1]")
    p = 1 - S**2
    # rationalized quadratic formula: no cancellation for small S
    return float(2 * S / (p + np.sqrt(p * p + 4 * S * S * (1 + S))))


def cloner_angles(S: float) -> tuple[float, float]:
    """(alpha, phi) at which optimal eavesdropping is also a symmetric cloner."""
    phi = 0.5 * float(np.arcsin(cloner_x(S)))
    return phi, phi


def local_fidelity_2(S: float) -> float:
    S = float(S)
    inner = (1 - 2 * S**2 + 2 * S**3 + S**4) + (1 - S**2) * np.sqrt(
        (1 + S) * (1 - S + 3 * S**2 + S**3)
    )
    return float(0.5 + np.sqrt(2) / 4 * np.sqrt(inner))


def local_fidelity_2_constructive(S: float) -> float:
    """F_l,2 from the matrix elements at the quadratic root."""
    if S == 0:
        return 1.0
    alpha, phi = cloner_angles(S)
    theta = 0.5 * float(np.arcsin(S))
    return receiver_fidelity(EaveInteraction(alpha, phi, theta))


@dataclass
class ClonerConditionReport:
    S: float
    alpha: float
    phi: float
    tradeoff_residual: float  # |alpha - optimal_alpha(phi, S)|
    max_mismatch: float  # max |rho_E - rho_A| over elements and both inputs
    perturbed_mismatch: float

    @property
    def sharp(self) -> bool:
        return self.max_mismatch < 1e-10 and self.perturbed_mismatch > 1e-4


def _mismatch(i: EaveInteraction) -> float:
    return max(
        float(np.max(np.abs(probe_density(i, s) - receiver_density(i, s)))) for s in ("a", "b")
    )


def cloner_condition_check(S: float, perturbation: float = 0.05) -> ClonerConditionReport:
    alpha, phi = cloner_angles(S)
    theta = 0.5 * float(np.arcsin(S))
    at_root = EaveInteraction(alpha, phi, theta)
    off = EaveInteraction(alpha, phi + perturbation, theta)
    return ClonerConditionReport(
        S=S,
        alpha=alpha,
        phi=phi,
        tradeoff_residual=abs(alpha - optimal_alpha(phi, S)),
        max_mismatch=_mismatch(at_root),
        perturbed_mismatch=_mismatch(off),
    )


def symmetric_fidelity(S: float, phi) -> np.ndarray:
    """Receiver fidelity along the diagonal alpha = phi of the interaction family."""
    phi = np.asarray(phi, dtype=float)
    return 0.5 + 0.5 * (1 + S) * ((1 - S) * np.cos(2 * phi) + 0.5 * S * np.sin(4 * phi))


def sin2phi_opt(S: float) -> float:
    if not 0.0 <= S <= 1.0:
        raise ValueError(f"S={S} outside [0, 1]")
    r = np.sqrt(1 - 2 * S + 9 * S**2)
    # (-1 + S + r) / (4S) with the difference rationalized
    return float(2 * S / (r + 1 - S))


def local_fidelity_3(S: float) -> float:
    """Best local fidelity reachable on the alpha = phi diagonal.

    Algebraically identical to the usual closed form; the small-S
    cancellations in sqrt(-1 + 2S + 3S^2 + (1-S) r) and the 1/S prefactor
    are removed by writing r - (1 - S) = 8 S^2 / (r + 1 - S).
    """
    S = float(S)
    if not 0.0 <= S <= 1.0:
        raise ValueError(f"S={S} outside [0, 1]")
    r = np.sqrt(1 - 2 * S + 9 * S**2)
    eps_over_s2 = 8.0 / (r + 1 - S)
    return float(
        0.5 + np.sqrt(2) / 32 * (1 + S) * (3 - 3 * S + r) * np.sqrt(4 + (1 - S) * eps_over_s2)
    )


def local_fidelity_3_printed(S: float) -> float:
    """The closed form as usually printed; loses accuracy for S below ~1e-3."""
    r = np.sqrt(1 - 2 * S + 9 * S**2)
    return float(
        0.5
        + np.sqrt(2) / (32 * S) * (1 + S) * (3 - 3 * S + r) * np.sqrt(-1 + 2 * S + 3 * S**2 + (1 - S) * r)
    )


def fidelity_chain(S) -> np.ndarray:
    """Rows (F_l,1, F_l,2, F_l,3) for each overlap in ``S``."""
    S = np.atleast_1d(np.asarray(S, dtype=float))
    return np.array(
        [[float(local_fidelity_1(s)), local_fidelity_2(s), local_fidelity_3(s)] for s in S]
    )
