"""The optimal symmetric, isotropic 1->2 qubit cloner.

A cloner is stored as an 8x2 isometry V mapping the input qubit into
(clone 1) x (clone 2) x (ancilla qubit), i.e. V|psi> = U|psi>|0>|X>.
Only the action on the input subspace matters, so no unitary completion
is carried around.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import qmath
from .qmath import KET0, KET1

DIMS = (2, 2, 2)
ETA_OPT = 2.0 / 3.0
FIDELITY_OPT = 5.0 / 6.0

# components of the input Bloch vector smaller than this carry no ratio information
_RATIO_TOL = 1e-10


class IsotropyError(ValueError):
    """Bloch-vector components shrink by different ratios."""


@dataclass(frozen=True)
class UniversalClonerConfig:
    delta_a: float = 0.0
    delta_a_tilde: float = 0.0
    ancilla: np.ndarray = field(default_factory=lambda: KET0.copy())
    ancilla_perp: np.ndarray = field(default_factory=lambda: KET1.copy())

    def __post_init__(self):
        a = np.asarray(self.ancilla, dtype=complex)
        ap = np.asarray(self.ancilla_perp, dtype=complex)
        if a.shape != (2,) or ap.shape != (2,):
            raise ValueError("ancilla states must be 2-dimensional")
        if abs(np.linalg.norm(a) - 1) > 1e-12 or abs(np.linalg.norm(ap) - 1) > 1e-12:
            raise ValueError("ancilla states must be normalized")
        if abs(np.vdot(a, ap)) > 1e-12:
            raise ValueError("ancilla states must be orthogonal")
        object.__setattr__(self, "ancilla", a)
        object.__setattr__(self, "ancilla_perp", ap)


@dataclass(frozen=True)
class ClonerIsometry:
    matrix: np.ndarray  # shape (8, 2)

    def __post_init__(self):
        m = np.array(self.matrix, dtype=complex)
        if m.shape != (8, 2):
            raise ValueError(f"cloner isometry must be 8x2, got {m.shape}")
        m.setflags(write=False)
        object.__setattr__(self, "matrix", m)

    def blocks(self, column: int) -> np.ndarray:
        """Unnormalized ancilla vectors indexed by the two clone bits.

        ``blocks(0)[q1, q2]`` is coefficient * ancilla ket multiplying
        |q1 q2> in U|0>|0>|X>; e.g. ``blocks(0)[0, 0] = a|A>``.
        """
        return self.matrix[:, column].reshape(2, 2, 2)

    @property
    def coefficients(self) -> tuple[float, float, float]:
        """(|a|, |b_1|, |c|) read off the |0> column."""
        b = self.blocks(0)
        return (
            float(np.linalg.norm(b[0, 0])),
            float(np.linalg.norm(b[0, 1])),
            float(np.linalg.norm(b[1, 1])),
        )

    def is_isometry(self, tol: float = 1e-12) -> bool:
        return qmath.is_unitary(self.matrix, tol)


def build_optimal_isometry(cfg: UniversalClonerConfig | None = None) -> ClonerIsometry:
    cfg = cfg or UniversalClonerConfig()
    ea = np.exp(1j * cfg.delta_a)
    eat = np.exp(1j * cfg.delta_a_tilde)
    A, Ap = cfg.ancilla, cfg.ancilla_perp
    sym = qmath.ket(0, 1) + qmath.ket(1, 0)
    big, small = np.sqrt(2 / 3), np.sqrt(1 / 6)
    col0 = big * ea * np.kron(qmath.ket(0, 0), A) + small * eat * np.kron(sym, Ap)
    col1 = big * eat * np.kron(qmath.ket(1, 1), Ap) + small * ea * np.kron(sym, A)
    return ClonerIsometry(np.column_stack([col0, col1]))


def bh_isometry() -> ClonerIsometry:
    """The Buzek-Hillery member of the optimal family."""
    return build_optimal_isometry(UniversalClonerConfig())


def clone(iso: ClonerIsometry, psi: np.ndarray):
    """Run the cloner on a pure input.

    Returns ``(rho1, rho2, rho_ancilla, joint)``.
    """
    psi = qmath.state_vector(psi)
    if psi.shape != (2,):
        raise ValueError("cloner input must be a single qubit")
    joint = iso.matrix @ psi
    rho1 = qmath.reduced_from_state(joint, [0], DIMS)
    rho2 = qmath.reduced_from_state(joint, [1], DIMS)
    rho_anc = qmath.reduced_from_state(joint, [2], DIMS)
    return rho1, rho2, rho_anc, joint


def shrink_factor(iso: ClonerIsometry, psi: np.ndarray) -> float:
    """Common ratio s_out/s_in over both clones.

    Raises ``IsotropyError`` when a clone's Bloch vector is not a multiple
    of the input's, or when the two clones shrink by different ratios.
    """
    rho1, rho2, _, _ = clone(iso, psi)
    s_in = qmath.bloch_from_density(qmath.projector(psi))
    ratios = []
    for rho in (rho1, rho2):
        s_out = qmath.bloch_from_density(rho)
        r = float(s_out @ s_in)  # |s_in| = 1 for pure inputs
        if np.max(np.abs(s_out - r * s_in)) > _RATIO_TOL:
            raise IsotropyError(f"output Bloch vector {s_out} not parallel to input {s_in}")
        ratios.append(r)
    if abs(ratios[0] - ratios[1]) > _RATIO_TOL:
        raise IsotropyError(f"clone ratios disagree: {ratios}")
    return float(np.mean(ratios))


def local_fidelity(iso: ClonerIsometry, psi: np.ndarray) -> float:
    rho1, _, _, _ = clone(iso, psi)
    return qmath.fidelity_pure(rho1, psi)


def global_fidelity_universal(iso: ClonerIsometry, psi: np.ndarray) -> float:
    """Tr[(rho_psi x rho_psi) rho_12]."""
    _, _, _, joint = clone(iso, psi)
    rho12 = qmath.reduced_from_state(joint, [0, 1], DIMS)
    return qmath.fidelity_pure(rho12, np.kron(psi, psi))
