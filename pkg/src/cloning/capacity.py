"""Upper bound on the quantum capacity of the qubit depolarizing channel.

The channel shrinks Bloch vectors by eta. Optimal universal cloning forces
Q = 0 at eta = 2/3 (two receivers could otherwise both decode), and
monotonicity in eta extends this to eta <= 2/3.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

ETA_THRESHOLD = 2.0 / 3.0


@dataclass(frozen=True)
class CapacityBound:
    eta: float
    bound: float
    regime: str  # "zero" or "entropic"
    conditional_linear_bound: float | None = None

    @property
    def conditional_bound(self) -> float | None:
        """min(entropic, 3 eta - 2), valid only if Q is continuous in eta."""
        if self.conditional_linear_bound is None:
            return None
        return min(self.bound, self.conditional_linear_bound)


def binary_entropy(x: float) -> float:
    x = float(x)
    if not 0.0 <= x <= 1.0:
        raise ValueError(f"binary entropy argument {x} outside [0, 1]")
    if x in (0.0, 1.0):
        return 0.0
    return float(-x * np.log2(x) - (1 - x) * np.log2(1 - x))


def entropic_bound(eta: float) -> float:
    return 1.0 - binary_entropy(0.75 * eta + 0.25)


def q_upper_bound(eta: float, assume_continuity: bool = False) -> CapacityBound:
    eta = float(eta)
    if not 0.0 <= eta <= 1.0:
        raise ValueError(f"eta={eta} outside [0, 1]")
    if eta <= ETA_THRESHOLD:
        return CapacityBound(eta, 0.0, "zero", 0.0 if assume_continuity else None)
    linear = 3 * eta - 2 if assume_continuity else None
    return CapacityBound(eta, entropic_bound(eta), "entropic", linear)
