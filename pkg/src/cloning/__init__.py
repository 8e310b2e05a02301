"""Quantum cloning: universal, teleportation-based and state-dependent cloners,
eavesdropping-induced cloners, and the depolarizing-channel capacity bound."""

from . import capacity, eavesdrop, optimize, qmath, statedep, teleport, universal, verify

__all__ = ["capacity", "eavesdrop", "optimize", "qmath", "statedep", "teleport", "universal", "verify"]
