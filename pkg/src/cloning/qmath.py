"""Small-dimension qubit linear algebra.

States are 1-D complex numpy arrays, operators are 2-D complex arrays.
Qubit ordering is big-endian: subsystem 0 is the most significant index,
so |q0 q1 q2> sits at index 4*q0 + 2*q1 + q2.
"""

from __future__ import annotations

import numpy as np

HERMITIAN_TOL = 1e-12
TRACE_TOL = 1e-12
EIG_TOL = 1e-10
NORM_TOL = 1e-12

I2 = np.eye(2, dtype=complex)
SX = np.array([[0, 1], [1, 0]], dtype=complex)
SY = np.array([[0, -1j], [1j, 0]], dtype=complex)
SZ = np.array([[1, 0], [0, -1]], dtype=complex)
PAULIS = (SX, SY, SZ)

KET0 = np.array([1, 0], dtype=complex)
KET1 = np.array([0, 1], dtype=complex)


class DensityError(ValueError):
    """Raised when a matrix is not a valid density operator."""


def ket(*bits: int) -> np.ndarray:
    """Computational basis ket |b0 b1 ...>."""
    index = 0
    for b in bits:
        index = 2 * index + int(b)
    v = np.zeros(2 ** len(bits), dtype=complex)
    v[index] = 1.0
    return v


def tensor(*ops: np.ndarray) -> np.ndarray:
    out = np.asarray(ops[0], dtype=complex)
    for op in ops[1:]:
        out = np.kron(out, np.asarray(op, dtype=complex))
    return out


def normalize(psi: np.ndarray) -> np.ndarray:
    psi = np.asarray(psi, dtype=complex)
    n = np.linalg.norm(psi)
    if n == 0:
        raise ValueError("cannot normalize the zero vector")
    return psi / n


def state_vector(amplitudes) -> np.ndarray:
    """Validate a normalized state whose dimension is a power of two."""
    psi = np.asarray(amplitudes, dtype=complex).reshape(-1)
    dim = psi.size
    if dim < 2 or dim & (dim - 1):
        raise ValueError(f"state dimension {dim} is not a power of two")
    if abs(np.vdot(psi, psi).real - 1.0) > NORM_TOL:
        raise ValueError("state is not normalized")
    return psi


def projector(psi: np.ndarray) -> np.ndarray:
    psi = np.asarray(psi, dtype=complex)
    return np.outer(psi, psi.conj())


def density_operator(matrix, *, eig_tol: float = EIG_TOL) -> np.ndarray:
    """Return ``matrix`` as a validated (read-only) density operator.

    Rejects non-square, non-Hermitian, non-unit-trace or negative input.
    """
    rho = np.array(matrix, dtype=complex)
    if rho.ndim != 2 or rho.shape[0] != rho.shape[1]:
        raise DensityError(f"density operator must be square, got {rho.shape}")
    dim = rho.shape[0]
    if dim < 2 or dim & (dim - 1):
        raise DensityError(f"dimension {dim} is not a power of two")
    if np.max(np.abs(rho - rho.conj().T)) > HERMITIAN_TOL:
        raise DensityError("matrix is not Hermitian")
    if abs(np.trace(rho).real - 1.0) > TRACE_TOL:
        raise DensityError(f"trace {np.trace(rho).real!r} differs from 1")
    if np.linalg.eigvalsh(rho).min() < -eig_tol:
        raise DensityError("matrix has a negative eigenvalue")
    rho.setflags(write=False)
    return rho


def partial_trace(rho: np.ndarray, keep, dims) -> np.ndarray:
    """Reduce ``rho`` onto the subsystems listed in ``keep``.

    ``dims`` gives the dimension of each subsystem in order. The kept
    subsystems appear in the result in their original order. Works for
    unnormalized operators too (trace is preserved, not forced to 1).
    """
    rho = np.asarray(rho, dtype=complex)
    dims = [int(d) for d in dims]
    keep = sorted({int(k) for k in np.atleast_1d(keep)})
    n = len(dims)
    if rho.shape != (int(np.prod(dims)),) * 2:
        raise ValueError(f"dims {dims} do not match operator shape {rho.shape}")
    if not keep or keep[0] < 0 or keep[-1] >= n:
        raise ValueError(f"keep={keep} is not a nonempty subset of range({n})")

    t = rho.reshape(dims + dims)
    # einsum labels: row index i, column index i+n; traced pairs share a label
    row = list(range(n))
    col = [i + n if i in keep else i for i in range(n)]
    out = [i for i in keep] + [i + n for i in keep]
    reduced = np.einsum(t, row + col, out)
    d = int(np.prod([dims[k] for k in keep]))
    return reduced.reshape(d, d)


def reduced_from_state(psi: np.ndarray, keep, dims) -> np.ndarray:
    """Marginal of a pure (possibly unnormalized) state without forming |psi><psi|."""
    psi = np.asarray(psi, dtype=complex)
    dims = [int(d) for d in dims]
    keep = sorted({int(k) for k in np.atleast_1d(keep)})
    traced = [i for i in range(len(dims)) if i not in keep]
    t = np.transpose(psi.reshape(dims), keep + traced)
    d = int(np.prod([dims[k] for k in keep]))
    m = t.reshape(d, -1)
    return m @ m.conj().T


def bloch_from_density(rho: np.ndarray) -> np.ndarray:
    rho = np.asarray(rho, dtype=complex)
    if rho.shape != (2, 2):
        raise ValueError("Bloch vectors are defined for single qubits only")
    return np.array([np.trace(rho @ s).real for s in PAULIS])


def density_from_bloch(s) -> np.ndarray:
    s = np.asarray(s, dtype=float)
    if s.shape != (3,):
        raise ValueError("Bloch vector must have three components")
    if np.linalg.norm(s) > 1 + 1e-12:
        raise DensityError(f"Bloch vector norm {np.linalg.norm(s):.6g} exceeds 1")
    return 0.5 * (I2 + s[0] * SX + s[1] * SY + s[2] * SZ)


def pure_from_bloch(s) -> np.ndarray:
    """Pure qubit ket with unit Bloch vector ``s`` (global phase: first amplitude real)."""
    s = np.asarray(s, dtype=float)
    n = np.linalg.norm(s)
    if abs(n - 1) > 1e-9:
        raise ValueError(f"pure states need a unit Bloch vector, got norm {n:.6g}")
    theta = np.arccos(np.clip(s[2] / n, -1.0, 1.0))
    phi = np.arctan2(s[1], s[0])
    return np.array([np.cos(theta / 2), np.exp(1j * phi) * np.sin(theta / 2)])


def fidelity_pure(rho: np.ndarray, psi: np.ndarray) -> float:
    """<psi|rho|psi>."""
    psi = np.asarray(psi, dtype=complex)
    return float(np.vdot(psi, np.asarray(rho) @ psi).real)


def trace_distance(rho: np.ndarray, sigma: np.ndarray) -> float:
    diff = np.asarray(rho, dtype=complex) - np.asarray(sigma, dtype=complex)
    if diff.ndim != 2:
        raise ValueError("trace distance needs two matrices of equal shape")
    return float(0.5 * np.linalg.svd(diff, compute_uv=False).sum())


def random_pure_qubit(rng: np.random.Generator) -> np.ndarray:
    """Haar-random qubit from a complex Gaussian vector."""
    v = rng.normal(size=2) + 1j * rng.normal(size=2)
    return v / np.linalg.norm(v)


def random_density(rng: np.random.Generator, dim: int = 2) -> np.ndarray:
    """Random full-rank density operator (Ginibre ensemble)."""
    g = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    rho = g @ g.conj().T
    return rho / np.trace(rho).real


def is_unitary(u: np.ndarray, tol: float = 1e-12) -> bool:
    u = np.asarray(u)
    return bool(np.max(np.abs(u.conj().T @ u - np.eye(u.shape[1]))) < tol)
