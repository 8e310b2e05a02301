"""Numerical re-derivation of the cloning optimality results.

Every search here maximizes a real quadratic form under real quadratic
equality constraints. The forms are recovered exactly by polarization
from plain Python evaluators, which gives cheap analytic gradients; the
constrained problem is then solved by an augmented Lagrangian with
geometric penalty escalation, from many random starts. Results are
re-checked afterwards by evaluators that do not share the penalty code.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass, field
from typing import Callable

import numpy as np
from scipy.optimize import minimize

from . import eavesdrop, qmath, statedep, universal
from .statedep import TwoStateEnsemble

log = logging.getLogger(__name__)

FEASIBILITY_TOL = 1e-8
DISPERSION_TOL = 1e-5


class OptimizationError(RuntimeError):
    def __init__(self, message: str, residuals=()):
        super().__init__(message)
        self.residuals = list(residuals)


@dataclass
class OptimizationResult:
    best_value: float
    best_parameters: np.ndarray
    constraint_residual: float
    iterations: int
    converged: bool
    start_values: list[float] = field(default_factory=list)
    details: dict = field(default_factory=dict)

    @property
    def dispersion(self) -> float:
        """Spread of the objective over converged starts."""
        if not self.start_values:
            return 0.0
        return float(max(self.start_values) - min(self.start_values))


# ---------------------------------------------------------------------------
# quadratic forms and the augmented Lagrangian


class QuadraticForms:
    """Real quadratic maps x -> x^T Q_k x + l_k.x + c_k recovered by polarization.

    ``func`` must be exactly quadratic (possibly inhomogeneous) in x; this is
    checked at a random point after extraction.
    """

    def __init__(self, func: Callable[[np.ndarray], np.ndarray], n: int, check_seed: int = 0):
        func_vec = lambda x: np.atleast_1d(np.asarray(func(x), dtype=float))
        zero = np.zeros(n)
        c = func_vec(zero)
        eye = np.eye(n)
        plus = np.array([func_vec(e) for e in eye]) - c  # q(e_i) = Q_ii + l_i
        minus = np.array([func_vec(-e) for e in eye]) - c  # q(-e_i) = Q_ii - l_i
        diag = 0.5 * (plus + minus)
        lin = 0.5 * (plus - minus)
        m = c.size
        Q = np.zeros((m, n, n))
        for i in range(n):
            Q[:, i, i] = diag[i]
        for i, j in itertools.combinations(range(n), 2):
            qij = func_vec(eye[i] + eye[j]) - c
            off = 0.5 * (qij - diag[i] - diag[j] - lin[i] - lin[j])
            Q[:, i, j] = Q[:, j, i] = off
        self.Q, self.lin, self.const = Q, lin.T, c
        x = np.random.default_rng(check_seed).normal(size=n)
        err = np.max(np.abs(self(x) - func_vec(x)))
        if err > 1e-9 * max(1.0, np.max(np.abs(func_vec(x)))):
            raise ValueError(f"function is not quadratic (reconstruction error {err:.3g})")

    def __call__(self, x: np.ndarray) -> np.ndarray:
        return np.einsum("kij,i,j->k", self.Q, x, x) + self.lin @ x + self.const

    def jacobian(self, x: np.ndarray) -> np.ndarray:
        return 2 * np.einsum("kij,j->ki", self.Q, x) + self.lin


@dataclass
class ALMOutcome:
    x: np.ndarray
    value: float
    residual: float
    iterations: int
    success: bool


def augmented_lagrangian(
    objective: QuadraticForms,
    constraints: QuadraticForms,
    x0: np.ndarray,
    *,
    mu0: float = 10.0,
    escalation: float = 10.0,
    max_outer: int = 40,
    tol: float = 1e-12,
    mu_max: float = 1e12,
) -> ALMOutcome:
    """Minimize objective(x) subject to constraints(x) = 0."""
    x = np.array(x0, dtype=float)
    lam = np.zeros(constraints.const.size)
    mu = mu0
    prev = np.inf
    iterations = 0

    def lagrangian(x):
        c = constraints(x)
        val = objective(x)[0] + lam @ c + 0.5 * mu * c @ c
        grad = objective.jacobian(x)[0] + constraints.jacobian(x).T @ (lam + mu * c)
        return val, grad

    last_value = np.inf
    for _ in range(max_outer):
        res = minimize(lagrangian, x, jac=True, method="BFGS", options={"gtol": 1e-11, "maxiter": 4000})
        x = res.x
        iterations += int(res.nit)
        c = constraints(x)
        viol = float(np.max(np.abs(c)))
        lam = lam + mu * c
        value = float(objective(x)[0])
        # stalled at round-off level: further rounds only shuffle the last digits
        if viol < tol or (viol < 100 * tol and abs(value - last_value) < 1e-14):
            break
        last_value = value
        if viol > 0.25 * prev and mu < mu_max:
            mu *= escalation
        prev = viol
    c = constraints(x)
    viol = float(np.max(np.abs(c)))
    return ALMOutcome(x, float(objective(x)[0]), viol, iterations, viol < 100 * tol)


def _multistart(objective, constraints, n, starts, seed, scale=1.0, x0s=None):
    """Run the ALM from random (or given) starts; yield outcomes in start order."""
    if x0s is None:
        rng = np.random.default_rng(seed)
        x0s = [scale * rng.normal(size=n) for _ in range(starts)]
    return [augmented_lagrangian(objective, constraints, x0) for x0 in x0s]


# ---------------------------------------------------------------------------
# universal cloner


def _universal_terms(V: np.ndarray) -> dict[str, np.ndarray]:
    """Coefficient-times-ancilla vectors of the general ansatz."""
    b0 = V[:, 0].reshape(2, 2, 2)
    b1 = V[:, 1].reshape(2, 2, 2)
    return {
        "a": b0[0, 0], "b1": b0[0, 1], "b2": b0[1, 0], "c": b0[1, 1],
        "at": b1[1, 1], "bt1": b1[1, 0], "bt2": b1[0, 1], "ct": b1[0, 0],
    }


def ansatz_constraints(V: np.ndarray, *, scalar: bool = False) -> dict[str, complex]:
    """Unitarity, symmetry and orientation-invariance conditions of the ansatz.

    With ``scalar`` the "ancilla vectors" are 1-dimensional, i.e. every
    ancilla overlap equals 1 (the no-ancilla cloner). Every value must
    vanish for an admissible cloner.
    """
    t = _universal_terms(V) if not scalar else V
    ip = np.vdot
    n2 = lambda v: float(np.vdot(v, v).real)
    eta = n2(t["a"]) - n2(t["c"])
    out = {
        "norm0": n2(t["a"]) + n2(t["b1"]) + n2(t["b2"]) + n2(t["c"]) - 1,
        "norm1": n2(t["at"]) + n2(t["bt1"]) + n2(t["bt2"]) + n2(t["ct"]) - 1,
        "sym|b|": n2(t["b1"]) - n2(t["b2"]),
        "sym|bt|": n2(t["bt1"]) - n2(t["bt2"]),
        "(i)": eta - (n2(t["at"]) - n2(t["ct"])),
        "(vii)": ip(t["ct"], t["a"]) - ip(t["at"], t["c"]),
        "unitarity": ip(t["a"], t["ct"]) + ip(t["b2"], t["bt1"]) + ip(t["b1"], t["bt2"]) + ip(t["c"], t["at"]),
    }
    for tag, (b1, b2, bt1, bt2) in {
        "": ("b1", "b2", "bt1", "bt2"),
        "'": ("b2", "b1", "bt2", "bt1"),
    }.items():
        z = ip(t[bt1], t["a"]) + ip(t["at"], t[b1])
        out["(ii)" + tag] = eta - z.real
        out["(iii)" + tag] = z.imag
        out["(iv)" + tag] = ip(t[b1], t["ct"]) + ip(t["c"], t[bt1])
        out["(v)" + tag] = ip(t[b2], t["a"]) + ip(t["c"], t[b1])
        out["(vi)" + tag] = ip(t[bt2], t["at"]) + ip(t["ct"], t[bt1])
    return out


def exchange_symmetry(V: np.ndarray) -> dict[str, float]:
    """|a| = |a~|, |b| = |b~|, |c| = |c~| (renaming |0> <-> |1>)."""
    t = _universal_terms(V)
    n2 = lambda v: float(np.vdot(v, v).real)
    return {
        "|a|=|at|": n2(t["a"]) - n2(t["at"]),
        "|b|=|bt|": n2(t["b1"]) - n2(t["bt1"]),
        "|c|=|ct|": n2(t["c"]) - n2(t["ct"]),
    }


def clone_maps(V: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """M[j, k] = Tr_{rest}(V|j><k|V^dag) for each clone; rho_clone = sum rho_jk M[j, k]."""
    T = V.reshape(2, 2, 2, 2)  # clone1, clone2, ancilla, input
    m1 = np.einsum("qraj,srak->jkqs", T, T.conj())
    m2 = np.einsum("rqaj,rsak->jkqs", T, T.conj())
    return m1, m2


def channel_conditions(V: np.ndarray, eta: float) -> np.ndarray:
    """Symmetry (both clones equal) and isotropy (each clone is eta-depolarizing)."""
    m1, m2 = clone_maps(V)
    target = np.zeros((2, 2, 2, 2), dtype=complex)
    for j in range(2):
        for k in range(2):
            target[j, k, j, k] += eta
        target[j, j] += 0.5 * (1 - eta) * np.eye(2)
    return np.concatenate([(m1 - m2).ravel(), (m1 - target).ravel()])


def _split(x: np.ndarray, shape) -> np.ndarray:
    h = x.size // 2
    return (x[:h] + 1j * x[h:]).reshape(shape)


def _flatten(values) -> np.ndarray:
    vals = np.asarray(list(values), dtype=complex)
    return np.concatenate([vals.real, vals.imag])


def universal_eta(V: np.ndarray) -> float:
    """2|a|^2 + 2|b|^2 - 1 with |b|^2 the mean of |b_1|^2 and |b_2|^2."""
    t = _universal_terms(V)
    n2 = lambda v: float(np.vdot(v, v).real)
    return 2 * n2(t["a"]) + n2(t["b1"]) + n2(t["b2"]) - 1


def _universal_problem():
    def residuals(x):
        V = _split(x, (8, 2))
        eta = universal_eta(V)
        parts = list(ansatz_constraints(V).values()) + list(exchange_symmetry(V).values())
        return np.concatenate([_flatten(parts), _flatten(channel_conditions(V, eta))])

    objective = QuadraticForms(lambda x: -universal_eta(_split(x, (8, 2))), 32)
    constraints = QuadraticForms(residuals, 32)
    return objective, constraints


def canonical_universal(V: np.ndarray) -> tuple[np.ndarray, dict]:
    """Fix the gauge: ancilla |A> -> |0>, global phase so delta_a = 0."""
    t = _universal_terms(V)
    a_dir = t["a"] / np.linalg.norm(t["a"])
    perp = np.array([-a_dir[1].conj(), a_dir[0].conj()])
    W = np.vstack([a_dir.conj(), perp.conj()])  # rows: <A|, <A_perp|
    V2 = (V.reshape(4, 2, 2).transpose(0, 2, 1) @ W.T).transpose(0, 2, 1).reshape(8, 2)
    t2 = _universal_terms(V2)
    V2 = V2 * np.exp(-1j * np.angle(t2["a"][0]))
    t2 = _universal_terms(V2)
    delta_at = float(np.mod(np.angle(t2["b1"][1]), 2 * np.pi)) if abs(t2["b1"][1]) > 1e-6 else 0.0
    return V2, {"delta_a": 0.0, "delta_a_tilde": delta_at}


def universal_feasibility(V: np.ndarray, samples: int = 10, seed: int = 1) -> dict[str, float]:
    """Residuals from direct simulation of the candidate cloner.

    Uses ``universal.clone`` on random inputs rather than the forms the
    search was run on: isometry defect, clone asymmetry, and deviation of
    each clone from eta-shrinking of the input Bloch vector.
    """
    iso = universal.ClonerIsometry(V)
    eta = universal_eta(V)
    rng = np.random.default_rng(seed)
    asym = aniso = 0.0
    for _ in range(samples):
        psi = qmath.random_pure_qubit(rng)
        rho1, rho2, _, _ = universal.clone(iso, psi)
        s_in = qmath.bloch_from_density(qmath.projector(psi))
        asym = max(asym, float(np.max(np.abs(rho1 - rho2))))
        aniso = max(aniso, float(np.max(np.abs(qmath.bloch_from_density(rho1) - eta * s_in))))
    ansatz = max(abs(v) for v in ansatz_constraints(V).values())
    return {
        "isometry": float(np.max(np.abs(V.conj().T @ V - np.eye(2)))),
        "symmetry": asym,
        "isotropy": aniso,
        "ansatz": float(ansatz),
    }


def maximize_universal_eta(tolerance: float = FEASIBILITY_TOL, seeds: int = 20, seed: int = 0) -> OptimizationResult:
    """Maximize the shrink factor over symmetric isotropic cloners with a qubit ancilla."""
    if tolerance <= 0:
        raise ValueError("tolerance must be positive")
    objective, constraints = _universal_problem()
    outcomes = _multistart(objective, constraints, 32, seeds, seed, scale=0.3)
    good = [o for o in outcomes if o.success and o.residual < tolerance]
    if not good:
        raise OptimizationError("no start converged", [o.residual for o in outcomes])
    best = min(good, key=lambda o: o.value)
    V, phases = canonical_universal(_split(best.x, (8, 2)))
    feas = universal_feasibility(V)
    a, b, c = universal.ClonerIsometry(V).coefficients
    eta = universal_eta(V)
    return OptimizationResult(
        best_value=eta,
        best_parameters=np.array([a, b, c, phases["delta_a"], phases["delta_a_tilde"]]),
        constraint_residual=max(feas.values()),
        iterations=sum(o.iterations for o in outcomes),
        converged=max(feas.values()) < tolerance,
        start_values=[-o.value for o in good],
        details={"isometry": V, "feasibility": feas, "converged_starts": len(good), "starts": seeds},
    )


# ---------------------------------------------------------------------------
# no-ancilla cloner


@dataclass
class NoAncillaReport:
    resolution: int
    points: int
    feasible_points: int
    max_eta_feasible: float
    case_max_eta: dict[str, float]
    search_max_eta: float | None = None

    @property
    def passed(self) -> bool:
        return (
            self.max_eta_feasible <= FEASIBILITY_TOL
            and all(v == 0.0 for v in self.case_max_eta.values())
            and (self.search_max_eta is None or self.search_max_eta <= FEASIBILITY_TOL)
        )


def _magnitude_grid(resolution: int):
    """(|a|, |b|, |c|) with |a|^2 + 2|b|^2 + |c|^2 = 1 on a square grid in (|a|, |c|)."""
    ticks = np.arange(resolution + 1) / resolution
    A, C = np.meshgrid(ticks, ticks, indexing="ij")
    ii, jj = np.meshgrid(np.arange(resolution + 1), np.arange(resolution + 1), indexing="ij")
    # integer test keeps the boundary |b| = 0 exact
    inside = ii**2 + jj**2 <= resolution**2
    A, C = A[inside], C[inside]
    B2 = np.where(ii[inside] ** 2 + jj[inside] ** 2 == resolution**2, 0.0, (1 - A**2 - C**2) / 2)
    return A, np.sqrt(B2), C


def _phase_free_residuals(a, b, c, at, bt, ct):
    """Lower bounds, over all phases, of |constraint| for each no-ancilla condition.

    A sum of complex numbers with fixed moduli can vanish only if the largest
    modulus is at most the sum of the others; its distance from a target
    value is bounded below likewise.
    """
    eta = a * a - c * c
    res = [np.abs(eta - (at * at - ct * ct))]  # (i)
    # (ii)+(iii): z = bt* a + at* b must equal the real number eta; they are
    # judged separately on Re and Im, and max(|Re w|, |Im w|) >= |w| / sqrt 2
    big, small = bt * a + at * b, np.abs(bt * a - at * b)
    res.append(np.maximum(0, np.maximum(np.abs(eta) - big, small - np.abs(eta))) / np.sqrt(2))
    res.append(np.abs(b * ct - c * bt))  # (iv)
    res.append(np.abs(b * a - c * b))  # (v) and its 1<->2 twin
    res.append(np.abs(bt * at - ct * bt))  # (vi) and twin
    res.append(np.abs(ct * a - at * c))  # (vii)
    terms = np.stack([a * ct, b * bt, b * bt, c * at])
    res.append(np.maximum(0, 2 * terms.max(axis=0) - terms.sum(axis=0)))  # unitarity
    res = np.broadcast_arrays(*res)
    return np.max(np.stack(res), axis=0), np.broadcast_to(eta, res[0].shape)


def no_ancilla_scan(resolution: int = 100, search_starts: int = 8, seed: int = 0) -> NoAncillaReport:
    """Exhaustive magnitude grid for the cloner without ancilla.

    A point is kept if every phase-free lower bound is below the
    feasibility tolerance; the kept set contains every truly feasible
    point, so bounding eta on it bounds eta on the feasible set.
    """
    if resolution < 100:
        raise ValueError("resolution must be at least 100 per dimension")
    A, B, C = _magnitude_grid(resolution)
    n = A.size
    max_eta = -np.inf
    feasible = 0
    # (v) involves the untilded triple only and (vi) is the same test on the
    # tilded one, so grid points failing it can be dropped on either side
    keep = np.flatnonzero(np.abs(B * A - C * B) <= FEASIBILITY_TOL)
    rows = cols = keep
    for lo in range(0, rows.size, 64):
        r = rows[lo : lo + 64, None]
        res, eta = _phase_free_residuals(A[r], B[r], C[r], A[cols], B[cols], C[cols])
        mask = res <= FEASIBILITY_TOL
        if mask.any():
            feasible += int(mask.sum())
            max_eta = max(max_eta, float(eta[mask].max()))

    cases = {}
    for name, sel_u, sel_t in [
        ("|a|=|c|, |at|=|ct|", A == C, A == C),
        ("|a|=|c|, |bt|=0", A == C, B == 0),
        ("|b|=0, |at|=|ct|", B == 0, A == C),
        ("|b|=0, |bt|=0", B == 0, B == 0),
    ]:
        iu, it = np.flatnonzero(sel_u), np.flatnonzero(sel_t)
        U, T = np.meshgrid(iu, it, indexing="ij")
        U, T = U.ravel(), T.ravel()
        res, eta = _phase_free_residuals(A[U], B[U], C[U], A[T], B[T], C[T])
        mask = res <= FEASIBILITY_TOL
        cases[name] = float(np.abs(eta[mask]).max()) if mask.any() else 0.0

    search = None
    if search_starts:
        search = maximize_no_ancilla_eta(search_starts, seed).best_value
    return NoAncillaReport(resolution, n * n, feasible, max_eta, cases, search)


def _scalar_terms(x: np.ndarray) -> dict[str, np.ndarray]:
    z = x[:8] + 1j * x[8:]
    names = ("a", "b1", "b2", "c", "at", "bt1", "bt2", "ct")
    return {k: z[i : i + 1] for i, k in enumerate(names)}


def maximize_no_ancilla_eta(starts: int = 8, seed: int = 0) -> OptimizationResult:
    """Continuous search for the no-ancilla cloner (complements the grid)."""
    def residuals(x):
        return _flatten(ansatz_constraints(_scalar_terms(x), scalar=True).values())

    def eta(x):
        t = _scalar_terms(x)
        return -(abs(t["a"][0]) ** 2 - abs(t["c"][0]) ** 2)

    objective = QuadraticForms(eta, 16)
    constraints = QuadraticForms(residuals, 16)
    outcomes = _multistart(objective, constraints, 16, starts, seed, scale=0.5)
    good = [o for o in outcomes if o.residual < FEASIBILITY_TOL]
    best = min(good, key=lambda o: o.value) if good else min(outcomes, key=lambda o: o.residual)
    return OptimizationResult(
        best_value=-best.value,
        best_parameters=best.x,
        constraint_residual=best.residual,
        iterations=sum(o.iterations for o in outcomes),
        converged=bool(good),
        start_values=[-o.value for o in good],
    )


# ---------------------------------------------------------------------------
# state-dependent cloner, global fidelity


def _complement_basis(ka: np.ndarray, kb: np.ndarray) -> np.ndarray:
    """Orthonormal basis (columns) of the complement of span{|aa>, |bb>} in C^4."""
    aa, bb = np.kron(ka, ka), np.kron(kb, kb)
    q, _ = np.linalg.qr(np.column_stack([aa, bb, np.eye(4)]))
    return q[:, 2:4]


def _global_terms(x: np.ndarray):
    """a0, b0, a1, b1 complex; g0 = c0|C0>, g1 = c1|C1> in complement coordinates."""
    z = x[:8] + 1j * x[8:]
    return z[0], z[1], z[2], z[3], z[4:6], z[6:8]


def global_constraints(x: np.ndarray, S: float) -> np.ndarray:
    a0, b0, a1, b1, g0, g1 = _global_terms(x)
    S2 = S * S
    z = np.conj(a0) * a1 + np.conj(b0) * b1 + S2 * (np.conj(a0) * b1 + np.conj(b0) * a1) + np.vdot(g0, g1)
    return np.array([
        z.real - S,
        z.imag,
        abs(a0) ** 2 + abs(b0) ** 2 + 2 * S2 * (np.conj(a0) * b0).real + np.vdot(g0, g0).real - 1,
        abs(a1) ** 2 + abs(b1) ** 2 + 2 * S2 * (np.conj(a1) * b1).real + np.vdot(g1, g1).real - 1,
    ])


def global_objective(x: np.ndarray, S: float) -> float:
    a0, b0, a1, b1, _, _ = _global_terms(x)
    return 0.5 * (abs(a0 + b0 * S * S) ** 2 + abs(b1 + a1 * S * S) ** 2)


def global_outputs(x: np.ndarray, e: TwoStateEnsemble) -> tuple[np.ndarray, np.ndarray]:
    ka, kb = statedep.input_states(e)
    aa, bb = np.kron(ka, ka), np.kron(kb, kb)
    comp = _complement_basis(ka, kb)
    a0, b0, a1, b1, g0, g1 = _global_terms(x)
    return a0 * aa + b0 * bb + comp @ g0, a1 * aa + b1 * bb + comp @ g1


def maximize_global_fidelity_full(
    theta: float, tolerance: float = FEASIBILITY_TOL, starts: int = 8, seed: int = 0
) -> OptimizationResult:
    """Maximize the two-state global fidelity allowing output components outside span{|aa>,|bb>}."""
    if not 0.0 < theta < np.pi / 4:
        raise ValueError("theta must lie strictly inside (0, pi/4)")
    e = TwoStateEnsemble(theta)
    S = e.overlap
    objective = QuadraticForms(lambda x: -global_objective(x, S), 16)
    constraints = QuadraticForms(lambda x: global_constraints(x, S), 16)
    outcomes = _multistart(objective, constraints, 16, starts, seed, scale=0.5)
    good = [o for o in outcomes if o.success]
    if not good:
        raise OptimizationError("no start converged", [o.residual for o in outcomes])
    best = min(good, key=lambda o: o.value)
    alpha, beta = global_outputs(best.x, e)
    # independent check on the explicit output vectors
    feas = {
        "norm_alpha": abs(np.vdot(alpha, alpha).real - 1),
        "norm_beta": abs(np.vdot(beta, beta).real - 1),
        "overlap": abs(np.vdot(alpha, beta) - S),
    }
    _, _, _, _, g0, g1 = _global_terms(best.x)
    c0, c1 = float(np.linalg.norm(g0)), float(np.linalg.norm(g1))
    return OptimizationResult(
        best_value=statedep.global_fidelity(e, alpha, beta),
        best_parameters=best.x,
        constraint_residual=float(max(feas.values())),
        iterations=sum(o.iterations for o in outcomes),
        converged=max(feas.values()) < tolerance,
        start_values=[-o.value for o in good],
        details={"c0": c0, "c1": c1, "feasibility": feas, "closed_form": statedep.global_fidelity_opt(e)},
    )


# ---------------------------------------------------------------------------
# state-dependent cloner, local fidelity


def _symmetric_columns(x: np.ndarray):
    a, b, c = x
    return np.array([a, b, b, c]), np.array([c, b, b, a])


def symmetric_ansatz_constraints(x: np.ndarray) -> np.ndarray:
    u0, u1 = _symmetric_columns(x)
    return np.array([u0 @ u0 - 1, u0 @ u1])


def symmetric_local_fidelity(x: np.ndarray, S: float) -> float:
    theta = 0.5 * np.arcsin(S)
    ka = np.array([np.cos(theta), np.sin(theta)])
    u0, u1 = _symmetric_columns(x)
    alpha = (ka[0] * u0 + ka[1] * u1).reshape(2, 2)
    rho = alpha @ alpha.T
    return float(ka @ rho @ ka)


def maximize_local_fidelity_statedep(S: float, grid: int = 6, seed: int = 0) -> OptimizationResult:
    """Maximize one clone's fidelity over real symmetric two-column cloners.

    Starts on a ``grid`` x ``grid`` lattice of directions on the (a, b, c)
    sphere, refined by the augmented Lagrangian.
    """
    if not 0.0 < S < 1.0:
        raise ValueError("S must lie strictly inside (0, 1)")
    objective = QuadraticForms(lambda x: -symmetric_local_fidelity(x, S), 3)
    constraints = QuadraticForms(symmetric_ansatz_constraints, 3)
    u = np.linspace(0.05, np.pi - 0.05, grid)
    v = np.linspace(0, 2 * np.pi, grid, endpoint=False)
    x0s = [np.array([np.sin(p) * np.cos(q), np.sin(p) * np.sin(q), np.cos(p)]) for p in u for q in v]
    outcomes = _multistart(objective, constraints, 3, None, seed, x0s=x0s)
    good = [o for o in outcomes if o.success]
    if not good:
        raise OptimizationError("no start converged", [o.residual for o in outcomes])
    best = min(good, key=lambda o: o.value)
    resid = float(np.max(np.abs(symmetric_ansatz_constraints(best.x))))
    top = [-o.value for o in good if -o.value > -best.value - 1e-3]
    return OptimizationResult(
        best_value=symmetric_local_fidelity(best.x, S),
        best_parameters=best.x,
        constraint_residual=resid,
        iterations=sum(o.iterations for o in outcomes),
        converged=resid < FEASIBILITY_TOL,
        start_values=top,
        details={"closed_form": eavesdrop.local_fidelity_3(S), "eavesdrop_cloner": eavesdrop.local_fidelity_2(S)},
    )
