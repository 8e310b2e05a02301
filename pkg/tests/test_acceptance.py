"""Acceptance criteria 1-10, one PASS/FAIL line per criterion.

Run with ``pytest -s tests/test_acceptance.py`` to see the lines.
"""

import time

import numpy as np
import pytest

from cloning import verify


def report(number, title, checks, elapsed=None, limit=None):
    ok = all(c.passed for c in checks) and (limit is None or elapsed < limit)
    detail = "; ".join(
        f"{c.name}={c.value:.6g} (expected {c.expected:.6g}, tol {c.tolerance:.3g})"
        + (" [FLAGGED]" if c.flagged else "")
        for c in checks
    )
    timing = "" if elapsed is None else f" [{elapsed:.2f}s" + (f" < {limit}s]" if limit else "]")
    print(f"\n{'PASS' if ok else 'FAIL'} criterion {number}: {title}{timing} :: {detail}")
    for c in checks:
        assert c.passed, c
    if limit is not None:
        assert elapsed < limit, f"criterion {number} took {elapsed:.2f}s"


def timed(fn, *args, **kwargs):
    t = time.perf_counter()
    out = fn(*args, **kwargs)
    return out, time.perf_counter() - t


def pick(checks, *names):
    by = {c.name: c for c in checks}
    return [by[n] for n in names]


@pytest.fixture(scope="module")
def universal_checks():
    return timed(verify.suite_universal, seed=0)


@pytest.fixture(scope="module")
def statedep_checks():
    return verify.suite_statedep()


@pytest.fixture(scope="module")
def eavesdrop_checks():
    return verify.suite_eavesdrop()


@pytest.fixture(scope="module")
def teleport_checks():
    return timed(verify.suite_teleport, seed=0)


def test_criterion_01_universal_fidelity(universal_checks):
    checks, dt = universal_checks
    report(1, "universal F = 5/6 and eta = 2/3", pick(checks, "universal.fidelity", "universal.eta"), dt, 1.0)


def test_criterion_02_symmetry_isotropy(universal_checks):
    checks, _ = universal_checks
    report(2, "clone symmetry and isotropy", pick(checks, "universal.clone_symmetry", "universal.isotropy_cross"))


def test_criterion_03_teleport_equivalence(teleport_checks):
    checks, _ = teleport_checks
    names = (
        "teleport.sim_vs_kraus",
        "teleport.sim_vs_universal",
        "teleport.kraus_vs_universal",
        "teleport.kraus_completeness",
        "teleport.E_phi_exact",
    )
    report(3, "teleportation = Kraus channel = universal cloner", pick(checks, *names))


def test_criterion_04_sampling():
    from cloning import qmath, teleport

    run, dt = timed(teleport.run_teleport_clone, qmath.KET0, 100_000, np.random.default_rng(0))
    p = 1 / 3
    c = verify.Check("teleport.phi_frequency", run.group_frequency("Phi"), p, 3 * np.sqrt(p * (1 - p) / 1e5))
    report(4, "Phi-group frequency within 3 sigma", [c], dt, 5.0)


def test_criterion_05_statedep_consistency(statedep_checks):
    names = ("statedep.closed_vs_geometric", "statedep.closed_vs_constructed", "statedep.output_overlap")
    report(5, "state-dependent global fidelity consistency", pick(statedep_checks, *names))


def test_criterion_06_local_fidelity_chain(eavesdrop_checks):
    names = (
        "eavesdrop.chain_F2_ge_F1",
        "eavesdrop.chain_F3_ge_F2",
        "eavesdrop.max_F2_minus_F1",
        "eavesdrop.argmax_F2_minus_F1",
        "eavesdrop.max_F3_minus_F2",
    )
    report(6, "F_l3 >= F_l2 >= F_l1 and the gap maxima", pick(eavesdrop_checks, *names))


def test_criterion_07_bloch_claims(statedep_checks):
    names = ("statedep.min_local_fidelity_1", "statedep.min_bloch_modulus")
    report(7, "min F_l1 > 5/6 and min |s| > 2/3", pick(statedep_checks, *names))


def test_criterion_08_cloner_condition(eavesdrop_checks):
    names = ("eavesdrop.cloner_condition_mismatch", "eavesdrop.closed_vs_constructive_F2")
    report(8, "eavesdropping interaction is a symmetric cloner", pick(eavesdrop_checks, *names))


def test_criterion_09_optimizers():
    checks, dt = timed(verify.suite_optimize, seed=0)
    report(9, "numerical re-derivations", checks, dt, 45.0)


def test_criterion_10_capacity():
    checks = verify.suite_capacity()
    names = ("capacity.zero_regime_max", "capacity.eta_1", "capacity.eta_0.8", "capacity.min_increment")
    report(10, "depolarizing capacity bound", pick(checks, *names))
