"""Run the numerical re-derivations and print what each search found."""

import argparse
import time

import numpy as np

from cloning import eavesdrop, optimize


def main():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--starts", type=int, default=20)
    args = p.parse_args()

    t = time.perf_counter()
    r = optimize.maximize_universal_eta(seeds=args.starts, seed=args.seed)
    a, b, c, da, dat = r.best_parameters
    print(f"universal: eta = {r.best_value:.10f}  |a|={a:.6f} |b|={b:.6f} |c|={c:.2e}")
    print(f"  residual {r.constraint_residual:.2e}, {r.details['converged_starts']}/{args.starts} starts, "
          f"spread {r.dispersion:.2e}, {time.perf_counter() - t:.1f}s")

    t = time.perf_counter()
    scan = optimize.no_ancilla_scan(seed=args.seed)
    print(f"no ancilla: {scan.points} grid points, {scan.feasible_points} pass the phase-free filter, "
          f"max eta {scan.max_eta_feasible:.2e}, continuous search {scan.search_max_eta:.2e}, "
          f"{time.perf_counter() - t:.1f}s")
    for name, v in scan.case_max_eta.items():
        print(f"  case {name}: eta = {v}")

    for theta in (np.pi / 16, np.pi / 8, 3 * np.pi / 16):
        r = optimize.maximize_global_fidelity_full(theta, seed=args.seed)
        print(f"global fidelity theta={theta:.4f}: {r.best_value:.12f} vs closed form "
              f"{r.details['closed_form']:.12f}; c0={r.details['c0']:.1e} c1={r.details['c1']:.1e}")

    for S in (0.25, 0.5, 0.75, 0.99):
        r = optimize.maximize_local_fidelity_statedep(S, seed=args.seed)
        print(f"local fidelity S={S}: {r.best_value:.12f} vs closed form {r.details['closed_form']:.12f} "
              f"(eavesdropping cloner {eavesdrop.local_fidelity_2(S):.12f})")


if __name__ == "__main__":
    main()
