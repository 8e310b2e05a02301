"""Locate the largest gaps between the three local fidelities on a fine overlap grid."""

import argparse

import numpy as np

from cloning import eavesdrop


def main():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--grid", type=int, default=100_001)
    args = p.parse_args()
    S = np.linspace(0, 1, args.grid)
    f = eavesdrop.fidelity_chain(S)
    for label, d in (("F_l2 - F_l1", f[:, 1] - f[:, 0]), ("F_l3 - F_l2", f[:, 2] - f[:, 1])):
        k = int(np.argmax(d))
        print(f"{label}: max {d[k]:.8f} at S = {S[k]:.6f}; min {d.min():.3e}")


if __name__ == "__main__":
    main()
