"""Write the local-fidelity (fig1) and Bloch-modulus (fig2) curves as CSV."""

import argparse
from pathlib import Path

from cloning import cli


def main():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--grid", type=int, default=201)
    p.add_argument("--outdir", default="results")
    args = p.parse_args()
    out = Path(args.outdir)
    out.mkdir(parents=True, exist_ok=True)
    for fig in ("fig1", "fig2"):
        path = out / f"{fig}.csv"
        code = cli.main(["figures", fig, "--grid", str(args.grid), "--out", str(path)])
        if code:
            raise SystemExit(code)
        print(f"wrote {path}")


if __name__ == "__main__":
    main()
