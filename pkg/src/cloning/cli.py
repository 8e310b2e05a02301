"""Command-line entry point: clone queries, figure data, verification suites, capacity tables."""

from __future__ import annotations

import argparse
import io
import json
import sys
from dataclasses import asdict, dataclass, field

import numpy as np

from . import capacity, eavesdrop, qmath, statedep, universal, verify

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    subcommand: str
    grid: int = 101
    seed: int = 0
    shots: int = 100_000
    format: str = "csv"
    out: str | None = None
    tolerances: dict[str, float] = field(default_factory=dict)

    def __post_init__(self):
        if self.grid < 2:
            raise UsageError("--grid must be at least 2")
        if self.shots < 1:
            raise UsageError("--shots must be at least 1")
        if not 0 <= self.seed < 2**64:
            raise UsageError("--seed must be an unsigned 64-bit integer")


def fmt(x) -> str:
    return f"{float(x):.12g}"


def _round(x):
    """12-significant-digit copy of nested numeric data, for JSON."""
    if isinstance(x, dict):
        return {k: _round(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_round(v) for v in x]
    if isinstance(x, (bool, np.bool_)) or x is None or isinstance(x, str):
        return bool(x) if isinstance(x, np.bool_) else x
    if isinstance(x, (int, np.integer)):
        return int(x)
    return float(fmt(x))


def _csv(header: list[str], rows: list[list]) -> str:
    buf = io.StringIO()
    buf.write(",".join(header) + "\n")
    for row in rows:
        buf.write(",".join(v if isinstance(v, str) else fmt(v) for v in row) + "\n")
    return buf.getvalue()


def _json(cfg: RunConfig, results, checks=()) -> str:
    doc = {
        "command": cfg.subcommand,
        "config": _round(asdict(cfg)),
        "results": _round(results),
        "checks": [
            {
                "name": c.name,
                "value": _round(c.value),
                "expected": _round(c.expected),
                "tolerance": _round(c.tolerance),
                "pass": c.passed,
                **({"flagged": True} if c.flagged else {}),
            }
            for c in checks
        ],
    }
    return json.dumps(doc, indent=2, allow_nan=False) + "\n"


def _emit(cfg: RunConfig, text: str) -> None:
    if cfg.out is None:
        sys.stdout.write(text)
        return
    try:
        with open(cfg.out, "w", newline="\n", encoding="utf-8") as fh:
            fh.write(text)
    except OSError as exc:
        raise UsageError(f"cannot write {cfg.out}: {exc.strerror}") from exc


def _floats(text: str, n: int | None = None, kind=float) -> list:
    try:
        vals = [kind(v.strip().replace(" ", "")) for v in text.split(",")]
    except ValueError as exc:
        raise UsageError(f"malformed numeric list {text!r}") from exc
    if n is not None and len(vals) != n:
        raise UsageError(f"expected {n} comma-separated values, got {len(vals)}")
    if not all(np.isfinite(complex(v)) for v in vals):
        raise UsageError("values must be finite")
    return vals


def parse_state(args) -> np.ndarray:
    if args.state is not None:
        s = np.array(_floats(args.state, 3))
        norm = np.linalg.norm(s)
        if norm > 1 + 1e-12:
            raise UsageError(f"Bloch norm {fmt(norm)} > 1")
        if abs(norm - 1) > 1e-9:
            raise UsageError(f"Bloch norm {fmt(norm)} < 1: the cloner acts on pure states")
        return qmath.pure_from_bloch(s / norm)
    if args.angles is not None:
        t, p = _floats(args.angles, 2)
        return np.array([np.cos(t / 2), np.exp(1j * p) * np.sin(t / 2)])
    amps = np.array(_floats(args.amplitudes, 2, complex))
    try:
        return qmath.state_vector(amps)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def cmd_universal(cfg: RunConfig, args) -> int:
    psi = parse_state(args)
    iso = universal.bh_isometry()
    rho1, rho2, _, _ = universal.clone(iso, psi)
    eta = universal.shrink_factor(iso, psi)
    fid = qmath.fidelity_pure(rho1, psi)
    if cfg.format == "json":
        mats = {
            name: {"re": m.real.tolist(), "im": m.imag.tolist()}
            for name, m in (("rho1", rho1), ("rho2", rho2))
        }
        results = {"eta": eta, "fidelity": fid, **mats}
        _emit(cfg, _json(cfg, results))
        return EXIT_OK
    rows = [["eta", eta], ["fidelity", fid]]
    for name, m in (("rho1", rho1), ("rho2", rho2)):
        for i in range(2):
            for j in range(2):
                rows.append([f"{name}[{i}{j}].re", m[i, j].real])
                rows.append([f"{name}[{i}{j}].im", m[i, j].imag])
    _emit(cfg, _csv(["quantity", "value"], rows))
    return EXIT_OK


def figure_rows(which: str, grid: int) -> tuple[list[str], list[list[float]]]:
    thetas = np.linspace(0, np.pi / 4, grid)
    S = np.sin(2 * thetas)
    S[-1] = 1.0
    if which == "fig1":
        chain = eavesdrop.fidelity_chain(S)
        return ["theta", "S", "F_l1", "F_l2", "F_l3"], [
            [t, s, *f] for t, s, f in zip(thetas, S, chain)
        ]
    if which == "fig2":
        return ["theta", "S", "s_modulus"], [
            [t, s, statedep.bloch_modulus(statedep.TwoStateEnsemble(float(t)))]
            for t, s in zip(thetas, S)
        ]
    raise UsageError(f"unknown figure {which!r}")


def cmd_figures(cfg: RunConfig, args) -> int:
    header, rows = figure_rows(args.which, cfg.grid)
    if cfg.format == "json":
        _emit(cfg, _json(cfg, {"columns": header, "rows": rows}))
    else:
        _emit(cfg, _csv(header, rows))
    return EXIT_OK


def cmd_verify(cfg: RunConfig, args) -> int:
    checks = verify.run(args.suite, seed=cfg.seed, tol=cfg.tolerances, shots=cfg.shots)
    ok = all(c.passed for c in checks)
    if cfg.format == "json":
        _emit(cfg, _json(cfg, {"suite": args.suite, "passed": ok}, checks))
    else:
        rows = [
            [c.name, c.value, c.expected, c.tolerance, "pass" if c.passed else "FAIL"]
            + (["flagged"] if c.flagged else [""])
            for c in checks
        ]
        _emit(cfg, _csv(["name", "value", "expected", "tolerance", "result", "note"], rows))
    return EXIT_OK if ok else EXIT_FAIL


def cmd_capacity(cfg: RunConfig, args) -> int:
    if args.eta is not None:
        etas = _floats(args.eta)
    else:
        etas = list(np.linspace(0, 1, cfg.grid))
    try:
        bounds = [capacity.q_upper_bound(e, args.continuity) for e in etas]
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    header = ["eta", "bound"] + (["conditional_bound"] if args.continuity else [])
    rows = [[b.eta, b.bound] + ([b.conditional_bound] if args.continuity else []) for b in bounds]
    if cfg.format == "json":
        _emit(cfg, _json(cfg, {"columns": header, "rows": rows}))
    else:
        _emit(cfg, _csv(header, rows))
    return EXIT_OK


def _tol(text: str) -> tuple[str, float]:
    name, sep, value = text.partition("=")
    if not sep or not name:
        raise argparse.ArgumentTypeError(f"expected NAME=VALUE, got {text!r}")
    try:
        v = float(value)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad tolerance value {value!r}") from exc
    if not v >= 0:
        raise argparse.ArgumentTypeError("tolerance must be non-negative")
    return name, v


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--grid", type=int, default=101)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--shots", type=int, default=100_000)
    common.add_argument("--format", choices=("csv", "json"), default="csv")
    common.add_argument("--out", default=None)
    common.add_argument("--tol", type=_tol, action="append", default=[], metavar="NAME=VALUE")

    p = argparse.ArgumentParser(prog="cloning", description=__doc__)
    sub = p.add_subparsers(dest="subcommand", required=True)

    u = sub.add_parser("universal", parents=[common], help="clone one pure state")
    g = u.add_mutually_exclusive_group(required=True)
    g.add_argument("--state", help="Bloch vector x,y,z")
    g.add_argument("--angles", help="Bloch angles theta,phi")
    g.add_argument("--amplitudes", help="amplitudes a,b (complex literals allowed)")
    u.set_defaults(func=cmd_universal)

    f = sub.add_parser("figures", parents=[common], help="figure data as CSV")
    f.add_argument("which", choices=("fig1", "fig2"))
    f.set_defaults(func=cmd_figures)

    v = sub.add_parser("verify", parents=[common], help="run a verification suite")
    v.add_argument("suite", choices=(*verify.SUITES, "all"))
    v.set_defaults(func=cmd_verify)

    c = sub.add_parser("capacity", parents=[common], help="capacity upper bound table")
    c.add_argument("--eta", help="comma-separated eta values (default: uniform grid)")
    c.add_argument("--continuity", action="store_true")
    c.set_defaults(func=cmd_capacity)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        cfg = RunConfig(
            subcommand=args.subcommand,
            grid=args.grid,
            seed=args.seed,
            shots=args.shots,
            format=args.format,
            out=args.out,
            tolerances=dict(args.tol),
        )
        return args.func(cfg, args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
