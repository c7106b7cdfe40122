"""Command-line front end: ``verify``, ``mutate`` and ``dilog`` subcommands.

Exit codes: 0 when everything passes, 1 when a check fails, 2 for invalid
input (bad configuration, bad arguments, non-generic exchange polynomial).
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from fractions import Fraction
from pathlib import Path

from .battery import exit_code, run_battery
from .config import FIXTURES, ConfigError, SeedConfig, fixture_config, load_config
from .dilog import DilogParams, check_generic, li2_hd, rogers_hd_tilde, rogers_inf
from .seed import MutationTrajectory, mutate_seed
from .tropical import SignCoherenceError, c_matrices, column_sign

__all__ = ["main", "build_parser"]

EXIT_OK, EXIT_FAIL, EXIT_INVALID = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INVALID, f"{self.prog}: error: {message}\n")


def _resolve(target: str) -> SeedConfig:
    """A builtin fixture name or a path to a JSON configuration."""
    if target in FIXTURES and not Path(target).exists():
        return fixture_config(target)
    p = Path(target)
    if not p.is_file():
        raise ConfigError(target, f"no such file or builtin fixture (builtins: {', '.join(sorted(FIXTURES))})")
    return load_config(p)


def _fail(msg: str) -> int:
    print(f"error: {msg}", file=sys.stderr)
    return EXIT_INVALID


# ---------------------------------------------------------------- verify

def _summary_line(name: str, entry: dict) -> str:
    extra = []
    for key in ("max_residual", "N", "sigma", "signs", "reason", "error"):
        if key in entry and entry[key] is not None:
            v = entry[key]
            if isinstance(v, float):
                v = f"{v:.3e}"
            extra.append(f"{key}={v}")
    tail = f"  ({', '.join(map(str, extra))})" if extra else ""
    return f"  {name:<15} {entry['status']}{tail}"


def cmd_verify(args) -> int:
    try:
        cfg = _resolve(args.config)
    except ConfigError as e:
        return _fail(str(e))
    if args.trials is not None and args.trials < 0:
        return _fail("--trials must be nonnegative")
    report = run_battery(cfg, skip=args.skip, trials=args.trials, seed=args.seed,
                         track_x=not args.no_x, timings=args.timings)
    print(f"{cfg.name}: {report['status']}")
    for name in sorted(report["checks"]):
        print(_summary_line(name, report["checks"][name]))
    if args.timings:
        total = sum(report["timings"].values())
        print(f"  total time {total:.2f} s")
    if args.out:
        text = json.dumps(report, indent=2, sort_keys=True, ensure_ascii=False) + "\n"
        Path(args.out).write_text(text, encoding="utf-8")
    return exit_code(report)


# ---------------------------------------------------------------- mutate

def _fmt_matrix(a) -> str:
    return "[" + ", ".join("[" + ", ".join(str(int(v)) for v in row) + "]" for row in a) + "]"


class _Explorer:
    """Mutation state for ``mutate``; invalid indices leave it untouched."""

    def __init__(self, cfg: SeedConfig, out):
        self.seeds = [cfg.initial_seed(track_x=False)]
        self.ks: list[int] = []
        self.out = out
        self.names = self.seeds[0].alphabet.names

    @property
    def n(self) -> int:
        return self.seeds[0].n

    def show(self, t: int):
        s = self.seeds[t]
        traj = MutationTrajectory(tuple(self.seeds[: t + 1]), tuple(self.ks[:t]))
        C = c_matrices(traj, cross_check=False)[-1]
        w = self.out.write
        w(f"seed t={t + 1}\n")
        w(f"  B = {_fmt_matrix(s.B)}\n")
        w(f"  C = {_fmt_matrix(C)}\n")
        for i in range(s.n):
            w(f"  y{i + 1}[{t + 1}] = {s.y[i].to_str(self.names)}\n")
        for i in range(s.n):
            zs = ", ".join(v.to_str(self.names) for v in s.z[i])
            w(f"  z{i + 1}[{t + 1}] = ({zs})\n")
        return C

    def step(self, k: int) -> bool:
        if not 1 <= k <= self.n:
            self.out.write(f"index {k} out of range 1..{self.n}; seed unchanged\n")
            return False
        C = self.show_current_c()
        try:
            eps = column_sign(C[:, k - 1])
            tag = f"{eps:+d}"
        except SignCoherenceError:
            tag = "undefined (column not sign-coherent)"
        self.seeds.append(mutate_seed(self.seeds[-1], k))
        self.ks.append(k)
        t = len(self.ks)
        self.out.write(f"mutation mu_{k} at t={t}: epsilon_{t} = {tag}\n")
        self.show(t)
        return True

    def show_current_c(self):
        traj = MutationTrajectory(tuple(self.seeds), tuple(self.ks))
        return c_matrices(traj, cross_check=False)[-1]


def _parse_steps(text: str) -> list[int]:
    text = text.strip()
    if not text:
        return []
    try:
        return [int(v) for v in text.replace(" ", "").split(",") if v]
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid step list {text!r}") from None


def cmd_mutate(args) -> int:
    try:
        cfg = _resolve(args.config)
    except ConfigError as e:
        return _fail(str(e))
    ex = _Explorer(cfg, sys.stdout)
    ex.show(0)
    steps = cfg.ks if args.steps is None else args.steps
    for k in steps:
        ex.step(k)
    if args.interactive:
        prompt = sys.stdin.isatty()
        while True:
            if prompt:
                sys.stdout.write(f"mutate (1..{ex.n}, q to quit)> ")
                sys.stdout.flush()
            line = sys.stdin.readline()
            if not line:
                break
            line = line.strip()
            if not line:
                continue
            if line in ("q", "quit", "exit"):
                break
            try:
                k = int(line)
            except ValueError:
                sys.stdout.write(f"not an index: {line!r}; seed unchanged\n")
                continue
            ex.step(k)
    return EXIT_OK


# ---------------------------------------------------------------- dilog

def _parse_z(text: str) -> tuple[Fraction, ...]:
    try:
        return tuple(Fraction(v.strip()) for v in text.split(","))
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"invalid coefficient list {text!r}") from None


def cmd_dilog(args) -> int:
    try:
        p = DilogParams(args.d, args.z)
    except ValueError as e:
        return _fail(str(e))
    if not check_generic(p):
        return _fail(f"exchange polynomial with z={','.join(map(str, p.z))} has a real root other than -1")
    if args.inf:
        val = rogers_inf(p)
    else:
        x = args.x
        if not math.isfinite(x):
            return _fail("--x must be finite; use --inf")
        if args.kind == "li2":
            if x > 1:
                return _fail("li2 is defined for x <= 1")
            val = li2_hd(x, p)
        else:
            if x < 0:
                return _fail("the Rogers function is defined for x >= 0")
            val = rogers_hd_tilde(x, p)
    print(f"{val:.12f}")
    return EXIT_OK


# ---------------------------------------------------------------- entry

def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="hdilog", description="Generalized cluster seeds and higher-degree dilogarithm identities.")
    sub = ap.add_subparsers(dest="cmd", required=True, parser_class=_Parser)

    v = sub.add_parser("verify", help="run the full verification battery")
    v.add_argument("config", help="JSON configuration or builtin fixture name")
    v.add_argument("--skip", action="append", default=[], choices=["quantum", "gid5", "gid6"],
                   help="skip a check (repeatable)")
    v.add_argument("--trials", type=int, help="random specializations per numerical identity")
    v.add_argument("--seed", type=int, help="PRNG seed")
    v.add_argument("--out", help="write the JSON report here")
    v.add_argument("--timings", action="store_true", help="include wall-clock timings in the report")
    v.add_argument("--no-x", action="store_true", help="do not track cluster variables in the period check")
    v.set_defaults(func=cmd_verify)

    m = sub.add_parser("mutate", help="print a mutation trajectory")
    m.add_argument("config", help="JSON configuration or builtin fixture name")
    m.add_argument("--steps", type=_parse_steps, help="comma-separated indices (default: the config sequence)")
    m.add_argument("--interactive", action="store_true", help="read further indices from standard input")
    m.set_defaults(func=cmd_mutate)

    d = sub.add_parser("dilog", help="evaluate a higher-degree dilogarithm")
    d.add_argument("--d", type=int, required=True, help="degree")
    d.add_argument("--z", type=_parse_z, required=True, help="coefficients z0,...,zd")
    g = d.add_mutually_exclusive_group()
    g.add_argument("--x", type=float, help="argument")
    g.add_argument("--inf", action="store_true", help="value of the Rogers function at infinity")
    d.add_argument("--kind", choices=["li2", "rogers"], default="li2",
                   help="function evaluated at --x (default li2)")
    d.set_defaults(func=cmd_dilog)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.cmd == "dilog" and args.x is None and not args.inf:
        # generic-condition failures take precedence over the missing argument
        try:
            p = DilogParams(args.d, args.z)
        except ValueError as e:
            return _fail(str(e))
        if not check_generic(p):
            return _fail("exchange polynomial has a real root other than -1")
        return _fail("one of --x or --inf is required")
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
