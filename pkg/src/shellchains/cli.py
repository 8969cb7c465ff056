"""
Command-line front end.

Subcommands::

    table     n_s against both oracles and the Lascar fill, one row per spec
    fill      build and verify fills for a spec or a serialized shell
    classify  RN/NR kind, minimality verdict and standard form of a chain

Exit codes: 0 ok, 1 mismatch between formula and oracles, 2 bad
configuration or input, 3 input violates a precondition.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import random
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Optional

from .chains import boundary
from .circle import ModelParams
from .errors import BudgetExhausted, NotMinimal, NotOneShellBoundary, NotRN, ShellChainsError
from .oracles import oracle_arithmetic, oracle_grid
from .rewriting import DEFAULT_BUDGET, ChainKind, classify, is_minimal, to_standard_rn
from .serialize import chain_from_json, chain_to_json
from .shells import (
    Shell1,
    ShellSpec,
    build_shell,
    construct_min_fill,
    fill_shell_lascar,
    n_s_of,
)

EXIT_OK, EXIT_MISMATCH, EXIT_CONFIG, EXIT_PRECONDITION = 0, 1, 2, 3
TABLE_COLUMNS = ["n", "k1", "k2", "k3", "k4", "n_s", "oracle_len", "lascar_len", "match"]


class ConfigError(ValueError):
    pass


@dataclass(frozen=True)
class RunConfig:
    command: str
    n_lo: int = 2
    n_hi: int = 6
    spec: Optional[tuple] = None
    oracle_max: int = 9
    budget: int = DEFAULT_BUDGET
    fmt: str = "csv"
    out: Optional[str] = None
    seed: int = 0
    jobs: int = 1

    def __post_init__(self):
        if self.n_lo < 2 or self.n_hi < self.n_lo:
            raise ConfigError(f"need 2 <= A <= B in --n A..B, got {self.n_lo}..{self.n_hi}")
        if self.oracle_max < 1 or self.oracle_max % 2 == 0:
            raise ConfigError("--oracle-max must be a positive odd number")
        if self.fmt not in ("csv", "json"):
            raise ConfigError("--format must be csv or json")
        if self.budget < 1 or self.jobs < 1:
            raise ConfigError("--budget and --jobs must be positive")


def parse_range(text: str) -> tuple:
    lo, sep, hi = text.partition("..")
    try:
        return (int(lo), int(hi)) if sep else (int(lo), int(lo))
    except ValueError:
        raise ConfigError(f"bad range {text!r}; expected A..B") from None


def parse_spec(text: str) -> tuple:
    try:
        k = tuple(int(v) for v in text.split(","))
    except ValueError:
        raise ConfigError(f"bad spec {text!r}; expected k1,k2,k3") from None
    if len(k) != 3:
        raise ConfigError(f"bad spec {text!r}; expected k1,k2,k3")
    return k


# --- table -------------------------------------------------------------------

def table_row(n: int, k1: int, k2: int, k3: int, oracle_max: int) -> dict:
    P = ModelParams(n)
    spec = ShellSpec(P, k1, k2, k3)
    ns = n_s_of(spec)
    arith = oracle_arithmetic(n, k1, k2, k3, oracle_max)
    grid = oracle_grid(n, k1, k2, k3, oracle_max)
    lascar = fill_shell_lascar(build_shell(spec), P).length
    return {
        "n": n,
        "k1": k1,
        "k2": k2,
        "k3": k3,
        "k4": spec.k4,
        "n_s": ns,
        "oracle_len": arith if arith == grid else None,
        "lascar_len": lascar,
        "match": arith == grid == ns and lascar >= ns,
    }


def _rows_for_n(args):
    n, oracle_max, spec = args
    specs = [spec] if spec else [(a, b, c) for a in range(n) for b in range(n) for c in range(n)]
    return [table_row(n, *k, oracle_max) for k in specs if all(0 <= v < n for v in k)]


def build_table(cfg: RunConfig) -> list:
    tasks = [(n, cfg.oracle_max, cfg.spec) for n in range(cfg.n_lo, cfg.n_hi + 1)]
    if cfg.jobs > 1:
        with ProcessPoolExecutor(cfg.jobs) as pool:
            chunks = list(pool.map(_rows_for_n, tasks))
    else:
        chunks = [_rows_for_n(t) for t in tasks]
    return [row for chunk in chunks for row in chunk]


def render_table(rows: list, fmt: str) -> str:
    if fmt == "json":
        return json.dumps([{k: r[k] for k in TABLE_COLUMNS} for r in rows], indent=1) + "\n"
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(TABLE_COLUMNS)
    for r in rows:
        w.writerow(["" if r[k] is None else str(r[k]).lower() if isinstance(r[k], bool) else r[k] for k in TABLE_COLUMNS])
    return buf.getvalue()


def cmd_table(cfg: RunConfig) -> int:
    rows = build_table(cfg)
    _emit(render_table(rows, cfg.fmt), cfg.out)
    return EXIT_OK if all(r["match"] for r in rows) else EXIT_MISMATCH


# --- fill --------------------------------------------------------------------

def _fill_entry(report, shell_chain, P) -> dict:
    return {
        "method": report.method,
        "length": report.length,
        "verified": boundary(report.chain) == shell_chain,
        "chain": chain_to_json(report.chain, P),
    }


def cmd_fill(cfg: RunConfig, shell_path: Optional[str] = None) -> int:
    if shell_path:
        data = _load_json(shell_path)
        try:
            shell_chain = chain_from_json(data)
            P = ModelParams(int(data["n"]))
            shell = Shell1.from_chain(shell_chain)
        except (KeyError, TypeError, ValueError) as exc:
            raise ConfigError(f"{shell_path}: not a serialized 1-shell ({exc})") from exc
        out = {"n": P.n, "fills": [_fill_entry(fill_shell_lascar(shell, P), shell.chain, P)]}
    else:
        if cfg.n_lo != cfg.n_hi:
            raise ConfigError("fill takes a single --n value")
        P = ModelParams(cfg.n_lo)
        # without --spec the residues are drawn from --seed
        rng = random.Random(cfg.seed)
        triple = cfg.spec or tuple(rng.randrange(P.n) for _ in range(3))
        try:
            spec = ShellSpec(P, *triple)
        except ValueError as exc:
            raise ConfigError(str(exc)) from exc
        shell = build_shell(spec)
        out = {
            "n": P.n,
            "spec": list(spec.triple),
            "seed": None if cfg.spec else cfg.seed,
            "k4": spec.k4,
            "n_s": n_s_of(spec),
            "shell": chain_to_json(shell.chain, P),
            "fills": [
                _fill_entry(construct_min_fill(spec, shell), shell.chain, P),
                _fill_entry(fill_shell_lascar(shell, P), shell.chain, P),
            ],
        }
    _emit(json.dumps(out, indent=1, sort_keys=True) + "\n", cfg.out)
    return EXIT_OK if all(f["verified"] for f in out["fills"]) else EXIT_MISMATCH


# --- classify ----------------------------------------------------------------

def cmd_classify(cfg: RunConfig, chain_path: str) -> int:
    data = _load_json(chain_path)
    try:
        P = ModelParams(int(data["n"])) if "n" in data else ModelParams(cfg.n_lo)
        c = chain_from_json(data, P)
    except (KeyError, TypeError, ValueError) as exc:
        raise ConfigError(f"{chain_path}: not a serialized chain ({exc})") from exc
    kind = classify(c)
    try:
        minimal = is_minimal(c, P, cfg.budget)
    except BudgetExhausted:
        minimal = "unknown"
    out = {"n": P.n, "kind": kind.value, "length": c.length, "minimal": minimal}
    if kind is ChainKind.RN:
        try:
            out["standard"] = chain_to_json(to_standard_rn(c, P), P)
        except (NotMinimal, NotRN) as exc:
            out["standard"] = None
            out["reason"] = str(exc)
    _emit(json.dumps(out, indent=1, sort_keys=True) + "\n", cfg.out)
    return EXIT_OK


# --- plumbing ----------------------------------------------------------------

def _load_json(path: str):
    try:
        with open(path) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise ConfigError(f"cannot read {path}: {exc}") from exc


def _emit(text: str, path: Optional[str]):
    if path:
        with open(path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="shellchains", description=__doc__.split("\n\n")[0])
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", default="2..6", help="rotation order range A..B (or a single N)")
    common.add_argument("--spec", help="residues k1,k2,k3")
    common.add_argument("--oracle-max", type=int, default=9)
    common.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    common.add_argument("--format", default="csv", choices=["csv", "json"])
    common.add_argument("--out")
    common.add_argument("--seed", type=int, default=0, help="draws the spec for fill when --spec is absent")
    common.add_argument("--jobs", type=int, default=1)
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("table", parents=[common], help="n_s table with oracle comparison")
    p_fill = sub.add_parser("fill", parents=[common], help="fill a shell")
    p_fill.add_argument("--shell", help="JSON file holding a 1-shell chain")
    p_cls = sub.add_parser("classify", parents=[common], help="classify a 2-chain")
    p_cls.add_argument("chain", help="JSON file holding a 2-chain")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        lo, hi = parse_range(args.n)
        cfg = RunConfig(
            command=args.command,
            n_lo=lo,
            n_hi=hi,
            spec=parse_spec(args.spec) if args.spec else None,
            oracle_max=args.oracle_max,
            budget=args.budget,
            fmt=args.format,
            out=args.out,
            seed=args.seed,
            jobs=args.jobs,
        )
        if cfg.command == "table":
            return cmd_table(cfg)
        if cfg.command == "fill":
            return cmd_fill(cfg, args.shell)
        return cmd_classify(cfg, args.chain)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except (NotOneShellBoundary, ShellChainsError) as exc:
        print(f"precondition failed: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
