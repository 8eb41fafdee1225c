"""Command-line entry point: ``lr-stretch {lr,stretch,kostant,rays,selftest}``.

Exit codes: 0 success, 1 input error, 2 internal disagreement (a bug signal).
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass

from .core import DEFAULT_K_CAP, Partition, make_partition, parse_vector
from .errors import LRError, ResourceLimit
from .hive import DEFAULT_NODE_CAP
from .kostant import kostant, kostant_nonzero
from .steinberg import ray_report
from .stretch import METHODS, SCHEMA, StretchVerdict, certify_polynomiality, lr_coefficient
from .sweep import cross_method_sweep, prefix_criterion_violations

EXIT_OK, EXIT_INPUT, EXIT_DISAGREE = 0, 1, 2


@dataclass(frozen=True)
class RunConfig:
    k_cap: int = DEFAULT_K_CAP
    node_cap: int = DEFAULT_NODE_CAP
    threads: int = 1
    fmt: str = "text"
    seed: int = 0

    def __post_init__(self):
        if min(self.k_cap, self.node_cap, self.threads) < 1:
            raise ValueError("caps and thread count must be positive")

    @property
    def caps(self) -> dict:
        return {"k_cap": self.k_cap, "node_cap": self.node_cap}


def _emit(obj: dict):
    print(json.dumps(obj, indent=2, sort_keys=True))


def _triple(args) -> tuple[Partition, Partition, Partition]:
    texts = [args.nu, args.lam, args.mu]
    parts = [[int(s) for s in t.split(",")] if t.strip() else [] for t in texts]
    k = args.k or max(1, *(len(p) for p in parts))
    return tuple(make_partition(p, k) for p in parts)


def cmd_lr(args, cfg: RunConfig) -> int:
    nu, lam, mu = _triple(args)
    methods = METHODS if args.method == "all" else (args.method,)
    values = {m: lr_coefficient(nu, lam, mu, m, **cfg.caps) for m in methods}
    agree = len(set(values.values())) == 1
    if cfg.fmt == "json":
        _emit({"schema": SCHEMA, "nu": list(nu), "lambda": list(lam), "mu": list(mu),
               "values": values, "agreement": agree})
    else:
        for m, v in values.items():
            print(f"{m}: {v}")
        if len(values) > 1:
            print(f"agreement: {str(agree).lower()}")
    return EXIT_OK if agree else EXIT_DISAGREE


def cmd_stretch(args, cfg: RunConfig) -> int:
    nu, lam, mu = _triple(args)
    report = certify_polynomiality(nu, lam, mu, holdout=args.holdout, method=args.method,
                                   threads=cfg.threads, **cfg.caps)
    if cfg.fmt == "json":
        print(report.to_json())
    elif cfg.fmt == "csv":
        sys.stdout.write(report.to_csv())
    else:
        print(f"C^(t{nu.to_text()})_(t{lam.to_text()}),(t{mu.to_text()}) = {report.fitted}")
        print(f"degree {report.fitted.degree} (bound {report.degree_bound}), "
              f"verified on t={report.verified_range[0]}..{report.verified_range[1]}: {report.verdict.value}")
        if report.verdict is not StretchVerdict.POLYNOMIAL:
            print(report.note)
    return EXIT_OK if report.verdict is StretchVerdict.POLYNOMIAL else EXIT_DISAGREE


def cmd_kostant(args, cfg: RunConfig) -> int:
    v = parse_vector(args.v)
    value = kostant(v)
    if cfg.fmt == "json":
        nonzero = kostant_nonzero(v) if sum(v) == 0 else False
        _emit({"schema": SCHEMA, "v": list(v), "value": value, "prefix_nonnegative": nonzero})
    else:
        print(value)
    return EXIT_OK


def cmd_rays(args, cfg: RunConfig) -> int:
    nu, lam, mu = _triple(args)
    rays = ray_report(nu, lam, mu, t_max=args.t_max, k_cap=cfg.k_cap)
    if cfg.fmt == "json":
        _emit({"schema": SCHEMA, "nu": list(nu), "lambda": list(lam), "mu": list(mu),
               "t_max": args.t_max, "rays": rays})
    else:
        for r in rays:
            print(f"sigma={r['sigma']} tau={r['tau']} sign={r['sign']:+d} beta={r['beta']} "
                  f"gamma={r['gamma']} {r['verdict']} witness={r['witness_index']} N={r['threshold']}")
        print(f"{len(rays)} rays")
    return EXIT_OK


def cmd_selftest(args, cfg: RunConfig) -> int:
    summary = cross_method_sweep(args.k, args.max_weight, args.max_weight, threads=cfg.threads)
    prefix_bad = prefix_criterion_violations(min(args.k, 4))
    ok = summary.ok and not prefix_bad
    if cfg.fmt == "json":
        _emit({"schema": SCHEMA, "k_max": args.k, "max_weight": args.max_weight,
               "triples": summary.triples, "nonzero": summary.nonzero,
               "disagreements": summary.disagreements, "prefix_criterion_violations": [list(v) for v in prefix_bad],
               "ok": ok})
    else:
        print(f"{summary.triples} triples ({summary.nonzero} non-zero), "
              f"{len(summary.disagreements)} disagreements, {len(prefix_bad)} prefix-criterion violations")
    return EXIT_OK if ok else EXIT_DISAGREE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="lr-stretch", description=__doc__.splitlines()[0])
    parser.add_argument("--format", dest="fmt", choices=("text", "json", "csv"), default="text")
    parser.add_argument("--threads", type=int, default=None,
                        help="worker processes (default: $LR_STRETCH_THREADS or 1)")
    parser.add_argument("--k-cap", type=int, default=DEFAULT_K_CAP)
    parser.add_argument("--node-cap", type=int, default=DEFAULT_NODE_CAP)
    parser.add_argument("--seed", type=int, default=0)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_triple(p):
        p.add_argument("--nu", required=True)
        p.add_argument("--lambda", dest="lam", required=True)
        p.add_argument("--mu", required=True)
        p.add_argument("--k", type=int, default=None, help="ambient length (default: longest input)")

    p = sub.add_parser("lr", help="one coefficient")
    add_triple(p)
    p.add_argument("--method", choices=METHODS + ("all",), default="all")
    p.set_defaults(func=cmd_lr)

    p = sub.add_parser("stretch", help="fit and certify the stretched polynomial")
    add_triple(p)
    p.add_argument("--holdout", type=int, default=5)
    p.add_argument("--method", choices=METHODS, default="hive")
    p.set_defaults(func=cmd_stretch)

    p = sub.add_parser("kostant", help="Kostant partition function")
    p.add_argument("--v", required=True)
    p.set_defaults(func=cmd_kostant)

    p = sub.add_parser("rays", help="classify all (sigma, tau) rays")
    add_triple(p)
    p.add_argument("--t-max", type=int, default=60)
    p.set_defaults(func=cmd_rays)

    p = sub.add_parser("selftest", help="cross-method sweep plus prefix-criterion check")
    p.add_argument("--k", type=int, default=4)
    p.add_argument("--max-weight", type=int, default=6, help="bound on |lambda| and on |mu|")
    p.set_defaults(func=cmd_selftest)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    threads = args.threads if args.threads is not None else int(os.environ.get("LR_STRETCH_THREADS", "1"))
    try:
        cfg = RunConfig(args.k_cap, args.node_cap, threads, args.fmt, args.seed)
        return args.func(args, cfg)
    except (LRError, ResourceLimit, ValueError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
