"""Run the hive / Steinberg / tableaux agreement sweep and report timings.

    python scripts/cross_method_sweep.py --k 4 --max-lambda 6 --max-mu 6
"""
import argparse
import json
import time

from lrstretch.sweep import cross_method_sweep


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--k", type=int, default=4)
    ap.add_argument("--max-lambda", type=int, default=6)
    ap.add_argument("--max-mu", type=int, default=6)
    ap.add_argument("--threads", type=int, default=1)
    args = ap.parse_args()

    start = time.perf_counter()
    summary = cross_method_sweep(args.k, args.max_lambda, args.max_mu, threads=args.threads)
    elapsed = time.perf_counter() - start
    print(json.dumps({
        "k_max": args.k,
        "triples": summary.triples,
        "nonzero": summary.nonzero,
        "disagreements": summary.disagreements,
        "seconds": round(elapsed, 2),
    }, indent=2))
    raise SystemExit(0 if summary.ok else 2)


if __name__ == "__main__":
    main()
