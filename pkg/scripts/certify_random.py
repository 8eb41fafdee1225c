"""Certify stretched polynomials on seeded random triples and print a table.

    python scripts/certify_random.py --n 20 --ks 3 4 --max-weight 16 --seed 2024
"""
import argparse
import csv
import sys

from lrstretch.stretch import StretchVerdict, certify_polynomiality
from lrstretch.sweep import random_triples


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--n", type=int, default=20)
    ap.add_argument("--ks", type=int, nargs="+", default=[3, 4])
    ap.add_argument("--max-weight", type=int, default=16)
    ap.add_argument("--seed", type=int, default=2024)
    ap.add_argument("--holdout", type=int, default=5)
    ap.add_argument("--method", default="hive")
    ap.add_argument("--uniform", action="store_true", help="draw nu uniformly instead of weighted by C")
    args = ap.parse_args()

    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(["nu", "lambda", "mu", "C", "polynomial", "degree", "bound", "verdict"])
    failed = 0
    for nu, lam, mu in random_triples(args.n, tuple(args.ks), args.max_weight, args.seed, weighted=not args.uniform):
        r = certify_polynomiality(nu, lam, mu, holdout=args.holdout, method=args.method)
        failed += r.verdict is not StretchVerdict.POLYNOMIAL
        writer.writerow([nu.to_text(), lam.to_text(), mu.to_text(), r.samples[1][1], str(r.fitted),
                         r.fitted.degree, r.degree_bound, r.verdict.value])
    raise SystemExit(2 if failed else 0)


if __name__ == "__main__":
    main()
