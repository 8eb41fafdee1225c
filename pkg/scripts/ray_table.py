"""Tabulate the (sigma, tau) rays of one triple: verdict, stabilisation point and
the eventual polynomial of K along the ray.

    python scripts/ray_table.py --nu 4,3,1 --lambda 2,1,0 --mu 3,2,0 --nonzero-only
"""
import argparse

from lrstretch.core import all_permutations, parse_partition
from lrstretch.steinberg import Verdict, build_ray, classify_ray, find_stability_threshold


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--nu", required=True)
    ap.add_argument("--lambda", dest="lam", required=True)
    ap.add_argument("--mu", required=True)
    ap.add_argument("--t-max", type=int, default=60)
    ap.add_argument("--nonzero-only", action="store_true")
    args = ap.parse_args()

    k = max(len(s.split(",")) for s in (args.nu, args.lam, args.mu))
    nu, lam, mu = (parse_partition(s, k) for s in (args.nu, args.lam, args.mu))
    perms = all_permutations(k)
    counts = {v: 0 for v in Verdict}
    for s in perms:
        for t in perms:
            r = build_ray(s, t, nu, lam, mu)
            c = classify_ray(r)
            counts[c.verdict] += 1
            if args.nonzero_only and c.verdict is Verdict.EVENTUALLY_ZERO:
                continue
            stab = find_stability_threshold(r, args.t_max)
            tail = "not stabilised" if stab is None else f"N={stab.threshold} K={stab.polynomial}"
            sign = "+" if s.sign * t.sign > 0 else "-"
            print(f"{sign} sigma={s.one_line()} tau={t.one_line()} beta={list(r.beta)} gamma={list(r.gamma)} {c.verdict.value} {tail}")
    print({v.value: n for v, n in counts.items()})


if __name__ == "__main__":
    main()
