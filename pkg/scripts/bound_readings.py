"""Crossover of the explicit m-bound under each reading of the final inequality,
next to the published m <= 221, n <= 1386.

    python scripts/bound_readings.py --scan-limit 3000
"""
import argparse

from narayana_brocard.bounds import PUBLISHED_M_MAX, PUBLISHED_N_MAX, all_readings, lhs, n_bound


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--scan-limit", type=int, default=1500)
    args = ap.parse_args()

    print(f"published: m <= {PUBLISHED_M_MAX}, n <= {PUBLISHED_N_MAX}; n bound recomputed at m = {PUBLISHED_M_MAX}: {n_bound(PUBLISHED_M_MAX)}")
    print(f"L(221) = {lhs(221)}, L(222) = {lhs(222)}: any right side in [9, 10) near m = 221 would give 221")
    for r in all_readings(args.scan_limit):
        if r.m_max is None:
            print(f"{r.reading:>8}: no crossover up to m = {r.scan_limit}")
            continue
        print(f"{r.reading:>8}: m <= {r.m_max}, n <= {r.n_max}  (deviation {r.m_deviation:+d})")
        for t in r.trace:
            print(f"          m={t.m:<5} L={t.lhs:<4} rhs~{float(t.rhs[0]):.6f}  {'holds' if t.holds else 'fails'}")


if __name__ == "__main__":
    main()
