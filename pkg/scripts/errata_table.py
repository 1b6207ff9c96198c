"""Print the literal and corrected 3-adic valuation tables side by side,
with the oracle's verdict on each residue class.

    python scripts/errata_table.py --max 100000
"""
import argparse
from collections import Counter

from narayana_brocard.laws import Target, Variant, get_law, verify_law


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max", type=int, default=20_000)
    args = ap.parse_args()

    for target in Target:
        literal = get_law(target, Variant.LITERAL)
        corrected = get_law(target, Variant.CORRECTED)
        lit = verify_law(literal, args.max)
        cor = verify_law(corrected, args.max)
        bad = Counter(e.index % 24 for e in lit.entries)
        print(f"## v3({target.value})  [{literal.name}]  indices 1..{args.max}")
        print(f"{'class':>10}  {'literal':<24} {'corrected':<24} literal errors")
        for c in range(24):
            lr = [r.formula.describe() for r in literal.matching(c)] or ["(none)"]
            cr = [r.formula.describe() for r in corrected.matching(c)]
            print(f"{c:>4} mod 24  {' | '.join(lr):<24} {' | '.join(cr):<24} {bad.get(c, 0)}")
        print(f"corrected table discrepancies: {len(cor.entries)}\n")


if __name__ == "__main__":
    main()
