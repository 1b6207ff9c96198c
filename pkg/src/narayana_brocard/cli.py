"""Command-line front end.

Exit codes: 0 clean, 1 discrepancies (or unexpected solutions), 2 usage error.
"""
from __future__ import annotations

import argparse
import sys
import time
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

from narayana_brocard import __version__
from narayana_brocard import bounds as bnd
from narayana_brocard.brocard import certify_nonsolution, check_certificate, combined_v3_upper, search_general, search_narayana
from narayana_brocard.core import alpha, check_growth_bounds, iter_mod, narayana_fast, narayana_mod, narayana_window
from narayana_brocard.laws import (
    CONGRUENCE_FAMILIES,
    ResidueRule,
    ShiftV3,
    TableDefect,
    Target,
    ValuationLaw,
    Variant,
    divisibility_check,
    get_law,
    law_eval,
    v3_oracle,
    verify_congruences,
    verify_law,
)
from narayana_brocard.padic import vp_factorial, vp_factorial_bounds
from narayana_brocard.report import RunReport

CLASSICAL_SOLUTIONS = [(4, 5), (5, 11), (7, 71)]

Outcome = Tuple[Dict[str, Any], List[Any]]


class UsageError(Exception):
    pass


def _nonneg(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be non-negative: {value}")
    return value


def _positive(text: str) -> int:
    value = _nonneg(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be positive")
    return value


def _law_rows(report, law: ValuationLaw) -> List[Dict[str, Any]]:
    return [
        {
            "index": e.index,
            "class": f"{e.index % law.period} mod {law.period}",
            "law_value": "defect" if e.law_value is None else e.law_value,
            "oracle_value": e.oracle_value,
        }
        for e in report.entries
    ]


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------


def cmd_seq(args) -> Outcome:
    if args.start > args.stop:
        raise UsageError("--from must not exceed --to")
    if args.mod is not None:
        if args.mod < 2:
            raise UsageError("--mod must be >= 2")
        rows = [{"index": i, "value": v} for i, v in iter_mod(args.start, args.stop + 1, args.mod)]
    else:
        w = narayana_window(args.start)
        rows = []
        for i in range(args.start, args.stop + 1):
            rows.append({"index": i, "value": w.values[0]})
            w = w.advance()
    return {"rows": rows}, []


def cmd_term(args) -> Outcome:
    if args.mod is not None:
        if args.mod < 2:
            raise UsageError("--mod must be >= 2")
        return {"index": args.index, "modulus": args.mod, "value": narayana_mod(args.index, args.mod)}, []
    return {"index": args.index, "value": narayana_fast(args.index)}, []


def cmd_val(args) -> Outcome:
    law = get_law(args.target, args.law)
    result: Dict[str, Any] = {"law": law.name, "variant": law.variant, "class": f"{args.index % law.period} mod {law.period}"}
    discrepancies: List[Any] = []
    try:
        result["law_value"] = law_eval(law, args.index)
        result["rule"] = law.matching(args.index)[0].describe()
    except TableDefect as exc:
        result["law_value"] = None
        discrepancies.append({"index": args.index, "defect": str(exc)})
    if args.oracle:
        ov = v3_oracle(args.target, args.index)
        result["oracle_value"] = ov
        if result["law_value"] is not None and ov != result["law_value"]:
            discrepancies.append({"index": args.index, "law_value": result["law_value"], "oracle_value": ov})
    return result, discrepancies


def cmd_verify_laws(args) -> Outcome:
    law = get_law(args.target, args.table)
    report = verify_law(law, args.max, args.cap, jobs=args.jobs)
    rows = _law_rows(report, law)
    result = {
        "law": law.name,
        "variant": law.variant,
        "checked": report.checked,
        "total_cover": law.is_total(),
        "defect_classes": [f"{c} mod {m}" for c, m in report.defect_classes()],
        "mismatch_classes": [f"{c} mod {m}" for c, m in report.mismatch_classes()],
        "rows": rows,
    }
    return result, rows


def cmd_verify_congruences(args) -> Outcome:
    report = verify_congruences(args.prop, args.s_max, args.n_max, args.index_limit)
    result = {
        "family": args.prop,
        "claims": [c.describe() for c in CONGRUENCE_FAMILIES[args.prop]],
        "checked": report.checked,
        "mismatches": report.entries,
    }
    return result, list(report.entries)


def cmd_corollary(args) -> Outcome:
    report = divisibility_check(args.max)
    return {"checked": report.checked, "entries": report.entries}, list(report.entries)


def cmd_growth(args) -> Outcome:
    violations = check_growth_bounds(args.max)
    return {"checked": [1, args.max], "violations": violations}, list(violations)


def cmd_alpha(args) -> Outcome:
    if args.bits < 8:
        raise UsageError("--bits must be >= 8")
    a = alpha(args.bits)
    return {"lower": a.lower, "upper": a.upper, "width": a.width, "lower_float": float(a.lower)}, []


def cmd_padic(args) -> Outcome:
    if args.m < 1:
        raise UsageError("--m must be >= 1")
    lower, upper = vp_factorial_bounds(args.m, args.p)
    v = vp_factorial(args.m, args.p)
    discrepancies = [] if lower <= v <= upper else [{"m": args.m, "p": args.p, "value": v}]
    return {"m": args.m, "p": args.p, "valuation": v, "lower": lower, "upper": upper}, discrepancies


def _bound_payload(r: bnd.BoundResult) -> Dict[str, Any]:
    return {
        "reading": r.reading,
        "m_max": r.m_max,
        "n_max": r.n_max,
        "first_failure": r.first_failure,
        "scan_limit": r.scan_limit,
        "initial_segment": r.initial_segment,
        "m_deviation": r.m_deviation,
        "n_deviation": r.n_deviation,
        "within_tolerance": r.within_tolerance,
        "trace": [
            {"m": t.m, "lhs": t.lhs, "rhs_lo": float(t.rhs[0]), "rhs_hi": float(t.rhs[1]), "holds": t.holds}
            for t in r.trace
        ],
    }


def cmd_bounds(args) -> Outcome:
    results = bnd.all_readings(args.scan_limit)
    headline = results[0]
    result: Dict[str, Any] = {
        "m_max": headline.m_max,
        "n_max": headline.n_max,
        "reading": headline.reading,
        "published": {"m_max": bnd.PUBLISHED_M_MAX, "n_max": bnd.PUBLISHED_N_MAX},
        "n_max_from_published_m": bnd.n_bound(bnd.PUBLISHED_M_MAX),
        "published_search_covers": headline.n_max is not None and headline.n_max <= bnd.PUBLISHED_N_MAX,
        "readings": [_bound_payload(r) for r in results],
    }
    discrepancies = [
        {
            "reading": r.reading,
            "m_max": r.m_max,
            "m_deviation": r.m_deviation,
            "n_max": r.n_max,
            "n_deviation": r.n_deviation,
            "within_tolerance": r.within_tolerance,
        }
        for r in results
        if not r.matches_published
    ]
    return result, discrepancies


def cmd_search(args) -> Outcome:
    if args.n_max < 4:
        raise UsageError("--n-max must be >= 4")
    outcome = search_narayana(args.n_max, jobs=args.jobs)
    result: Dict[str, Any] = {"scanned": outcome.scanned, "solutions": outcome.solutions, "stats": outcome.stats}
    discrepancies: List[Any] = [{"m": m, "u": u} for m, u in outcome.solutions]
    if args.certificates:
        certs = []
        for n in range(4, args.n_max + 1):
            c = certify_nonsolution(n)
            if c is None or not check_certificate(c):
                discrepancies.append({"n": n, "certificate": None})
                continue
            certs.append({"n": n, "m_below": c.m_below, "v3": c.combined_v3, "valuation_excludes": c.valuation_excludes})
        result["certificates"] = certs
    return result, discrepancies


def cmd_search_general(args) -> Outcome:
    outcome = search_general(args.m_max)
    expected = [s for s in CLASSICAL_SOLUTIONS if s[0] <= args.m_max]
    discrepancies = [{"m": m, "u": u} for m, u in outcome.solutions if (m, u) not in expected]
    discrepancies += [{"missing": s} for s in expected if s not in outcome.solutions]
    return {"scanned": outcome.scanned, "solutions": outcome.solutions, "stats": outcome.stats}, discrepancies


def cmd_certify(args) -> Outcome:
    if args.n < 4:
        raise UsageError("--n must be >= 4")
    c = certify_nonsolution(args.n)
    if c is None:
        return {"n": args.n, "certificate": None}, [{"n": args.n, "solution": True}]
    valid = check_certificate(c)
    return {
        "n": c.n,
        "t": c.t,
        "m_below": c.m_below,
        "combined_v3": c.combined_v3,
        "predicted_v3": combined_v3_upper(args.n),
        "factorial_v3": [{"m": m, "v3": v} for m, v in c.valuations],
        "valuation_excludes": c.valuation_excludes,
        "checked": valid,
    }, ([] if valid else [{"n": args.n, "certificate": "invalid"}])


# alternative reading of the 19 mod 24 row, with offset 15 as in the bound derivation
_ALT_19 = ValuationLaw(
    "v3(a-1), offset 15 at 19 mod 24",
    Target.A_MINUS_1,
    Variant.LITERAL,
    tuple(r if r.residue != 19 or r.modulus != 24 else ResidueRule(24, 19, ShiftV3(15, 2))
          for r in get_law(Target.A_MINUS_1, Variant.LITERAL).rules),
)


def cmd_errata(args) -> Outcome:
    sections = []
    discrepancies: List[Any] = []
    for target in Target:
        literal = get_law(target, Variant.LITERAL)
        corrected = get_law(target, Variant.CORRECTED)
        lit = verify_law(literal, args.max)
        cor = verify_law(corrected, args.max)
        changed = sorted(set(r.describe() for r in literal.rules) ^ set(r.describe() for r in corrected.rules))
        sections.append({
            "target": target,
            "law": literal.name,
            "literal_total_cover": literal.is_total(),
            "literal_entries": len(lit.entries),
            "literal_defect_classes": [f"{c} mod {m}" for c, m in lit.defect_classes()],
            "literal_mismatch_classes": [f"{c} mod {m}" for c, m in lit.mismatch_classes()],
            "literal_examples": lit.entries[:4],
            "edited_rules": changed,
            "corrected_table": [r.describe() for r in corrected.rules],
            "corrected_entries": len(cor.entries),
        })
        discrepancies.extend(cor.entries)
    alt = verify_law(_ALT_19, args.max)
    result = {
        "checked": [1, args.max],
        "laws": sections,
        "alternative_readings": [{"law": _ALT_19.name, "entries": len(alt.entries), "examples": alt.entries[:3]}],
        "rows": [
            {"law": s["law"], "rule": rule}
            for s in sections for rule in s["corrected_table"]
        ],
    }
    return result, discrepancies


COMMANDS: Dict[str, Callable[[Any], Outcome]] = {
    "seq": cmd_seq,
    "term": cmd_term,
    "val": cmd_val,
    "verify-laws": cmd_verify_laws,
    "verify-congruences": cmd_verify_congruences,
    "corollary": cmd_corollary,
    "growth": cmd_growth,
    "alpha": cmd_alpha,
    "padic": cmd_padic,
    "bounds": cmd_bounds,
    "search": cmd_search,
    "search-general": cmd_search_general,
    "certify": cmd_certify,
    "errata": cmd_errata,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv", "plain"), default=argparse.SUPPRESS)
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS, help="reserved; unused")
    common.add_argument("--quiet", action="store_true", default=argparse.SUPPRESS)

    parser = argparse.ArgumentParser(prog="narayana-brocard", parents=[common], description=__doc__)
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def add(name: str, help: str) -> argparse.ArgumentParser:
        return sub.add_parser(name, parents=[common], help=help)

    p = add("seq", "list a_n for a range of indices")
    p.add_argument("--from", dest="start", type=_nonneg, required=True)
    p.add_argument("--to", dest="stop", type=_nonneg, required=True)
    p.add_argument("--mod", type=int)

    p = add("term", "single term a_n by index doubling")
    p.add_argument("--index", type=_nonneg, required=True)
    p.add_argument("--mod", type=int)

    p = add("val", "3-adic valuation law at one index")
    p.add_argument("--target", choices=[t.value for t in Target], required=True)
    p.add_argument("--index", type=_nonneg, required=True)
    p.add_argument("--law", choices=[v.value for v in Variant], default="corrected")
    p.add_argument("--oracle", action="store_true")

    p = add("verify-laws", "compare a valuation law with the oracle")
    p.add_argument("--target", choices=[t.value for t in Target], required=True)
    p.add_argument("--max", type=_positive, required=True)
    p.add_argument("--table", choices=[v.value for v in Variant], default="corrected")
    p.add_argument("--cap", type=_positive, default=16)
    p.add_argument("--jobs", type=_positive, default=1)

    p = add("verify-congruences", "check the congruence families mod 3^(n+3) / 3^(n+4)")
    p.add_argument("--prop", choices=sorted(CONGRUENCE_FAMILIES), required=True)
    p.add_argument("--s-max", type=_positive, required=True)
    p.add_argument("--n-max", type=_positive, required=True)
    p.add_argument("--index-limit", type=_positive)

    p = add("corollary", "a_i = 0 mod 9 for i = 16, 21 mod 24; a_i = 0 mod 3 for i = 7 mod 24")
    p.add_argument("--max", type=_positive, required=True)

    p = add("growth", "certify alpha^(n-3) <= a_n <= alpha^(n-1)")
    p.add_argument("--max", type=_positive, required=True)

    p = add("alpha", "bracket the real root of x^3 - x^2 - 1")
    p.add_argument("--bits", type=_positive, default=64)

    p = add("padic", "v_p(m!) with its Legendre-type bounds")
    p.add_argument("--m", type=_nonneg, required=True)
    p.add_argument("--p", type=_positive, default=3)

    p = add("bounds", "derive the explicit bounds on m and n")
    p.add_argument("--scan-limit", type=_positive, default=1500)

    p = add("search", "search a_n^2 - 1 = m! for 4 <= n <= N")
    p.add_argument("--n-max", type=_nonneg, required=True)
    p.add_argument("--jobs", type=_positive, default=1)
    p.add_argument("--certificates", action="store_true")

    p = add("search-general", "search m! + 1 = u^2 for m <= M")
    p.add_argument("--m-max", type=_positive, required=True)

    p = add("certify", "non-solution certificate for one index")
    p.add_argument("--n", type=_nonneg, required=True)

    p = add("errata", "literal vs corrected valuation tables")
    p.add_argument("--max", type=_positive, default=10_000)

    return parser


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    fmt = getattr(args, "format", "plain")
    quiet = getattr(args, "quiet", False)
    params = {k: v for k, v in vars(args).items() if k not in ("command", "format", "quiet")}
    started = time.perf_counter()
    try:
        result, discrepancies = COMMANDS[args.command](args)
    except (UsageError, ValueError) as exc:
        print(f"{parser.prog} {args.command}: error: {exc}", file=sys.stderr)
        return 2
    report = RunReport(
        command=args.command,
        params=params,
        result=result,
        discrepancies=discrepancies,
        elapsed_ms=(time.perf_counter() - started) * 1000,
        version=__version__,
    )
    if not quiet:
        print(report.render(fmt))
    return report.exit_code


def main() -> None:
    sys.exit(run())
