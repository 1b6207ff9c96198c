"""3-adic valuation laws for a_i, a_i - 1 and a_i + 1, and their oracle.

A law is a list of residue rules ``i = residue (mod modulus) -> formula(i)``.
Two variants are kept for each target: the table exactly as printed in the
original typesetting (``LITERAL``) and the table that agrees with brute force
(``CORRECTED``). The oracle reads valuations off a_i mod 3**cap and is
completely independent of the tables.
"""
from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, List, Optional, Sequence, Tuple, Union

from narayana_brocard.core import iter_mod, narayana_fast, narayana_mod, narayana_window_mod
from narayana_brocard.padic import INFINITY, Valuation, vp

# Oracle cap policy: residues are taken mod 3**cap; saturation doubles cap up to this.
MAX_CAP = 64
DEFAULT_CAP = 8


class Target(str, Enum):
    A = "a"
    A_MINUS_1 = "a-1"
    A_PLUS_1 = "a+1"

    @property
    def shift(self) -> int:
        return {"a": 0, "a-1": -1, "a+1": 1}[self.value]


class Variant(str, Enum):
    LITERAL = "literal"
    CORRECTED = "corrected"


# ---------------------------------------------------------------------------
# formulas
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Constant:
    c: int

    def __call__(self, i: int) -> Valuation:
        return self.c

    def describe(self) -> str:
        return str(self.c)


def _shift(offset: int) -> str:
    return f"i{offset:+d}" if offset else "i"


@dataclass(frozen=True)
class ShiftV3:
    """v3(i + offset) + addend"""

    offset: int
    addend: int

    def __call__(self, i: int) -> Valuation:
        return vp(i + self.offset, 3) + self.addend

    def describe(self) -> str:
        return f"v3({_shift(self.offset)})+{self.addend}"


@dataclass(frozen=True)
class ProductV3:
    """v3(prod(i + offset_j)) + addend"""

    offsets: Tuple[int, ...]
    addend: int

    def __call__(self, i: int) -> Valuation:
        return vp(math.prod(i + o for o in self.offsets), 3) + self.addend

    def describe(self) -> str:
        inner = "".join(f"({_shift(o)})" for o in self.offsets)
        return f"v3({inner})+{self.addend}"


@dataclass(frozen=True)
class ShiftV2:
    """v2(i + offset) + addend"""

    offset: int
    addend: int

    def __call__(self, i: int) -> Valuation:
        return vp(i + self.offset, 2) + self.addend

    def describe(self) -> str:
        return f"v2({_shift(self.offset)})+{self.addend}"


Formula = Union[Constant, ShiftV3, ProductV3, ShiftV2]


@dataclass(frozen=True)
class ResidueRule:
    modulus: int
    residue: int
    formula: Formula

    def __post_init__(self) -> None:
        if not 0 <= self.residue < self.modulus:
            raise ValueError(f"residue {self.residue} outside [0, {self.modulus})")

    def matches(self, i: int) -> bool:
        return i % self.modulus == self.residue

    def describe(self) -> str:
        return f"i = {self.residue} mod {self.modulus}: {self.formula.describe()}"


class TableDefect(ValueError):
    """An index matched no rule, or more than one, in a law table."""

    def __init__(self, law: "ValuationLaw", i: int, matched: Sequence[ResidueRule]) -> None:
        self.index = i
        self.residue_class = (i % law.period, law.period)
        self.matched = list(matched)
        what = "no rule covers" if not matched else f"{len(matched)} rules match"
        super().__init__(f"{law.name}: {what} i = {i % law.period} mod {law.period}")


@dataclass(frozen=True)
class ValuationLaw:
    name: str
    target: Target
    variant: Variant
    rules: Tuple[ResidueRule, ...]

    @property
    def period(self) -> int:
        return math.lcm(*(r.modulus for r in self.rules))

    def matching(self, i: int) -> List[ResidueRule]:
        return [r for r in self.rules if r.matches(i)]

    def coverage(self) -> Dict[int, int]:
        """Number of matching rules for each residue class mod the period."""
        return {c: len(self.matching(c)) for c in range(self.period)}

    def is_total(self) -> bool:
        return all(k == 1 for k in self.coverage().values())


def _rules(modulus: int, residues: Sequence[int], formula: Formula) -> List[ResidueRule]:
    return [ResidueRule(modulus, r, formula) for r in residues]


def _law_a(variant: Variant) -> ValuationLaw:
    shift = ShiftV2 if variant is Variant.LITERAL else ShiftV3
    rules = [
        *_rules(8, (1, 2, 3, 4, 6), Constant(0)),
        *_rules(24, (5, 7, 13, 15), Constant(1)),
        ResidueRule(24, 8, Constant(2)),
        ResidueRule(24, 23, shift(1, 1)),
        ResidueRule(24, 21, shift(3, 1)),
        ResidueRule(24, 0, shift(0, 2)),
    ]
    # the printed table repeats the class 0 mod 24 and leaves 16 mod 24 uncovered
    last = 0 if variant is Variant.LITERAL else 16
    rules.append(ResidueRule(24, last, shift(8, 2)))
    return ValuationLaw("v3(a)", Target.A, variant, tuple(rules))


def _law_a_minus_1(variant: Variant) -> ValuationLaw:
    rules = [
        *_rules(8, (0, 4, 5, 7), Constant(0)),
        ResidueRule(8, 1, ShiftV3(-1, 1)),
        ResidueRule(8, 6, ShiftV3(2, 1)),
        ResidueRule(24, 2, ShiftV3(-2, 2)),
        ResidueRule(24, 10, Constant(2)),
        ResidueRule(24, 18, ProductV3((6, 30), 2)),
        ResidueRule(24, 3, ShiftV3(-3, 2)),
        ResidueRule(24, 11, ShiftV3(13, 2)),
        ResidueRule(24, 19, ShiftV3(5, 2)),
    ]
    return ValuationLaw("v3(a-1)", Target.A_MINUS_1, variant, tuple(rules))


def _law_a_plus_1(variant: Variant) -> ValuationLaw:
    rules = [
        *_rules(8, (0, 1, 2, 3, 5, 6, 7), Constant(0)),
        *_rules(24, (4, 12), Constant(1)),
        ResidueRule(24, 20, ShiftV3(4, 1)),
    ]
    return ValuationLaw("v3(a+1)", Target.A_PLUS_1, variant, tuple(rules))


_BUILDERS = {Target.A: _law_a, Target.A_MINUS_1: _law_a_minus_1, Target.A_PLUS_1: _law_a_plus_1}


def get_law(target: Union[Target, str], variant: Union[Variant, str] = Variant.CORRECTED) -> ValuationLaw:
    return _BUILDERS[Target(target)](Variant(variant))


def law_eval(law: ValuationLaw, i: int) -> Valuation:
    """Value of the unique rule matching i; TableDefect if not unique."""
    if i < 0:
        raise ValueError("index must be non-negative")
    matched = law.matching(i)
    if len(matched) != 1:
        raise TableDefect(law, i, matched)
    return matched[0].formula(i)


# ---------------------------------------------------------------------------
# oracle
# ---------------------------------------------------------------------------


class OracleCapExceeded(RuntimeError):
    pass


def _residue_valuation(r: int, cap: int) -> Optional[int]:
    """v3 of a residue mod 3**cap, or None when it is 0 (valuation >= cap)."""
    if r == 0:
        return None
    return int(vp(r, 3))


def v3_residue(target: Union[Target, str], i: int, cap: int) -> Optional[int]:
    """v3(a_i + shift) if it is below cap, else None."""
    if cap < 1:
        raise ValueError("cap must be >= 1")
    target = Target(target)
    modulus = 3**cap
    return _residue_valuation((narayana_mod(i, modulus) + target.shift) % modulus, cap)


def v3_oracle(target: Union[Target, str], i: int, cap: int = DEFAULT_CAP) -> Valuation:
    """Ground-truth v3 of a_i, a_i - 1 or a_i + 1.

    Saturated residues double the cap up to MAX_CAP; past that the exact
    value is checked for zero (INFINITY), otherwise OracleCapExceeded.
    """
    target = Target(target)
    while True:
        v = v3_residue(target, i, cap)
        if v is not None:
            return v
        if cap >= MAX_CAP:
            break
        cap = min(2 * cap, MAX_CAP)
    if narayana_fast(i) + target.shift == 0:
        return INFINITY
    raise OracleCapExceeded(f"v3(a_{i}{target.value[1:]}) >= {MAX_CAP}")


# ---------------------------------------------------------------------------
# law verification
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Discrepancy:
    index: int
    law_value: Optional[Valuation]
    oracle_value: Valuation
    kind: str = "mismatch"  # or "defect"
    note: str = ""


@dataclass
class DiscrepancyReport:
    subject: str
    variant: str
    checked: Tuple[int, int]
    entries: List[Discrepancy] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.entries

    def defect_classes(self) -> List[Tuple[int, int]]:
        seen = []
        for e in self.entries:
            if e.kind == "defect":
                cls = self._class(e)
                if cls not in seen:
                    seen.append(cls)
        return sorted(seen)

    def mismatch_classes(self) -> List[Tuple[int, int]]:
        return sorted({self._class(e) for e in self.entries if e.kind == "mismatch"})

    @staticmethod
    def _class(e: Discrepancy) -> Tuple[int, int]:
        return e.index % 24, 24


def _sweep_law(law: ValuationLaw, lo: int, hi: int, cap: int) -> List[Discrepancy]:
    sweep_cap = max(cap, DEFAULT_CAP)
    modulus = 3**sweep_cap
    shift = law.target.shift
    out: List[Discrepancy] = []
    for i, r in iter_mod(lo, hi + 1, modulus):
        try:
            lv = law_eval(law, i)
        except TableDefect as exc:
            ov = v3_oracle(law.target, i)
            out.append(Discrepancy(i, None, ov, "defect", str(exc)))
            continue
        ov = _residue_valuation((r + shift) % modulus, sweep_cap)
        if ov is None:
            ov = v3_oracle(law.target, i, min(2 * sweep_cap, MAX_CAP))
        if ov != lv:
            out.append(Discrepancy(i, lv, ov))
    return out


def _chunks(lo: int, hi: int, jobs: int) -> List[Tuple[int, int]]:
    size = max(1, -(-(hi - lo + 1) // jobs))
    return [(a, min(a + size - 1, hi)) for a in range(lo, hi + 1, size)]


def verify_law(law: ValuationLaw, i_max: int, initial_cap: int = 16, jobs: int = 1) -> DiscrepancyReport:
    """Compare the law with the oracle on 1 <= i <= i_max."""
    if i_max < 1:
        raise ValueError("i_max must be >= 1")
    report = DiscrepancyReport(law.name, law.variant.value, (1, i_max))
    if jobs <= 1:
        report.entries = _sweep_law(law, 1, i_max, initial_cap)
        return report
    parts = _chunks(1, i_max, jobs)
    with ProcessPoolExecutor(jobs) as pool:
        results = pool.map(_sweep_law, [law] * len(parts), [a for a, _ in parts], [b for _, b in parts],
                           [initial_cap] * len(parts))
        for chunk in results:
            report.entries.extend(chunk)
    return report


# ---------------------------------------------------------------------------
# congruence families a_{8 s 3^n + r} = P(s, n) mod 3^(n + c)
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CongruenceClaim:
    """a_{8 s 3^n + r} = sum(coef * 3^(n + k) * s) + constant  (mod 3^(n + c))."""

    family: str
    r: int
    terms: Tuple[Tuple[int, int], ...]  # (coef, k)
    constant: int
    c: int
    n_min: int

    def predicted(self, s: int, n: int) -> int:
        return (sum(coef * 3 ** (n + k) * s for coef, k in self.terms) + self.constant) % 3 ** (n + self.c)

    def index(self, s: int, n: int) -> int:
        return 8 * s * 3**n + self.r

    def describe(self) -> str:
        poly = " + ".join(f"3^(n+{k})*{coef}s" for coef, k in self.terms)
        if self.constant:
            poly += f" + {self.constant}"
        return f"a(8s*3^n+{self.r}) = {poly} mod 3^(n+{self.c})"


CONGRUENCE_FAMILIES: Dict[str, Tuple[CongruenceClaim, ...]] = {
    "3.3": (
        CongruenceClaim("3.3", 0, ((2, 2),), 0, 3, 1),
        CongruenceClaim("3.3", 1, ((2, 2), (1, 1)), 1, 3, 1),
        CongruenceClaim("3.3", 2, ((2, 2),), 1, 3, 1),
    ),
    "3.4": (
        CongruenceClaim("3.4", 0, ((2, 3), (2, 2)), 0, 4, 2),
        CongruenceClaim("3.4", 1, ((5, 2), (1, 1)), 1, 4, 2),
        CongruenceClaim("3.4", 2, ((2, 3), (5, 2)), 1, 4, 2),
    ),
}


@dataclass(frozen=True)
class CongruenceMismatch:
    s: int
    n: int
    r: int
    index: int
    predicted: int
    actual: int


@dataclass
class CongruenceReport:
    family: str
    s_max: int
    n_max: int
    index_limit: Optional[int]
    checked: int = 0
    entries: List[CongruenceMismatch] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.entries


def verify_congruences(family: str, s_max: int, n_max: int, index_limit: Optional[int] = None) -> CongruenceReport:
    """Check one congruence family for 1 <= s <= s_max and n_min <= n <= n_max.

    With ``index_limit`` a pair (s, n) is only checked while 8 s 3^n + 2 <= index_limit.
    """
    if family not in CONGRUENCE_FAMILIES:
        raise ValueError(f"unknown congruence family {family!r}")
    claims = CONGRUENCE_FAMILIES[family]
    report = CongruenceReport(family, s_max, n_max, index_limit)
    for s in range(1, s_max + 1):
        for n in range(claims[0].n_min, n_max + 1):
            if index_limit is not None and 8 * s * 3**n + 2 > index_limit:
                break
            modulus = 3 ** (n + claims[0].c)
            window = narayana_window_mod(8 * s * 3**n, modulus)
            for claim in claims:
                actual = window[claim.r]
                want = claim.predicted(s, n)
                report.checked += 1
                if actual != want:
                    report.entries.append(CongruenceMismatch(s, n, claim.r, claim.index(s, n), want, actual))
    return report


def divisibility_check(i_max: int) -> DiscrepancyReport:
    """a_i = 0 mod 9 for i = 16, 21 mod 24 and a_i = 0 mod 3 for i = 7 mod 24."""
    report = DiscrepancyReport("divisibility", "literal", (0, i_max))
    for i, r in iter_mod(0, i_max + 1, 9):
        c = i % 24
        if c in (16, 21) and r != 0:
            report.entries.append(Discrepancy(i, 2, int(vp(r, 3)), note="expected a_i = 0 mod 9"))
        elif c == 7 and r % 3 != 0:
            report.entries.append(Discrepancy(i, 1, 0, note="expected a_i = 0 mod 3"))
    return report
