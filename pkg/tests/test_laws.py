import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import brute_v
from narayana_brocard.laws import (
    CONGRUENCE_FAMILIES,
    INFINITY,
    OracleCapExceeded,
    TableDefect,
    Target,
    Variant,
    divisibility_check,
    get_law,
    law_eval,
    v3_oracle,
    v3_residue,
    verify_congruences,
    verify_law,
)

SHIFT = {Target.A: 0, Target.A_MINUS_1: -1, Target.A_PLUS_1: 1}


def exact_v3(terms, target, i):
    v = brute_v(terms[i] + SHIFT[target], 3)
    return INFINITY if v is None else v


# ---------------------------------------------------------------------------
# oracle
# ---------------------------------------------------------------------------


@pytest.mark.parametrize(
    "target, i, cap, expected",
    [("a", 8, 6, 2), ("a-1", 10, 6, 2), ("a-1", 1, 6, INFINITY), ("a-1", 2, 3, INFINITY), ("a+1", 20, 6, 2)],
)
def test_oracle_values(target, i, cap, expected):
    assert v3_oracle(target, i, cap) == expected


def test_oracle_matches_exact_valuations(terms):
    for target in Target:
        for i in range(1, 3000):
            assert v3_oracle(target, i, 4) == exact_v3(terms, target, i)


def test_residue_saturates():
    # a_18 - 1 = 405 = 3^4 * 5
    assert v3_residue("a-1", 18, 4) is None
    assert v3_residue("a-1", 18, 5) == 4


def test_oracle_gives_up_past_cap(monkeypatch):
    import narayana_brocard.laws as laws

    monkeypatch.setattr(laws, "MAX_CAP", 2)
    with pytest.raises(OracleCapExceeded):
        v3_oracle("a-1", 18, 1)


def test_oracle_self_consistency(terms):
    for i in range(4, 3000):
        minus = v3_oracle("a-1", i)
        plus = v3_oracle("a+1", i)
        assert minus + plus == brute_v(terms[i] ** 2 - 1, 3)
        assert min(minus, plus) == 0


# ---------------------------------------------------------------------------
# law tables
# ---------------------------------------------------------------------------


@pytest.mark.parametrize(
    "target, i, expected",
    [("a-1", 9, 1), ("a+1", 4, 1), ("a-1", 3, INFINITY), ("a-1", 18, 4), ("a-1", 11, 3), ("a-1", 19, 3), ("a", 8, 2)],
)
def test_law_eval_values(target, i, expected):
    assert law_eval(get_law(target), i) == expected


@pytest.mark.parametrize("target", list(Target))
def test_corrected_laws_are_total(target):
    law = get_law(target, Variant.CORRECTED)
    assert law.is_total()
    assert all(law.coverage()[c] == 1 for c in range(24))


def test_literal_a_table_table_defects():
    law = get_law("a", "literal")
    cov = law.coverage()
    assert cov[16] == 0
    assert cov[0] == 2
    with pytest.raises(TableDefect) as exc:
        law_eval(law, 40)
    assert exc.value.residue_class == (16, 24)
    with pytest.raises(TableDefect):
        law_eval(law, 48)


def test_literal_a_table_v2_rows_disagree_at_23():
    law = get_law("a", "literal")
    assert law_eval(law, 23) == 4  # v2(24) + 1
    assert v3_oracle("a", 23) == 2  # a_23 = 2745 = 9 * 305


def test_shifted_tables_literal_equal_corrected():
    for target in (Target.A_MINUS_1, Target.A_PLUS_1):
        assert get_law(target, "literal").rules == get_law(target, "corrected").rules


@pytest.mark.parametrize("k", [0, 3, 6, 9, 30, 300])
def test_class_18_subcase(k):
    i = 24 * k + 18
    assert law_eval(get_law("a-1"), i) == 4
    assert v3_oracle("a-1", i) == 4


@given(st.integers(1, 200), st.integers(2, 6))
def test_class_18_second_subcase(s, n):
    # i = 8 s 3^n - 30 with 3 not dividing s gives v3(i + 30) + 3
    if s % 3 == 0:
        return
    i = 8 * s * 3**n - 30
    assert law_eval(get_law("a-1"), i) == n + 3 == brute_v(i + 30, 3) + 3
    assert v3_oracle("a-1", i) == n + 3


@pytest.mark.parametrize("target", list(Target))
def test_verify_corrected_laws(target):
    assert verify_law(get_law(target), 10_000).entries == []


def test_verify_literal_a_table_small_range():
    report = verify_law(get_law("a", "literal"), 100)
    assert report.checked == (1, 100)
    assert (16, 24) in report.defect_classes()
    assert (0, 24) in report.defect_classes()
    by_index = {e.index: e for e in report.entries}
    assert by_index[23].law_value == 4 and by_index[23].oracle_value == 2
    assert by_index[16].kind == "defect"


def test_verify_law_single_index():
    report = verify_law(get_law("a-1"), 1)
    assert report.checked == (1, 1) and report.ok


def test_verify_law_parallel_matches_serial():
    law = get_law("a", "literal")
    assert verify_law(law, 3000, jobs=3).entries == verify_law(law, 3000).entries


@given(st.integers(1, 10**6), st.sampled_from(list(Target)))
def test_corrected_laws_random_indices(i, target):
    assert law_eval(get_law(target), i) == v3_oracle(target, i)


# ---------------------------------------------------------------------------
# congruences and the corollary
# ---------------------------------------------------------------------------


def test_congruence_examples(terms):
    assert terms[24] == 4023 and terms[24] % 81 == 54
    assert terms[25] == 5896 and terms[25] % 81 == 64
    c33 = {c.r: c for c in CONGRUENCE_FAMILIES["3.3"]}
    assert c33[0].predicted(1, 1) == 54
    assert c33[1].predicted(1, 1) == 64
    c34 = {c.r: c for c in CONGRUENCE_FAMILIES["3.4"]}
    assert (c34[0].predicted(1, 2), c34[1].predicted(1, 2), c34[2].predicted(1, 2)) == (648, 433, 163)


def test_congruence_second_step_values():
    # the s-induction base for n = 2: 3^4*8s, 3^3*16s + 1, 3^4*11s + 1 mod 729
    c34 = {c.r: c for c in CONGRUENCE_FAMILIES["3.4"]}
    for s in range(1, 20):
        assert c34[0].predicted(s, 2) == (81 * 8 * s) % 729
        assert c34[1].predicted(s, 2) == (27 * 16 * s + 1) % 729
        assert c34[2].predicted(s, 2) == (81 * 11 * s + 1) % 729


@pytest.mark.parametrize("family", ["3.3", "3.4"])
def test_congruences_small_sweep(family, terms):
    report = verify_congruences(family, 20, 3, index_limit=12_000 - 3)
    assert report.ok and report.checked > 0
    # brute force the same claims with exact terms
    for claim in CONGRUENCE_FAMILIES[family]:
        for s in range(1, 20):
            for n in range(claim.n_min, 4):
                i = claim.index(s, n)
                if i < len(terms):
                    assert terms[i] % 3 ** (n + claim.c) == claim.predicted(s, n)


def test_unknown_family():
    with pytest.raises(ValueError):
        verify_congruences("3.9", 1, 1)


def test_corollary(terms):
    assert terms[21] == 1278 and terms[16] == 189 and terms[7] == 6
    assert divisibility_check(5000).ok
