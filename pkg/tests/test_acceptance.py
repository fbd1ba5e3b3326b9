"""Acceptance gate: the ten shipping criteria, one test per criterion.

Each test prints one PASS/FAIL line with its elapsed time (visible in the
failure report, or with -rA) and the pytest -v status line carries the same
verdict.  Reference cells that are provably inconsistent with their own
defining recurrences ship in data/known_discrepancies.json; those cells must
match their documented recomputed values instead, and every other cell is
compared with zero tolerance.
"""
from __future__ import annotations

import itertools
import random
import time
from contextlib import contextmanager

from diagmon.combinat import bell, binomial
from diagmon.core import MonoidFamily, multiply
from diagmon.counting import e_rank, e_total, exi_total
from diagmon.oracle import brute_report, enumerate_elements
from diagmon.tables import compare_table, known_discrepancies, printed_table
from diagmon.verify import (
    check_idempotency_agreement,
    check_oracle_counts,
    check_rclass_uniformity,
)

from .oracles import naive_e_nrs

P, B, PB = MonoidFamily.P, MonoidFamily.B, MonoidFamily.PB
T, I, IDUAL = MonoidFamily.T, MonoidFamily.I, MonoidFamily.IDUAL

ORACLE_SWEEPS = ((P, 4), (B, 6), (PB, 5))


@contextmanager
def criterion(num: int, label: str, budget_seconds: float):
    started = time.perf_counter()
    try:
        yield
    except BaseException:
        print(f"FAIL criterion {num}: {label}")
        raise
    elapsed = time.perf_counter() - started
    assert elapsed < budget_seconds, (
        f"criterion {num} took {elapsed:.1f}s, budget {budget_seconds}s"
    )
    print(f"PASS criterion {num}: {label} ({elapsed:.2f}s)")


def _assert_table_matches(which: str, allowed: set[tuple[int, object]]) -> None:
    for diff in compare_table(which):
        key = (diff.n, diff.column)
        assert diff.known and key in allowed, (
            f"table {which} cell n={diff.n} {diff.column}: "
            f"reference {diff.reference}, computed {diff.computed}"
        )


def test_criterion_01_series_tables_exact():
    with criterion(1, "series tables 1-3 reproduced exactly", 5.0):
        _assert_table_matches("1", set())
        _assert_table_matches("2", {(9, "c")})
        _assert_table_matches("3", set())
        # the one excused cell fails its own column sum and is documented
        row9 = printed_table("2")["rows"]["9"]
        assert row9[0] + row9[1] != row9[2]
        assert known_discrepancies("2")[0]["computed"] == row9[0] + row9[1]


def test_criterion_02_rank_tables_three_methods():
    with criterion(2, "rank tables 4, 7, 8 by three agreeing methods", 30.0):
        methods = {
            B: ("mu_sum", "recurrence", "closed"),
            PB: ("mu_sum", "recurrence", "closed"),
            P: ("mu_sum", "recurrence"),
        }
        for fam in (B, PB, P):
            for n in range(11):
                for r in range(n + 1):
                    values = {e_rank(fam, n, r, m) for m in methods[fam]}
                    assert len(values) == 1, (fam.value, n, r, values)
        _assert_table_matches("4", set())
        _assert_table_matches("7", set())
        _assert_table_matches("8", {(10, "r=8")})


def test_criterion_03_remaining_rank_tables():
    with criterion(3, "tables 5, 9, 10 exact; table 6 discrepancies reported", 10.0):
        _assert_table_matches("5", set())
        _assert_table_matches("9", set())
        _assert_table_matches("10", set())
        reported = {
            (d.n, d.column): (d.reference, d.computed, d.known)
            for d in compare_table("6")
        }
        assert reported == {
            (10, "r=4"): (168, 960, True),
            (10, "r=6"): (195, 168, True),
        }


def test_criterion_04_oracle_equivalence():
    with criterion(4, "brute-force counts equal engine counts", 300.0):
        for fam, top in ORACLE_SWEEPS:
            for n in range(top + 1):
                result = check_oracle_counts(fam, n)
                assert result.ok, result.detail
        assert brute_report(B, 6).idempotents_total == 1936 == e_total(B, 6)


def test_criterion_05_structural_equals_direct():
    with criterion(5, "structural idempotency test agrees with squaring", 300.0):
        for fam, top in ORACLE_SWEEPS:
            for n in range(top + 1):
                result = check_idempotency_agreement(fam, n)
                assert result.ok, result.detail


def test_criterion_06_per_r_class_counts():
    with criterion(6, "per-R-class idempotent counts are uniform", 300.0):
        for n in range(7):
            result = check_rclass_uniformity(B, n)
            assert result.ok, result.detail
        for n in range(6):
            result = check_rclass_uniformity(PB, n)
            assert result.ok, result.detail


def test_criterion_07_algebraic_identities():
    with criterion(7, "associativity and twist additivity", 300.0):
        b3 = list(enumerate_elements(B, 3))
        assert len(b3) == 15
        for a, b, c in itertools.product(b3, repeat=3):
            ab, m_ab = multiply(a, b)
            bc, m_bc = multiply(b, c)
            left, m_left = multiply(ab, c)
            right, m_right = multiply(a, bc)
            assert left == right
            assert m_ab + m_left == m_right + m_bc
        p4 = list(enumerate_elements(P, 4))
        rng = random.Random(20260822)
        for _ in range(10_000):
            a, b, c = (p4[rng.randrange(len(p4))] for _ in range(3))
            ab, m_ab = multiply(a, b)
            bc, m_bc = multiply(b, c)
            left, m_left = multiply(ab, c)
            right, m_right = multiply(a, bc)
            assert left == right
            assert m_ab + m_left == m_right + m_bc


def test_criterion_08_embedded_family_identities():
    with criterion(8, "embedded family totals match their closed sums", 5.0):
        assert e_total(T, 0) == 1
        for n in range(1, 11):
            assert e_total(T, n) == sum(
                binomial(n, k) * k ** (n - k) for k in range(1, n + 1)
            )
        for n in range(11):
            assert e_total(I, n) == 2**n
            assert e_total(IDUAL, n) == bell(n)
        for n in range(11):
            assert bell(n + 1) == sum(binomial(n, k) * bell(k) for k in range(n + 1))


def test_criterion_09_twist_collapse():
    with criterion(9, "order-1 twist collapse and B/PB twisted equality", 5.0):
        for fam in MonoidFamily:
            for n in range(11):
                assert exi_total(fam, n, 1) == e_total(fam, n)
        for n in range(11):
            assert exi_total(B, n, 0) == exi_total(PB, n, 0)


def test_criterion_10_pair_count_oracle():
    with criterion(10, "join-universal pair counts against enumeration", 60.0):
        from diagmon.combinat import e_nrs

        for n in range(1, 6):
            table = naive_e_nrs(n)
            for r in range(1, n + 1):
                for s in range(1, n + 1):
                    assert e_nrs(n, r, s) == table.get((r, s), 0), (n, r, s)
        printed = printed_table("3")["rows"]
        for n in range(1, 11):
            c0 = sum(
                e_nrs(n, r, s) for r in range(1, n + 1) for s in range(1, n + 1)
            )
            assert c0 == printed[str(n)][0], n
