"""Condition classifiers, witness solvers, and the table generator."""

import pytest

from cubick3 import (
    InvalidDegree,
    InvalidParity,
    a2_bruteforce,
    a2_represents,
    boundary_count,
    condition_flags,
    pell_brakkee,
    table,
    witness_ss,
    witness_sss,
)
from cubick3.conditions import CSV_COLUMNS, csv_row


class TestA2Represents:
    def test_18(self):
        assert a2_represents(18, False) is True
        assert a2_represents(18, True) is False

    def test_30(self):
        assert a2_represents(30, False) is False

    def test_2(self):
        assert a2_represents(2, True) is True

    def test_odd_rejected(self):
        with pytest.raises(InvalidParity):
            a2_represents(7)

    def test_large_input_warns(self):
        # smooth power of two, so the factorization itself is instant
        with pytest.warns(RuntimeWarning):
            assert a2_represents(2**65) is True  # 2^64 = (2^32)^2


class TestA2Bruteforce:
    def test_2(self):
        sols = a2_bruteforce(2)
        assert {(x, y) for x, y, _ in sols} == {
            (1, 0), (-1, 0), (0, 1), (0, -1), (1, 1), (-1, -1)
        }
        assert all(p for _, _, p in sols)

    def test_4_empty(self):
        assert a2_bruteforce(4) == []

    def test_6_contains_primitive(self):
        assert (2, 1, True) in a2_bruteforce(6)


class TestFlags:
    def test_8(self):
        f = condition_flags(8)
        assert (f.star, f.starstar_prime, f.starstar, f.starstarstar) == (
            True, True, False, False,
        )
        assert f.case_mod6 == 2

    def test_14(self):
        f = condition_flags(14)
        assert (f.star, f.starstar_prime, f.starstar, f.starstarstar) == (
            True, True, True, True,
        )

    def test_74(self):
        f = condition_flags(74)
        assert (f.star, f.starstar_prime, f.starstar, f.starstarstar) == (
            True, True, True, False,
        )

    def test_not_special(self):
        f = condition_flags(4)
        assert not f.star and f.case_mod6 is None

    def test_chain_holds_up_to_500(self):
        for d in range(2, 502, 2):
            f = condition_flags(d)
            assert f.starstarstar <= f.starstar <= f.starstar_prime <= f.star


class TestWitnesses:
    def test_ss_42(self):
        assert witness_ss(42) == (4, 1)

    def test_ss_74(self):
        assert witness_ss(74) == (10, 3)

    def test_ss_8_none(self):
        # n^2 + n + 1 is odd, so 2(n^2+n+1) is never divisible by 4
        assert witness_ss(8) is None

    def test_ss_exactness(self):
        for d in range(2, 202, 2):
            w = witness_ss(d)
            if w is not None:
                n, a = w
                assert a * d == 2 * n * n + 2 * n + 2

    def test_sss_14(self):
        assert witness_sss(14) == (2, 1)
        assert 2 * 4 + 4 + 2 == 14

    def test_sss_38(self):
        assert witness_sss(38) == (30, 7)
        assert 2 * 900 + 60 + 2 == 38 * 49

    def test_sss_74_none(self):
        assert witness_sss(74) is None

    def test_sss_exactness(self):
        for d in range(2, 202, 2):
            w = witness_sss(d)
            if w is not None:
                n, a = w
                assert a * a * d == 2 * n * n + 2 * n + 2


class TestBoundaryCount:
    def test_values(self):
        assert boundary_count(10) == 2
        assert boundary_count(8) == 1
        assert boundary_count(2) == 2

    def test_odd(self):
        with pytest.raises(InvalidParity):
            boundary_count(9)


class TestPellBrakkee:
    def test_42(self):
        sol = pell_brakkee(42)
        assert sol.solution == (3, 2)
        p, q = sol.solution
        assert 3 * p * p - 7 * q * q == -1

    def test_12_none(self):
        # 2 q^2 = 1 (mod 3) has no solution
        assert pell_brakkee(12).solution is None

    def test_14_invalid(self):
        with pytest.raises(InvalidDegree):
            pell_brakkee(14)


class TestTable:
    def test_star_row_to_42(self):
        rows = table(42)
        assert [f.d for f in rows] == [8, 12, 14, 18, 20, 24, 26, 30, 32, 36, 38, 42]

    def test_sss_row_to_42(self):
        rows = table(42)
        assert [f.d for f in rows if f.starstarstar] == [14, 26, 38, 42]

    def test_ss_row_to_78(self):
        rows = table(78)
        assert [f.d for f in rows if f.starstar] == [14, 26, 38, 42, 62, 74, 78]

    def test_ssprime_row_to_78_oracle_arbitrated(self):
        # every cell decided by the exhaustive form enumeration
        rows = table(78)
        got = [f.d for f in rows if f.starstar_prime]
        oracle = [f.d for f in rows if a2_bruteforce(f.d)]
        assert got == oracle
        assert got == [8, 14, 18, 24, 26, 32, 38, 42, 50, 54, 56, 62, 72, 74, 78]

    def test_row_count_to_78(self):
        assert len(table(78)) == 24

    def test_bad_range(self):
        with pytest.raises(InvalidDegree):
            table(6)

    def test_rows_match_condition_flags(self):
        for f in table(42):
            assert f == condition_flags(f.d)


class TestCsv:
    def test_header_schema(self):
        assert CSV_COLUMNS == (
            "d", "star", "ss_prime", "ss", "sss", "case_mod6",
            "ss_witness_n", "ss_witness_a", "sss_witness_n", "sss_witness_a",
            "boundary_components", "pell_3p2",
        )

    def test_row_14(self):
        row = csv_row(condition_flags(14))
        assert row == ["14", "T", "T", "T", "T", "2", "2", "1", "2", "1", "1", ""]

    def test_row_42(self):
        row = csv_row(condition_flags(42))
        assert row[:6] == ["42", "T", "T", "T", "T", "0"]
        assert row[10] == "2"  # 21 = 1 (mod 4): two components
        assert row[11] == "T"  # 3p^2 - 7q^2 = -1 is solvable
