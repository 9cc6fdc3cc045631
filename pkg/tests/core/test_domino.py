"""
Unit tests for domino placements on a labeled cycle.
"""
import time
from math import gcd

import pytest

from cyclonorm.core import domino as domino_module
from cyclonorm.core.domino import (
    corollary_verify,
    domino_count,
    domino_enumerate,
    domino_table,
    iter_placements,
    require_coprime_to_six,
    signed_sum,
    table_balanced,
)
from cyclonorm.core.exceptions import OutOfRangeError, PreconditionError
from cyclonorm.core.sequences import lucas


def expected_signed_sum(n):
    """2*cos(n*pi/3) as an exact integer"""
    return {0: 2, 1: 1, 2: -1, 3: -2, 4: -1, 5: 1}[n % 6]


class TestClosedForm:
    """Tests for D(n, k) = n/(n-k) * C(n-k, k)"""

    def test_table_11(self, domino_table_11):
        assert domino_table(11).counts == domino_table_11

    def test_table_17(self, domino_table_17):
        assert domino_table(17).counts == domino_table_17

    def test_single_count(self):
        assert domino_count(17, 4) == 935
        assert domino_count(17, 0) == 1

    def test_count_matches_table(self):
        for n in range(1, 60):
            table = domino_table(n).counts
            assert [domino_count(n, k) for k in range(n // 2 + 1)] == table

    def test_half_filled_even_cycle(self):
        """Test that an even cycle has exactly two perfect placements"""
        for k in range(1, 300):
            assert domino_table(2 * k).counts[-1] == 2

    def test_step_matches_binomial_form_for_large_n(self):
        n = 2011
        table = domino_table(n).counts
        for k in (0, 1, 17, 500, n // 2):
            assert table[k] == domino_count(n, k)

    def test_extended_rows_match_cold_rows(self):
        """Test that rows built from cached neighbours equal rows stepped from scratch"""
        domino_module._rows.clear()
        domino_table(4001)
        extended = [domino_table(n).counts for n in (4003, 4004, 4010)]
        cold = []
        for n in (4003, 4004, 4010):
            domino_module._rows.clear()
            cold.append(domino_table(n).counts)
        assert extended == cold

    def test_returned_counts_are_private_copies(self):
        domino_table(41).counts.append(0)
        assert len(domino_table(41).counts) == 21

    def test_two_cycle(self):
        """Test that both arcs of the 2-cycle count as distinct placements"""
        assert domino_table(2).counts == [1, 2]

    def test_total_is_lucas(self):
        for n in range(3, 200):
            assert domino_table(n).total() == lucas(n)

    @pytest.mark.parametrize("k", [-1, 9])
    def test_k_out_of_range(self, k):
        with pytest.raises(OutOfRangeError, match="out of range"):
            domino_count(17, k)

    def test_rejects_empty_cycle(self):
        with pytest.raises(PreconditionError):
            domino_table(0)


class TestBruteForce:
    """Tests for exhaustive enumeration"""

    def test_four_cycle(self):
        assert domino_enumerate(4).counts == [1, 4, 2]

    def test_reproduces_tables(self, domino_table_11, domino_table_17):
        assert domino_enumerate(11).counts == domino_table_11
        assert domino_enumerate(17).counts == domino_table_17

    def test_agrees_with_closed_form(self):
        for n in range(3, 19):
            assert domino_enumerate(n).counts == domino_table(n).counts

    @pytest.mark.slow
    def test_agrees_with_closed_form_to_24(self):
        for n in range(19, 25):
            assert domino_enumerate(n).counts == domino_table(n).counts

    def test_placements_are_distinct_and_disjoint(self):
        placements = list(iter_placements(9))
        assert len(placements) == len(set(placements)) == lucas(9)
        for placement in placements:
            cells = [cell for arc in placement for cell in arc]
            assert len(cells) == len(set(cells))

    @pytest.mark.parametrize("n", [2, 31])
    def test_outside_supported_range(self, n):
        with pytest.raises(OutOfRangeError):
            domino_enumerate(n)


class TestParity:
    """Tests for the signed sum and the even/odd balance"""

    def test_balance_11(self):
        table = domino_table(11)
        assert table.even_nonzero_sum() == table.odd_sum() == 99

    def test_balance_17(self):
        table = domino_table(17)
        assert table.even_nonzero_sum() == table.odd_sum() == 1785

    def test_signed_sum_all_residues(self):
        for n in range(3, 500):
            assert signed_sum(n) == expected_signed_sum(n)

    def test_signed_sum_precondition(self):
        with pytest.raises(PreconditionError):
            signed_sum(2)

    def test_corollary_range(self):
        for n in range(5, 1000):
            if gcd(n, 6) == 1:
                assert corollary_verify(n)

    @pytest.mark.slow
    def test_signed_sum_to_ten_thousand(self):
        """Test the full range within its 10 second budget"""
        started = time.perf_counter()
        for n in range(5, 10001):
            if gcd(n, 6) == 1:
                assert signed_sum(n) == 1
        assert time.perf_counter() - started < 10

    def test_balance_helpers(self):
        assert table_balanced(domino_table(13))
        assert not table_balanced(domino_table(12))
        require_coprime_to_six(25)
        with pytest.raises(PreconditionError):
            require_coprime_to_six(15)

    @pytest.mark.parametrize("n", [3, 4, 9, 12])
    def test_corollary_precondition(self, n):
        with pytest.raises(PreconditionError):
            corollary_verify(n)
