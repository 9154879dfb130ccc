import pytest

from dsq.doublesq import factorize, find_fs_double_squares, make_factorization
from dsq.inversion import (
    find_inversion_factors,
    intervals,
    is_inversion_factor_at,
    natural_inversion_factor,
)
from tests.test_core import canonical_words
from tests.test_doublesq import FIG1_U, FIG1_u


@pytest.fixture(scope="module")
def fig1():
    return factorize(FIG1_u, FIG1_U)


class TestNaturalFactor:
    def test_reference(self, fig1):
        assert natural_inversion_factor(fig1) == "aaaaabaaabaa"

    def test_two_letter_block(self):
        assert natural_inversion_factor(make_factorization("ab", "a", 1, 1)) == "baab"

    def test_three_letter_block(self):
        assert natural_inversion_factor(make_factorization("aba", "ab", 1, 1)) == "aababa"


class TestIntervals:
    def test_reference(self, fig1):
        iv = intervals(fig1)
        assert (iv.N1, iv.R1, iv.L1) == (23, 26, 23)
        assert (iv.N2, iv.L2, iv.R2) == (63, 63, 66)

    def test_minimal_instance(self):
        iv = intervals(make_factorization("ab", "a", 1, 1))
        assert (iv.N1, iv.N2) == (2, 7)
        assert (iv.L1, iv.R1, iv.L2, iv.R2) == (2, 2, 7, 7)

    def test_zero_budget_collapses(self):
        f = make_factorization("ab", "a", 2, 1)
        iv = intervals(f)
        assert iv.L1 == iv.N1 == iv.R1 and iv.L2 == iv.N2 == iv.R2
        assert find_inversion_factors(f) == [iv.N1, iv.N2]

    def test_right_clamp(self):
        # e2 == 1 with positive right budget: R2 stops at the last valid
        # start even though N2 + lcp would reach further
        iv = intervals(make_factorization("aab", "a", 1, 1))
        assert (iv.N1, iv.R1) == (2, 3)
        assert (iv.L2, iv.R2) == (9, 9)


class TestMembership:
    def test_reference_positions(self, fig1):
        assert is_inversion_factor_at(fig1, 23) is True
        assert is_inversion_factor_at(fig1, 27) is False

    def test_minimal_instance(self):
        f = make_factorization("ab", "a", 1, 1)
        assert is_inversion_factor_at(f, 2) is True
        assert is_inversion_factor_at(f, 1) is False

    def test_out_of_range(self, fig1):
        with pytest.raises(ValueError, match="out of range"):
            is_inversion_factor_at(fig1, 0)
        with pytest.raises(ValueError, match="out of range"):
            is_inversion_factor_at(fig1, 70)


class TestScan:
    def test_reference_scan(self, fig1):
        assert find_inversion_factors(fig1) == [23, 24, 25, 26, 63, 64, 65, 66]

    def test_minimal_scan(self):
        assert find_inversion_factors(make_factorization("ab", "a", 1, 1)) == [2, 7]

    def test_clamped_scan_matches_intervals(self):
        f = make_factorization("aab", "a", 1, 1)
        assert find_inversion_factors(f) == [2, 3, 9] == intervals(f).positions()

    def test_lemma_exhaustive_binary(self):
        for n in range(10, 15):
            for w in canonical_words(2, n):
                for _, f in find_fs_double_squares(w):
                    assert find_inversion_factors(f) == intervals(f).positions()
