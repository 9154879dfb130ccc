import pytest

from dsq.bounds import (
    ALL_PROPS,
    check_bounds,
    delta,
    exhaustive_verify,
    sigma_oracle,
    sigma_search,
)
from dsq.figures import build_figures


class TestDelta:
    @pytest.mark.parametrize("w,expected", [
        ("abaababaab", 1),
        ("ab", 0),
        ("", 0),
    ])
    def test_examples(self, w, expected):
        assert delta(w) == expected

    def test_family_word(self):
        fig2 = next(f for f in build_figures() if f.name == "alpha-family-equal-exponents")
        assert delta(fig2.word) == 4
        assert len(fig2.word) == 59


class TestCheckBounds:
    def test_reference_word(self):
        rep = check_bounds("abaababaab")
        assert rep.n == 10 and rep.delta == 1 and rep.distinct == 5
        by_name = {c.name: c for c in rep.checks}
        assert by_name["delta_bound"].bound == 8
        assert by_name["distinct_bound"].bound == 18
        assert by_name["strengthened_delta"].observed == 6
        assert by_name["strengthened_delta"].bound == 44
        assert rep.all_passed

    def test_empty_word(self):
        rep = check_bounds("")
        assert rep.all_passed and rep.delta == 0 and rep.distinct == 0

    def test_family_word(self):
        fig2 = next(f for f in build_figures() if f.name == "alpha-family-equal-exponents")
        rep = check_bounds(fig2.word)
        by_name = {c.name: c for c in rep.checks}
        assert rep.delta == 4
        assert by_name["delta_bound"].bound == 5 * 59 // 6 == 49
        assert rep.all_passed

    def test_strengthened_only_when_leading(self):
        rep = check_bounds("aabaababaab")  # first double square starts at 2
        assert "strengthened_delta" not in {c.name for c in rep.checks}


class TestSigmaSearch:
    @pytest.mark.parametrize("d,n,expected", [
        (1, 4, 1),
        (2, 5, 2),
        (3, 3, 0),
        (2, 2, 0),
    ])
    def test_examples(self, d, n, expected):
        res = sigma_search(d, n)
        assert res.sigma == expected
        assert res.conjecture_holds

    def test_witnesses(self):
        res = sigma_search(2, 5)
        assert "ababa" in res.witnesses
        assert all(len(w) == 5 and len(set(w)) == 2 for w in res.witnesses)

    def test_d_larger_than_n(self):
        with pytest.raises(ValueError, match="exceeds"):
            sigma_search(4, 3)

    def test_d_out_of_range(self):
        with pytest.raises(ValueError):
            sigma_search(0, 5)

    def test_oracle_agreement(self):
        for d in (1, 2, 3):
            for n in range(d, 10):
                assert sigma_search(d, n).sigma == sigma_oracle(d, n)

    def test_spot_values(self):
        # pinned against the enumeration oracle; guards the pruned search
        assert sigma_search(2, 13).sigma == 8
        assert sigma_search(3, 12).sigma == 7
        assert sigma_search(4, 12).sigma == 6

    def test_deterministic_across_jobs(self):
        a = sigma_search(3, 12, jobs=1)
        b = sigma_search(3, 12, jobs=2)
        assert a == b

    def test_resume(self, tmp_path):
        cursor = tmp_path / "search.cursor"
        first = sigma_search(2, 10, resume_path=str(cursor))
        assert cursor.exists()
        lines = cursor.read_text().splitlines()
        assert all(line.startswith("shard_prefix=") and "completed=true" in line
                   for line in lines)
        again = sigma_search(2, 10, resume_path=str(cursor))
        assert again == first
        # no shard re-ran, so no lines were appended
        assert cursor.read_text().splitlines() == lines

    def test_resume_line_without_result_reruns(self, tmp_path):
        cursor = tmp_path / "search.cursor"
        cursor.write_text("shard_prefix=aab completed=true\n")
        resumed = sigma_search(2, 10, resume_path=str(cursor))
        assert resumed == sigma_search(2, 10)


class TestExhaustiveVerify:
    def test_small_corpus_clean(self):
        assert exhaustive_verify(11, 2, set(ALL_PROPS)) == []

    def test_unknown_property(self):
        with pytest.raises(ValueError, match="unknown properties"):
            exhaustive_verify(8, 2, {"nonsense"})

    def test_empty_suite(self):
        with pytest.raises(ValueError, match="suite is empty"):
            exhaustive_verify(8, 2, set())

    def test_bad_alphabet(self):
        with pytest.raises(ValueError):
            exhaustive_verify(8, 0, {"two_rightmost_max"})

    def test_deterministic_across_jobs(self):
        a = exhaustive_verify(12, 2, {"two_rightmost_max", "delta_bound"}, jobs=1)
        b = exhaustive_verify(12, 2, {"two_rightmost_max", "delta_bound"}, jobs=2)
        assert a == b == []

    def test_cursor_format_and_resume(self, tmp_path):
        cursor = tmp_path / "verify.cursor"
        exhaustive_verify(8, 2, {"two_rightmost_max"}, resume_path=str(cursor))
        lines = cursor.read_text().splitlines()
        assert lines and all(
            line.split() == [line.split()[0], "completed=true"]
            and line.startswith("shard_prefix=")
            for line in lines
        )
        before = list(lines)
        exhaustive_verify(8, 2, {"two_rightmost_max"}, resume_path=str(cursor))
        assert cursor.read_text().splitlines() == before
