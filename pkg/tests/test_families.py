import pytest

from dsq.doublesq import find_fs_double_squares
from dsq.families import (
    FamilyKind,
    SegmentKind,
    decompose_family,
    family_size_bound,
    iter_families,
)
from dsq.figures import build_figures
from tests.test_mates import EPSILON_HOST, GAMMA_HOST


@pytest.fixture(scope="module")
def figures():
    return {fw.name: fw for fw in build_figures()}


class TestDecompose:
    def test_alpha_family_equal_exponents(self, figures):
        fam = decompose_family(figures["alpha-family-equal-exponents"].word)
        assert fam.kind is FamilyKind.alpha
        assert fam.size == 4
        assert len(fam.segments) == 1
        assert [m.square.start for m in fam.members] == [1, 2, 3, 4]

    def test_alpha_family_unequal_exponents(self, figures):
        fam = decompose_family(figures["alpha-family-unequal-exponents"].word)
        assert fam.kind is FamilyKind.alpha
        assert fam.size == 4
        f = fam.leader.factorization
        assert fam.size == len(f.u1) - 2

    def test_alpha_beta_family(self, figures):
        fam = decompose_family(figures["alpha-beta-family"].word)
        assert fam.kind is FamilyKind.alpha_beta
        kinds = [s.kind for s in fam.segments]
        assert kinds == [
            SegmentKind.alpha_segment,
            SegmentKind.beta_segment,
            SegmentKind.beta_segment,
        ]
        assert [s.type_pair for s in fam.segments] == [(5, 1), (4, 2), (3, 3)]
        assert all(len(s.members) <= 4 for s in fam.segments)

    def test_singleton(self):
        fam = decompose_family("abaababaab")
        assert fam.kind is FamilyKind.alpha and fam.size == 1

    def test_gamma_mate_not_included_in_alpha_family(self):
        # the rightmost non-alpha mate is a gamma mate, so the family keeps
        # only the leader
        fam = decompose_family(GAMMA_HOST)
        assert fam.kind is FamilyKind.alpha and fam.size == 1

    def test_no_double_square(self):
        with pytest.raises(ValueError, match="no double square"):
            decompose_family("ab")

    def test_members_tagged(self, figures):
        fam = decompose_family(figures["alpha-beta-family"].word)
        assert fam.members[0].relation is None
        tags = {m.relation.value for m in fam.members[1:]}
        assert tags == {"alpha", "beta"}

    def test_beta_segment_types_shift_evenly(self, figures):
        fam = decompose_family(figures["alpha-beta-family"].word)
        betas = [s for s in fam.segments if s.kind is SegmentKind.beta_segment]
        for prev, cur in zip(betas, betas[1:]):
            assert prev.type_pair[0] - cur.type_pair[0] == cur.type_pair[1] - prev.type_pair[1] > 0


class TestSizeBound:
    def test_equal_exponent_alpha(self, figures):
        fam = decompose_family(figures["alpha-family-equal-exponents"].word)
        assert family_size_bound(fam) == 4  # |u2|
        assert fam.size <= 4

    def test_unequal_exponent_alpha(self, figures):
        fam = decompose_family(figures["alpha-family-unequal-exponents"].word)
        assert family_size_bound(fam) == 5  # |u1| - 1
        assert fam.size <= 5

    def test_alpha_beta(self, figures):
        # last segment type (3, 3) meets, so the bound is
        # (p - q)/2 * |u1| + |u2| = 16
        fam = decompose_family(figures["alpha-beta-family"].word)
        assert family_size_bound(fam) == 16
        assert fam.size == 12

    def test_exhaustive_small(self):
        from tests.test_core import canonical_words

        for n in range(10, 15):
            for w in canonical_words(2, n):
                if find_fs_double_squares(w):
                    fam = decompose_family(w)
                    assert fam.size <= family_size_bound(fam), w


class TestIterFamilies:
    def test_two_families(self):
        fams = list(iter_families(EPSILON_HOST))
        assert len(fams) == 2
        first, second = fams
        assert first[0].size == 1 and first[1] == 0
        assert second[0].size == 3 and not second[2]

    def test_all_members_covered_once(self, figures):
        word = figures["alpha-beta-family"].word
        starts = []
        for fam, offset, overlap in iter_families(word):
            assert not overlap
            starts.extend(m.square.start + offset for m in fam.members)
        assert starts == sorted(starts)
        assert set(starts) <= {d.start for d, _ in find_fs_double_squares(word)}
