"""Reference words built from published double-square parameters.

Each figure word is assembled from (u2, u2_bar, e1, e2) plus a trailing
extension and carries the values it is expected to reproduce: shift budgets,
inversion-factor layout, family size, and segment structure.  They double as
fixtures for the CLI ``figures`` command and the test suite.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .doublesq import Factorization, make_factorization


@dataclass(frozen=True)
class FigureWord:
    name: str
    u2: str
    u2_bar: str
    e1: int
    e2: int
    extension: str
    expect: dict = field(default_factory=dict)

    @property
    def u1(self) -> str:
        return self.u2 + self.u2_bar

    @property
    def factorization(self) -> Factorization:
        return make_factorization(self.u1, self.u2, self.e1, self.e2)

    @property
    def word(self) -> str:
        f = self.factorization
        return f.U * 2 + self.extension


def build_figures() -> list[FigureWord]:
    return [
        FigureWord(
            name="inversion-shifts",
            u2="aaab", u2_bar="aa", e1=4, e2=2, extension="",
            expect={
                "lcp": 3,
                "lcs": 0,
                "natural_inversion_factor": "aaaaabaaabaa",
                "inversion_positions": list(range(23, 27)) + list(range(63, 67)),
            },
        ),
        FigureWord(
            name="alpha-family-equal-exponents",
            u2="aaab", u2_bar="aa", e1=2, e2=2, extension="aaa",
            expect={"family_kind": "alpha", "family_size": 4, "segment_count": 1},
        ),
        FigureWord(
            name="alpha-family-unequal-exponents",
            u2="aaab", u2_bar="aa", e1=2, e2=1, extension="aaa",
            expect={"family_kind": "alpha", "family_size": 4, "segment_count": 1},
        ),
        FigureWord(
            name="alpha-beta-family",
            # the extension repeats the first 15 symbols of U**2 so that both
            # beta segments materialize as rightmost occurrences
            u2="aaab", u2_bar="aa", e1=5, e2=1, extension="aaabaaaaabaaaaa",
            expect={
                "family_kind": "alpha_beta",
                "segment_count": 3,
                "alpha_segments": 1,
                "beta_segments": 2,
                "max_segment_size": 4,
            },
        ),
    ]
