"""Square occurrences, rightmost occurrences, and distinct-square counts.

A square is a factor of the form ``u * 2``; ``u`` is its generator.  Distinct
squares are identified by the literal content of the full square, and the
rightmost occurrence of each content is the canonical representative.  At most
two rightmost squares can start at the same position; the table constructor
treats a third as a falsification to report, never as state to truncate.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .core import is_primitive


class FalsificationError(AssertionError):
    """A verified combinatorial claim failed on a concrete word."""

    def __init__(self, claim: str, word: str, witness: object):
        super().__init__(f"{claim} falsified on {word!r}: {witness}")
        self.claim = claim
        self.word = word
        self.witness = witness


@dataclass(frozen=True, order=True)
class SquareOcc:
    """One occurrence of a square: 1-based start plus generator length."""

    start: int
    gen_len: int

    def content(self, host: str) -> str:
        return host[self.start - 1 : self.start - 1 + 2 * self.gen_len]

    def generator(self, host: str) -> str:
        return host[self.start - 1 : self.start - 1 + self.gen_len]


@dataclass(frozen=True)
class RightmostTable:
    """Rightmost occurrence of each distinct square, plus per-start grouping."""

    by_content: dict[str, SquareOcc]
    by_start: dict[int, list[SquareOcc]] = field(default_factory=dict)

    def __len__(self) -> int:
        return len(self.by_content)


def enumerate_squares(w: str) -> list[SquareOcc]:
    """All square occurrences of ``w``, sorted by (start, gen_len).

    Runs in O(n^2): for each generator length the matching prefix extents are
    chained right to left, so each position is charged once per length.
    """
    n = len(w)
    out: list[SquareOcc] = []
    for gen_len in range(1, n // 2 + 1):
        # match[i] = length of the common prefix of w[i:] and w[i+gen_len:]
        match = [0] * (n + 1)
        for i in range(n - gen_len - 1, -1, -1):
            if w[i] == w[i + gen_len]:
                match[i] = match[i + 1] + 1
        for i in range(n - 2 * gen_len + 1):
            if match[i] >= gen_len:
                out.append(SquareOcc(i + 1, gen_len))
    out.sort()
    return out


def enumerate_squares_naive(w: str) -> list[SquareOcc]:
    """Three-loop oracle for :func:`enumerate_squares`; the ground truth in tests."""
    n = len(w)
    out = []
    for i in range(n):
        for gen_len in range(1, (n - i) // 2 + 1):
            if w[i : i + gen_len] == w[i + gen_len : i + 2 * gen_len]:
                out.append(SquareOcc(i + 1, gen_len))
    return out


def rightmost_table(w: str) -> RightmostTable:
    """Rightmost occurrence of every distinct square content of ``w``."""
    best: dict[str, SquareOcc] = {}
    for occ in enumerate_squares(w):
        # occurrences arrive sorted by start, so the last write wins
        best[occ.content(w)] = occ
    by_start: dict[int, list[SquareOcc]] = {}
    for occ in best.values():
        by_start.setdefault(occ.start, []).append(occ)
    for start, occs in by_start.items():
        occs.sort(key=lambda o: o.gen_len)
        if len(occs) > 2:
            raise FalsificationError("two-rightmost-squares theorem", w, occs)
    return RightmostTable(best, by_start)


def distinct_square_count(w: str) -> int:
    """Number of distinct squares in ``w`` (counted by content)."""
    return len(rightmost_table(w))


def nonprimitive_rooted_count(w: str) -> int:
    """Number of distinct squares of ``w`` whose generator is non-primitive."""
    table = rightmost_table(w)
    return sum(1 for occ in table.by_content.values() if not is_primitive(occ.generator(w)))
