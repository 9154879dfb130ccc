"""Primitive-word operations shared by every analysis in the package.

Words are plain ``str`` values over the lowercase letters ``a``-``z``.
Every position that crosses the public API is 1-based and inclusive;
internal slicing is ordinary 0-based Python and each boundary converts
exactly once.
"""

from __future__ import annotations

from dataclasses import dataclass

ALPHABET = "abcdefghijklmnopqrstuvwxyz"

_ALLOWED = frozenset(ALPHABET)


@dataclass(frozen=True)
class Factor:
    """A designated substring host[start..end], both ends 1-based inclusive."""

    start: int
    end: int
    host: str

    def __post_init__(self):
        if not 1 <= self.start <= self.end <= len(self.host):
            raise ValueError(f"factor bounds [{self.start}, {self.end}] out of range")

    @property
    def text(self) -> str:
        return self.host[self.start - 1 : self.end]

    def __len__(self) -> int:
        return self.end - self.start + 1


def check_word(w: str) -> str:
    """Validate that ``w`` uses only ``a``-``z`` and return it unchanged."""
    for idx, ch in enumerate(w):
        if ch not in _ALLOWED:
            raise ValueError(f"invalid symbol {ch!r} at position {idx + 1}")
    return w


def primitive_root(w: str) -> tuple[str, int]:
    """Return ``(root, exponent)`` with ``root ** exponent == w`` and root primitive.

    Computed as the smallest period ``p`` dividing ``len(w)`` for which
    ``w[:-p] == w[p:]``; the pair is unique.
    """
    n = len(w)
    if n == 0:
        raise ValueError("empty word has no primitive root")
    for p in range(1, n + 1):
        if n % p == 0 and w[:p] * (n // p) == w:
            return w[:p], n // p
    raise AssertionError("unreachable: every word is a power of itself")


def is_primitive(w: str) -> bool:
    """True iff ``w`` is not a non-trivial power of a shorter word."""
    return primitive_root(w)[1] == 1


def are_conjugates(x: str, y: str) -> bool:
    """True iff ``y`` is a rotation of ``x`` (equivalently ``y`` occurs in ``x + x``)."""
    return len(x) == len(y) and y in x + x


def lcp(x: str, y: str) -> int:
    """Length of the longest common prefix of ``x`` and ``y``."""
    k = 0
    for a, b in zip(x, y):
        if a != b:
            break
        k += 1
    return k


def lcs(x: str, y: str) -> int:
    """Length of the longest common suffix of ``x`` and ``y``."""
    k = 0
    for a, b in zip(reversed(x), reversed(y)):
        if a != b:
            break
        k += 1
    return k


def occurrences(pattern: str, text: str) -> list[int]:
    """All 1-based start positions of ``pattern`` in ``text``, overlaps included."""
    if not pattern:
        raise ValueError("empty pattern")
    out = []
    i = text.find(pattern)
    while i != -1:
        out.append(i + 1)
        i = text.find(pattern, i + 1)
    return out


def rotate(w: str, k: int) -> str:
    """Rotation of ``w`` moving the window ``k`` symbols to the right.

    ``k`` may be negative (window moves left) and is taken modulo ``len(w)``.
    """
    if not w:
        return w
    k %= len(w)
    return w[k:] + w[:k]
