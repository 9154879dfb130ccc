"""FS-double squares and their canonical factorization.

A double square is a pair of squares ``u**2`` and ``U**2`` starting at the
same position with ``|u| < |U|``; it is balanced when ``|U| < 2|u|`` and an
FS-double square when both squares are rightmost occurrences in the host.
Every FS-double square factorizes uniquely as::

    u = u1**e1 * u2        U = u1**e1 * u2 * u1**e2

with ``u1`` primitive, ``u2`` a non-trivial proper prefix of ``u1`` and
``e1 >= e2 >= 1``.  The factorization is computed constructively from the
overlap of ``U`` with the second copy of ``u``; a brute-force candidate scan
is kept alongside as the uniqueness oracle.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import is_primitive, lcp, lcs, occurrences, primitive_root
from .squares import rightmost_table


@dataclass(frozen=True)
class DoubleSquare:
    """An FS-double-square instance bound to its host word (1-based start)."""

    start: int
    u_len: int
    U_len: int
    host: str

    @property
    def u(self) -> str:
        return self.host[self.start - 1 : self.start - 1 + self.u_len]

    @property
    def U(self) -> str:
        return self.host[self.start - 1 : self.start - 1 + self.U_len]

    @property
    def u_end(self) -> int:
        """End position (1-based, inclusive) of the first copy of ``u``."""
        return self.start + self.u_len - 1

    @property
    def U_square_end(self) -> int:
        return self.start + 2 * self.U_len - 1


@dataclass(frozen=True)
class Factorization:
    """Canonical decomposition (u1, u2, e1, e2) with its derived conjugates."""

    u1: str
    u2: str
    e1: int
    e2: int
    u2_bar: str
    u1_hat: str

    @property
    def u(self) -> str:
        return self.u1 * self.e1 + self.u2

    @property
    def U(self) -> str:
        return self.u1 * self.e1 + self.u2 + self.u1 * self.e2


def make_factorization(u1: str, u2: str, e1: int, e2: int) -> Factorization:
    return Factorization(u1, u2, e1, e2, u2_bar=u1[len(u2):], u1_hat=u1[len(u2):] + u2)


def _require_balanced(u: str, U: str) -> None:
    if not (U.startswith(u) and len(u) < len(U) < 2 * len(u)):
        raise ValueError("not a balanced double square")


def factorize(u: str, U: str) -> Factorization:
    """Canonical factorization of the balanced double square ``(u, U)``.

    Follows the constructive argument: ``v1``, the part of ``U`` past ``u``,
    is a power of the primitive ``u1``; ``e1`` and ``u2`` are then read off
    ``u``.  Raises ``ValueError`` when the pair is not balanced or admits no
    valid factorization.
    """
    _require_balanced(u, U)
    v1 = U[len(u):]
    u1, e2 = primitive_root(v1)
    e1 = 0
    i = 0
    while u.startswith(u1, i):
        i += len(u1)
        e1 += 1
    u2 = u[i:]
    if not u2 or not u1.startswith(u2) or e1 < e2 or e2 < 1:
        raise ValueError("not factorizable")
    fact = make_factorization(u1, u2, e1, e2)
    if fact.u != u or fact.U != U:
        raise ValueError("not factorizable")
    return fact


def factorization_candidates(u: str, U: str) -> list[Factorization]:
    """Brute-force scan over every (u1, u2, e1, e2) reassembling ``(u, U)``.

    Exhaustive oracle used to confirm uniqueness of :func:`factorize`; it
    tries every primitive prefix length and every exponent pair.
    """
    _require_balanced(u, U)
    found = []
    for p in range(1, len(u)):
        u1 = u[:p]
        if not is_primitive(u1):
            continue
        e1 = 0
        i = 0
        while u.startswith(u1, i):
            i += p
            e1 += 1
        for e in range(1, e1 + 1):
            u2 = u[e * p :]
            if not u2 or len(u2) >= p or not u1.startswith(u2):
                continue
            rest = U[len(u):]
            if len(rest) % p != 0:
                continue
            e2 = len(rest) // p
            if not (1 <= e2 <= e) or u1 * e2 != rest:
                continue
            if u1 * e + u2 == u:
                found.append(make_factorization(u1, u2, e, e2))
    return found


def check_factorizable(u: str, U: str) -> set[str]:
    """Which of the factorization conditions hold for the balanced pair.

    ``a``: u primitive, ``b``: U primitive, ``c``: u**2 occurs only once
    in U**2.
    """
    _require_balanced(u, U)
    labels = set()
    if is_primitive(u):
        labels.add("a")
    if is_primitive(U):
        labels.add("b")
    if occurrences(u + u, U + U) == [1]:
        labels.add("c")
    return labels


def shift_budget(f: Factorization) -> tuple[int, int]:
    """Maximal (left, right) cyclic-shift budget: (lcs, lcp) of u1 vs u1_hat.

    The sum is always at most ``|u1| - 2``.
    """
    return lcs(f.u1, f.u1_hat), lcp(f.u1, f.u1_hat)


def verify_nonprimitive_case(u: str, U: str) -> bool:
    """Check the constrained shape forced when the shorter generator is a power.

    Requires ``(u, U)`` factorizable with ``u = v**k`` for primitive ``v`` and
    ``k >= 2``; then the claim is ``e1 == e2 == 1``, ``U == v**(2k-1) * v1``
    for a non-trivial proper prefix ``v1`` of ``v``, ``u1 == v**(k-1) * v1``
    and ``v1 + u2 == v``.
    """
    fact = factorize(u, U)
    v, k = primitive_root(u)
    if k < 2:
        raise ValueError("shorter generator is primitive")
    if fact.e1 != 1 or fact.e2 != 1:
        return False
    prefix = v * (2 * k - 1)
    if not U.startswith(prefix):
        return False
    v1 = U[len(prefix):]
    if not (0 < len(v1) < len(v)) or not v.startswith(v1):
        return False
    return fact.u1 == v * (k - 1) + v1 and v1 + fact.u2 == v


def find_fs_double_squares(w: str) -> list[tuple[DoubleSquare, Factorization]]:
    """Every FS-double square of ``w`` with its factorization, sorted by start."""
    table = rightmost_table(w)
    out = []
    for start in sorted(table.by_start):
        occs = table.by_start[start]
        if len(occs) != 2:
            continue
        u_len, U_len = occs[0].gen_len, occs[1].gen_len
        ds = DoubleSquare(start, u_len, U_len, w)
        out.append((ds, factorize(ds.u, ds.U)))
    return out
