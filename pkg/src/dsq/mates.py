"""Gap/tail arithmetic and the mate classification of FS-double-square pairs.

For two FS-double squares U and V of the same host with s(U) < s(V), V falls
into one of five relations to U: alpha (right cyclic shift of the whole
structure), beta (shifted structure with a smaller first exponent), gamma
(shorter square of V matches the longer square of U), delta (V reaches past
U's structure with a constrained prefix), or epsilon (V starts at or past
R1(U); super-epsilon when it starts past the first copy of u).  The clauses
are evaluated in definitional order and the first match wins; overlapping raw
conditions are logged rather than resolved silently.

All positions are 1-based host coordinates; interval positions local to U**2
are translated by s(U) - 1.
"""

from __future__ import annotations

import enum
import itertools
import logging
from dataclasses import dataclass

from .core import rotate
from .doublesq import DoubleSquare, Factorization, shift_budget
from .inversion import intervals

log = logging.getLogger(__name__)

Pair = tuple[DoubleSquare, Factorization]


class MateKind(enum.Enum):
    alpha = "alpha"
    beta = "beta"
    gamma = "gamma"
    delta = "delta"
    epsilon = "epsilon"
    super_epsilon = "super_epsilon"
    unclassified = "unclassified"


@dataclass(frozen=True)
class GapTail:
    """Gap G = s(v) - s(u) and tail T = e(v) - e(u) of the shorter squares."""

    gap: int
    tail: int


def gap_tail(U: DoubleSquare, V: DoubleSquare) -> GapTail:
    if U.host != V.host:
        raise ValueError("different hosts")
    if U.start >= V.start:
        raise ValueError("first double square must start strictly earlier")
    gap = V.start - U.start
    return GapTail(gap=gap, tail=gap + V.u_len - U.u_len)


def r1_host(U: Pair) -> int:
    """R1 of U translated to host coordinates."""
    ds, fact = U
    return ds.start - 1 + intervals(fact).R1


def _window_shifts_right(host: str, start: int, width: int, k: int) -> bool:
    """Can the factor host[start .. start+width-1] cyclically shift right k times?

    Shifting right one position requires the symbol entering on the right to
    equal the one leaving on the left; ``start`` is 1-based.
    """
    if start + width + k - 1 > len(host):
        return False
    base = start - 1
    return all(host[base + t] == host[base + width + t] for t in range(k))


def is_right_cyclic_shift(U: DoubleSquare, V: DoubleSquare) -> bool:
    """True iff V's squares are the right cyclic shifts of U's by s(V) - s(U)."""
    k = V.start - U.start
    return (
        V.u_len == U.u_len
        and V.U_len == U.U_len
        and _window_shifts_right(U.host, U.start, 2 * U.u_len, k)
        and _window_shifts_right(U.host, U.start, 2 * U.U_len, k)
    )


def _rotation_pairs(u1: str, u2: str):
    """All (u1_rot, u2_rot) from shifting u1 and u2 together, both directions."""
    for amount in range(len(u1)):
        for sign in (1, -1):
            yield rotate(u1, sign * amount), rotate(u2, sign * amount)


def _beta_exponent(U: Pair, V: Pair, r1: int) -> int | None:
    """Exponent i of the beta form, or None when the structural test fails.

    The beta clause is applied structurally: V starts before R1(U), keeps the
    longer square's length, its shorter generator is u1_rot**i u2_rot for
    rotations of u1 and u2 by a common amount and direction, and V**2 is the
    right cyclic shift of U**2 by the start difference.  The definitional
    position chain s(V) < e(v_1) < e(u_1) holds for fresh beta-mates but
    fails (with equality or reversal) for the later members of a beta
    segment, so it is logged rather than enforced.
    """
    ds_u, f = U
    ds_v, _ = V
    if ds_v.start >= r1:
        return None
    if ds_v.U_len != ds_u.U_len or ds_v.u_len >= ds_u.u_len:
        return None
    p1, p2 = len(f.u1), len(f.u2)
    if (ds_v.u_len - p2) % p1 != 0:
        return None
    i = (ds_v.u_len - p2) // p1
    if i < 1:
        return None
    v = ds_v.u
    form_ok = any(
        u2r == u1r[: len(u2r)] and v == u1r * i + u2r
        for u1r, u2r in _rotation_pairs(f.u1, f.u2)
    )
    if not form_ok:
        return None
    if not _window_shifts_right(
        ds_u.host, ds_u.start, 2 * ds_u.U_len, ds_v.start - ds_u.start
    ):
        return None
    return i


def _delta_prefix_forms(f: Factorization, v: str) -> bool:
    """The admissible prefixes a longer-than-U mate must start with.

    These read the host structure from the mate's start through the second
    natural inversion position: a partial block, i whole copies of u1, then
    u2 u1^(e1+e2-1) u2.  The i = 0 case (start strictly inside the
    u2_bar part of the last u1 block) is reachable whenever the right shift
    budget exceeds one, so it is admitted alongside the u2-suffix form.
    """
    core = f.u2 + f.u1 * (f.e1 + f.e2 - 1) + f.u2
    for s1_len in range(len(f.u2) + 1):
        s1 = f.u2[len(f.u2) - s1_len :]
        if v.startswith(s1 + f.u2_bar + core):
            return True
    max_i = (len(v) - len(core)) // len(f.u1) + 1
    for i in range(0, max_i + 1):
        for s1_len in range(len(f.u1) + 1):
            s1 = f.u1[len(f.u1) - s1_len :]
            if v.startswith(s1 + f.u1 * i + core):
                return True
    return False


def classify_mate(U: Pair, V: Pair) -> MateKind:
    """First matching mate clause for the ordered pair (U, V), same host."""
    ds_u, f = U
    ds_v, _ = V
    if ds_u.host != ds_v.host:
        raise ValueError("different hosts")
    if ds_u.start >= ds_v.start:
        raise ValueError("first double square must start strictly earlier")

    _, right = shift_budget(f)
    r1 = r1_host(U)
    matches = []
    if ds_v.start <= ds_u.start + right and is_right_cyclic_shift(ds_u, ds_v):
        matches.append(MateKind.alpha)
    beta_i = _beta_exponent(U, V, r1)
    if beta_i is not None:
        if beta_i >= 2:
            matches.append(MateKind.beta)
            if not ds_v.start + ds_v.u_len - 1 < ds_u.start + ds_u.u_len - 1:
                log.debug(
                    "beta mate at %d of %r fails the literal position chain",
                    ds_v.start, ds_u.host,
                )
        else:
            log.debug(
                "beta form with exponent 1 at %d of %r excluded by definition",
                ds_v.start, ds_u.host,
            )
    if ds_v.start < ds_u.start + f.e1 * len(f.u1) and ds_v.u_len == ds_u.U_len:
        matches.append(MateKind.gamma)
    if ds_v.start < r1 and ds_v.u_len > ds_u.U_len and _delta_prefix_forms(f, ds_v.u):
        matches.append(MateKind.delta)
    if r1 <= ds_v.start:
        if ds_u.start + ds_u.u_len - 1 < ds_v.start:
            matches.append(MateKind.super_epsilon)
        else:
            matches.append(MateKind.epsilon)
    if not matches:
        return MateKind.unclassified
    if len(matches) > 1:
        log.debug(
            "mate clauses overlap for starts %d,%d of %r: %s",
            ds_u.start, ds_v.start, ds_u.host, [m.value for m in matches],
        )
    return matches[0]


def gamma_type(U: Pair, V: DoubleSquare) -> tuple[int, int]:
    """Exponent type of a gamma-mate V expressed in U's factorization.

    V's shorter square is either the untouched block u1^(e1-t) u2 u1^(e2+t)
    or a wrapped split s2 u1^(e1-t-1) u2 u1^(e2+t) s1 with s1 s2 = u1; in the
    wrapped case the type only stays (e1-t, e2+t) while |s1| fits the
    remaining left-shift budget.
    """
    ds_u, f = U
    if V.u_len != ds_u.U_len or not V.start > ds_u.start:
        raise ValueError("not a gamma mate")
    if not V.start < ds_u.start + f.e1 * len(f.u1):
        raise ValueError("not a gamma mate")
    v = V.u
    left, _ = shift_budget(f)
    for t in range(f.e1):
        if v == f.u1 * (f.e1 - t) + f.u2 + f.u1 * (f.e2 + t):
            return f.e1 - t, f.e2 + t
        for s1_len in range(1, len(f.u1)):
            s1, s2 = f.u1[:s1_len], f.u1[s1_len:]
            if v == s2 + f.u1 * (f.e1 - t - 1) + f.u2 + f.u1 * (f.e2 + t) + s1:
                if s1_len <= len(f.u1) - left:
                    return f.e1 - t, f.e2 + t
                return f.e1 - t - 1, f.e2 + t + 1
    raise ValueError("gamma mate does not match either block form")


def classify_all(pairs: list[Pair]) -> list[tuple[Pair, Pair, MateKind]]:
    """Classification of every ordered pair among ``pairs`` (sorted by start)."""
    out = []
    for U, V in itertools.combinations(sorted(pairs, key=lambda p: p[0].start), 2):
        out.append((U, V, classify_mate(U, V)))
    return out
