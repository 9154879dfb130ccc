"""Family decomposition of the first FS-double square of a word.

The family of the first FS-double square U collects U together with its
alpha-mates, and, when the rightmost non-alpha mate is a beta-mate, also its
beta- and gamma-mates.  Members are grouped into segments: maximal runs (in
start order) of members with the same mate relation and the same exponent
pair, which for alpha/beta members is their own factorization (e1, e2).
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import ceil, floor

from .doublesq import DoubleSquare, Factorization, find_fs_double_squares
from .mates import MateKind, Pair, classify_mate


class FamilyKind(enum.Enum):
    alpha = "alpha"
    alpha_beta = "alpha_beta"
    alpha_beta_gamma = "alpha_beta_gamma"


class SegmentKind(enum.Enum):
    alpha_segment = "alpha_segment"
    beta_segment = "beta_segment"
    gamma_segment = "gamma_segment"


@dataclass(frozen=True)
class FamilyMember:
    square: DoubleSquare
    factorization: Factorization
    relation: MateKind | None  # None for the leading double square itself
    type_pair: tuple[int, int]


@dataclass(frozen=True)
class Segment:
    kind: SegmentKind
    type_pair: tuple[int, int]
    members: tuple[FamilyMember, ...]


@dataclass(frozen=True)
class Family:
    kind: FamilyKind
    members: tuple[FamilyMember, ...]
    segments: tuple[Segment, ...]

    @property
    def leader(self) -> FamilyMember:
        return self.members[0]

    @property
    def size(self) -> int:
        return len(self.members)


_SEGMENT_FOR = {
    MateKind.alpha: SegmentKind.alpha_segment,
    MateKind.beta: SegmentKind.beta_segment,
    MateKind.gamma: SegmentKind.gamma_segment,
}


def _members_of(pairs: list[Pair]) -> tuple[list[FamilyMember], list[MateKind]]:
    """Tag every FS-double square of the host against the first one."""
    U = pairs[0]
    members = [FamilyMember(U[0], U[1], None, (U[1].e1, U[1].e2))]
    kinds = []
    for V in pairs[1:]:
        kind = classify_mate(U, V)
        kinds.append(kind)
        members.append(FamilyMember(V[0], V[1], kind, (V[1].e1, V[1].e2)))
    return members, kinds


def decompose_family(w: str) -> Family:
    """The family of the first FS-double square of ``w``.

    Membership follows the defining case split: only alpha-mates unless the
    rightmost non-alpha mate is a beta-mate, in which case all alpha-, beta-
    and gamma-mates belong to the family.
    """
    pairs = find_fs_double_squares(w)
    if not pairs:
        raise ValueError("no double square")
    members, kinds = _members_of(pairs)

    non_alpha = [m for m in members[1:] if m.relation is not MateKind.alpha]
    if not non_alpha or non_alpha[-1].relation is not MateKind.beta:
        chosen = [m for m in members if m.relation in (None, MateKind.alpha)]
        kind = FamilyKind.alpha
    else:
        chosen = [
            m for m in members
            if m.relation in (None, MateKind.alpha, MateKind.beta, MateKind.gamma)
        ]
        has_gamma = any(m.relation is MateKind.gamma for m in chosen)
        kind = FamilyKind.alpha_beta_gamma if has_gamma else FamilyKind.alpha_beta

    segments = []
    def seg_key(m: FamilyMember):
        rel = MateKind.alpha if m.relation is None else m.relation
        return rel, m.type_pair

    for (rel, type_pair), group in itertools.groupby(chosen, key=seg_key):
        segments.append(Segment(_SEGMENT_FOR[rel], type_pair, tuple(group)))
    return Family(kind, tuple(chosen), tuple(segments))


def family_size_bound(fam: Family) -> int:
    """The applicable theoretical cap on the family size.

    alpha family: |u2| when e1 == e2, else |u1| - 1.  alpha+beta family, by
    the type (p - t, q + t) of its last segment: (p - q)/2 * |u1| + |u2| when
    the exponents meet, ceil((p - q)/2) * |u1| when q == 1, (p - q)/2 * |u1|
    otherwise.  alpha+beta+gamma family: floor(2 (p + 1) |u1| / 3).
    """
    f = fam.leader.factorization
    p, q, p1 = f.e1, f.e2, len(f.u1)
    if fam.kind is FamilyKind.alpha:
        return len(f.u2) if p == q else p1 - 1
    if fam.kind is FamilyKind.alpha_beta:
        last_p, last_q = fam.segments[-1].type_pair
        if last_p == last_q:
            return floor(Fraction(p - q, 2) * p1 + len(f.u2))
        if q == 1:
            return ceil(Fraction(p - q, 2)) * p1
        return floor(Fraction(p - q, 2) * p1)
    return floor(Fraction(2 * (p + 1) * p1, 3))


def iter_families(w: str):
    """Yield successive families by restarting past each family's last member.

    Artifact extension over the single-family definition: after a family is
    emitted, decomposition continues at the first FS-double square that is
    not one of its members.  Overlapping membership between emitted families
    is reported via the yielded flag, not asserted away.
    """
    seen_starts: set[int] = set()
    offset = 0  # 0-based prefix length stripped so far
    while True:
        suffix = w[offset:]
        if not find_fs_double_squares(suffix):
            return
        fam = decompose_family(suffix)
        member_starts = [m.square.start + offset for m in fam.members]
        overlap = bool(seen_starts.intersection(member_starts))
        seen_starts.update(member_starts)
        yield fam, offset, overlap
        rest = [
            (ds, fc) for ds, fc in find_fs_double_squares(suffix)
            if ds.start + offset not in seen_starts
        ]
        if not rest:
            return
        offset += rest[0][0].start - 1


__all__ = [
    "Family",
    "FamilyKind",
    "FamilyMember",
    "Segment",
    "SegmentKind",
    "decompose_family",
    "family_size_bound",
    "iter_families",
]
