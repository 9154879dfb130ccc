"""Inversion factors of a factorizable double square.

An inversion factor is a length ``2|u1|`` factor of ``U**2`` whose two halves
swap the ``u2`` / ``u2_bar`` parts of the periodic structure.  The natural
ones sit at the closed-form positions N1 and N2; cyclic shifts spread them
over the intervals [L1, R1] and [L2, R2], and those intervals are exactly the
set of inversion-factor positions.  All positions here are 1-based and local
to ``U**2`` (position 1 is the first symbol of the double square).
"""

from __future__ import annotations

from dataclasses import dataclass

from .doublesq import Factorization, shift_budget


@dataclass(frozen=True)
class InvIntervals:
    """Natural inversion-factor positions and their shift intervals."""

    N1: int
    N2: int
    L1: int
    R1: int
    L2: int
    R2: int

    def positions(self) -> list[int]:
        return list(range(self.L1, self.R1 + 1)) + list(range(self.L2, self.R2 + 1))


def natural_inversion_factor(f: Factorization) -> str:
    """Content of the natural inversion factor: u2_bar u2 u2 u2_bar."""
    return f.u2_bar + f.u2 + f.u2 + f.u2_bar


def intervals(f: Factorization) -> InvIntervals:
    """Closed-form inversion-factor intervals of the double square."""
    p1, u2 = len(f.u1), len(f.u2)
    left, right = shift_budget(f)
    uu_len = 2 * ((f.e1 + f.e2) * p1 + u2)
    n1 = (f.e1 - 1) * p1 + u2 + 1
    n2 = (2 * f.e1 + f.e2 - 1) * p1 + 2 * u2 + 1
    return InvIntervals(
        N1=n1,
        N2=n2,
        L1=max(1, n1 - left),
        R1=n1 + right,
        L2=n2 - left,
        R2=min(uu_len - 2 * p1 + 1, n2 + right),
    )


def is_inversion_factor_at(f: Factorization, i: int) -> bool:
    """Definition-based membership test at 1-based position ``i`` of ``U**2``."""
    uu = f.U * 2
    p1, u2, bar = len(f.u1), len(f.u2), len(f.u2_bar)
    if not 1 <= i <= len(uu) - 2 * p1 + 1:
        raise ValueError(f"position {i} out of range")
    base = i - 1
    for j in range(bar):
        if uu[base + j] != uu[base + j + p1 + u2]:
            return False
    for j in range(bar, u2 + bar):
        if uu[base + j] != uu[base + j + u2]:
            return False
    return True


def find_inversion_factors(f: Factorization) -> list[int]:
    """All inversion-factor positions of ``U**2``, by definition scan.

    The scan is the ground truth; :func:`intervals` is the closed-form claim
    checked against it.
    """
    uu_len = 2 * len(f.U)
    top = uu_len - 2 * len(f.u1) + 1
    return [i for i in range(1, top + 1) if is_inversion_factor_at(f, i)]
