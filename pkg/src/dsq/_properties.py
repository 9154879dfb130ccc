"""Deep per-word property checks driven by the exhaustive verifier.

Each checker receives a :class:`WordAnalysis` and returns a list of witness
dicts, empty when the property holds.  These run only on words that contain
at least one FS-double square (the cheap counting properties are evaluated
inside the scan kernel); pair- and triple-quantified claims iterate over the
word's FS-double squares directly.

Host-anchored claims (the v-case taxonomy, rot1, the alpha-family delta
claim) are evaluated on words whose first FS-double square starts at
position 1; over a canonical corpus this loses nothing, because the suffix
starting at any FS-double square reappears, renamed, as its own corpus word.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .core import is_primitive, lcp, lcs, rotate
from .doublesq import factorization_candidates, find_fs_double_squares, shift_budget
from .families import FamilyKind, SegmentKind, decompose_family, family_size_bound
from .inversion import find_inversion_factors, intervals, natural_inversion_factor
from .mates import MateKind, Pair, classify_mate, gamma_type, gap_tail, r1_host
from .squares import rightmost_table


@dataclass
class WordAnalysis:
    word: str
    pairs: list[Pair] = field(default_factory=list)

    @classmethod
    def build(cls, word: str) -> "WordAnalysis":
        return cls(word, find_fs_double_squares(word))

    @property
    def starts_with_fs(self) -> bool:
        return bool(self.pairs) and self.pairs[0][0].start == 1


def check_factorization(ctx: WordAnalysis) -> list[dict]:
    out = []
    for ds, f in ctx.pairs:
        problems = []
        if f.u != ds.u or f.U != ds.U:
            problems.append("reassembly mismatch")
        if not (f.e1 >= f.e2 >= 1):
            problems.append("exponent order")
        if not (1 <= len(f.u2) < len(f.u1)) or not f.u1.startswith(f.u2):
            problems.append("u2 not a non-trivial proper prefix")
        if not is_primitive(f.u1):
            problems.append("u1 not primitive")
        if not is_primitive(f.U):
            problems.append("U not primitive")
        if 2 * ds.U_len < 10:
            problems.append("double square shorter than 10")
        if f.u2_bar != f.u1[len(f.u2):] or f.u1_hat != f.u2_bar + f.u2:
            problems.append("derived parts inconsistent")
        if problems:
            out.append({"start": ds.start, "problems": problems})
    return out


def check_factorization_unique(ctx: WordAnalysis) -> list[dict]:
    out = []
    for ds, f in ctx.pairs:
        cands = factorization_candidates(ds.u, ds.U)
        if len(cands) != 1 or cands[0] != f:
            out.append({"start": ds.start, "candidates": len(cands)})
            continue
        if f.e1 >= 2:
            # string-level uniqueness: u = w1**f1 w2 with f1 >= 2 only one way
            u = ds.u
            decomps = []
            for p in range(1, len(u)):
                w1 = u[:p]
                if not is_primitive(w1):
                    continue
                f1 = 0
                i = 0
                while u.startswith(w1, i):
                    i += p
                    f1 += 1
                for e in range(2, f1 + 1):
                    w2 = u[e * p :]
                    if 0 < len(w2) < p and w1.startswith(w2) and w1 * e + w2 == u:
                        decomps.append((w1, e, w2))
            if decomps != [(f.u1, f.e1, f.u2)]:
                out.append({"start": ds.start, "decompositions": decomps})
    return out


def check_canon1(ctx: WordAnalysis) -> list[dict]:
    out = []
    for ds, f in ctx.pairs:
        u, U = ds.u, ds.U
        for p in range(1, len(u)):
            v1 = u[:p]
            if not is_primitive(v1):
                continue
            i = 0
            j = 0
            while u.startswith(v1, j):
                j += p
                i += 1
            for e in range(1, i + 1):
                v2 = u[e * p :]
                if not (0 < len(v2) < p) or not v1.startswith(v2):
                    continue
                rest = len(U) - len(v2)
                if rest > 0 and rest % p == 0 and v1 * (rest // p) + v2 == U:
                    out.append({"start": ds.start, "v1": v1, "v2": v2})
    return out


def check_shift_budget_bound(ctx: WordAnalysis) -> list[dict]:
    out = []
    for ds, f in ctx.pairs:
        if lcp(f.u1, f.u1_hat) + lcs(f.u1, f.u1_hat) > len(f.u1) - 2:
            out.append({"start": ds.start, "u1": f.u1})
    return out


def check_nonprimitive_generator_case(ctx: WordAnalysis) -> list[dict]:
    from .doublesq import verify_nonprimitive_case

    out = []
    for ds, f in ctx.pairs:
        if is_primitive(ds.u):
            continue
        if not verify_nonprimitive_case(ds.u, ds.U):
            out.append({"start": ds.start, "u": ds.u, "U": ds.U})
    return out


def check_inversion_factor_lemma(ctx: WordAnalysis) -> list[dict]:
    out = []
    for ds, f in ctx.pairs:
        scanned = find_inversion_factors(f)
        closed = intervals(f).positions()
        if scanned != closed:
            out.append({"start": ds.start, "scan": scanned, "intervals": closed})
    return out


def check_inversion_intervals(ctx: WordAnalysis) -> list[dict]:
    out = []
    for ds, f in ctx.pairs:
        iv = intervals(f)
        p1 = len(f.u1)
        uu_len = 2 * ds.U_len
        problems = []
        if not (iv.L1 <= iv.R1 < ds.u_len < ds.u_len + 1 < iv.L2 <= iv.R2):
            problems.append("position chain broken")
        if iv.R2 > uu_len - 2 * p1 + 1:
            problems.append("R2 past last valid position")
        if iv.R1 - iv.L1 > p1 - 2 or iv.R2 - iv.L2 > p1 - 2:
            problems.append("interval wider than shift budget")
        # the |U|-spacing equalities only hold while neither end is clamped
        left, right = shift_budget(f)
        if iv.N1 - left >= 1 and iv.N2 + right <= uu_len - 2 * p1 + 1:
            if iv.L2 - iv.L1 != ds.U_len or iv.R2 - iv.R1 != ds.U_len:
                problems.append("interval spacing differs from |U|")
            if iv.R1 - iv.L1 != iv.R2 - iv.L2:
                problems.append("interval widths differ")
        uu = f.U * 2
        nat = natural_inversion_factor(f)
        for pos in (iv.N1, iv.N2):
            if uu[pos - 1 : pos - 1 + 2 * p1] != nat:
                problems.append(f"natural factor missing at {pos}")
        b, c = len(f.u2_bar), len(f.u2)
        for pos in find_inversion_factors(f):
            x = uu[pos - 1 : pos - 1 + 2 * p1]
            v2b, v2 = x[:b], x[b : b + c]
            if x != v2b + v2 + v2 + v2b:
                problems.append(f"factor at {pos} lacks the swapped shape")
        if problems:
            out.append({"start": ds.start, "problems": problems})
    return out


def _epsilon_raw(U: Pair, V: Pair) -> tuple[bool, bool]:
    """(is epsilon by raw condition, is super epsilon by raw condition)."""
    ds_u, _ = U
    ds_v, _ = V
    eps = r1_host(U) <= ds_v.start
    return eps, eps and ds_u.start + ds_u.u_len - 1 < ds_v.start


def check_mate_taxonomy(ctx: WordAnalysis) -> list[dict]:
    out = []
    for U, V in combinations(ctx.pairs, 2):
        kind = classify_mate(U, V)
        ds_u, f_u = U
        ds_v, _ = V
        r1 = r1_host(U)
        if kind is MateKind.unclassified:
            out.append({"from": ds_u.start, "to": ds_v.start, "problem": "unclassified"})
            continue
        if ds_v.start < r1:
            if kind not in (MateKind.alpha, MateKind.beta, MateKind.gamma, MateKind.delta):
                out.append({"from": ds_u.start, "to": ds_v.start,
                            "problem": f"{kind.value} before R1"})
        else:
            if kind not in (MateKind.epsilon, MateKind.super_epsilon):
                out.append({"from": ds_u.start, "to": ds_v.start,
                            "problem": f"{kind.value} at or past R1"})
            if ds_v.start + ds_v.u_len - 1 <= ds_u.start + ds_u.u_len - 1:
                out.append({"from": ds_u.start, "to": ds_v.start,
                            "problem": "epsilon mate ends within first u"})
        if kind is MateKind.beta and not f_u.e1 >= f_u.e2 + 2:
            out.append({"from": ds_u.start, "to": ds_v.start,
                        "problem": "beta without exponent gap"})
    return out


def _shifted_form(u1: str, u2: str, v: str) -> int | None:
    """Exponent j when v = rot(u1)**j rot(u2) for a common rotation, else None."""
    if (len(v) - len(u2)) % len(u1) != 0:
        return None
    j = (len(v) - len(u2)) // len(u1)
    if j < 1:
        return None
    for amount in range(len(u1)):
        for sign in (1, -1):
            u1r = rotate(u1, sign * amount)
            u2r = rotate(u2, sign * amount)
            if u1r.startswith(u2r) and u1r * j + u2r == v:
                return j
    return None


def check_v_cases(ctx: WordAnalysis) -> list[dict]:
    out = []
    table = rightmost_table(ctx.word)
    occs = [occ for occs in table.by_start.values() for occ in occs]
    for ds, f in ctx.pairs:
        r1 = r1_host((ds, f))
        u_end = ds.start + ds.u_len - 1
        for occ in occs:
            if occ.start < ds.start:
                continue
            v_len = occ.gen_len
            v = occ.generator(ctx.word)
            v_end = occ.start + v_len - 1
            if occ.start < r1:
                if v_len < ds.u_len:
                    j = _shifted_form(f.u1, f.u2, v)
                    if j is None or not 1 <= j < f.e1:
                        out.append({"anchor": ds.start, "v_start": occ.start,
                                    "case": "a1", "v": v})
                elif v_len == ds.u_len:
                    j = _shifted_form(f.u1, f.u2, v)
                    if j != f.e1:
                        out.append({"anchor": ds.start, "v_start": occ.start,
                                    "case": "a2", "v": v})
                elif v_len < ds.U_len:
                    out.append({"anchor": ds.start, "v_start": occ.start,
                                "case": "a3 materialized", "v": v})
                elif v_len == ds.U_len:
                    if v_end < u_end:
                        out.append({"anchor": ds.start, "v_start": occ.start,
                                    "case": "a4 negative tail"})
                else:
                    if v_end < u_end or not _a5_prefix(f, v):
                        out.append({"anchor": ds.start, "v_start": occ.start,
                                    "case": "a5", "v": v})
            if v_end <= u_end:
                # ends within the first copy of u: must fall before R1 as a1/a2
                if not occ.start < r1:
                    out.append({"anchor": ds.start, "v_start": occ.start,
                                "case": "b position"})
                else:
                    j = _shifted_form(f.u1, f.u2, v)
                    if j is None or not 1 <= j <= f.e1:
                        out.append({"anchor": ds.start, "v_start": occ.start,
                                    "case": "b form", "v": v})
    return out


def _a5_prefix(f, v: str) -> bool:
    # same admissible prefixes as the delta clause, i = 0 included
    from .mates import _delta_prefix_forms

    return _delta_prefix_forms(f, v)


def check_gamma_exponents(ctx: WordAnalysis) -> list[dict]:
    out = []
    for U, V in combinations(ctx.pairs, 2):
        if classify_mate(U, V) is not MateKind.gamma:
            continue
        p, q = gamma_type(U, V[0])
        if p >= 2 and q >= 2 and p + q >= 4:
            f_v = V[1]
            if f_v.e1 != f_v.e2:
                out.append({"from": U[0].start, "to": V[0].start,
                            "problem": f"gamma mate exponents {f_v.e1},{f_v.e2}"})
            if len(f_v.u2) > min(p, q) * len(U[1].u1):
                out.append({"from": U[0].start, "to": V[0].start,
                            "problem": "gamma mate u2 too long"})
    return out


def check_gamma_epsilon_gap(ctx: WordAnalysis) -> list[dict]:
    out = []
    for U, V, W in combinations(ctx.pairs, 3):
        if classify_mate(U, V) is not MateKind.gamma:
            continue
        p, q = gamma_type(U, V[0])
        if not (p >= 2 and q >= 2):
            continue
        eps, super_eps = _epsilon_raw(V, W)
        if not eps or super_eps:
            continue
        t = U[1].e1 - p
        gt = gap_tail(U[0], W[0])
        p1 = len(U[1].u1)
        if gt.gap < t * p1 or gt.tail < (U[1].e1 + U[1].e2) * p1:
            out.append({"U": U[0].start, "V": V[0].start, "W": W[0].start,
                        "gap": gt.gap, "tail": gt.tail})
    return out


def check_super_epsilon_bounds(ctx: WordAnalysis) -> list[dict]:
    out = []
    for U, V in combinations(ctx.pairs, 2):
        _, super_eps = _epsilon_raw(U, V)
        if not super_eps:
            continue
        f = U[1]
        p1, p2 = len(f.u1), len(f.u2)
        gt = gap_tail(U[0], V[0])
        a_ok = (gt.gap >= (2 * f.e1 + f.e2 - 3) * p1 + 2 * p2
                and gt.tail >= (f.e1 + f.e2 - 2) * p1 + p2)
        b_ok = (gt.gap >= f.e1 * p1 + p2
                and gt.tail >= (f.e1 + f.e2 - 1) * p1 + p2)
        if not (a_ok or b_ok):
            out.append({"from": U[0].start, "to": V[0].start,
                        "gap": gt.gap, "tail": gt.tail})
    return out


def check_family_size(ctx: WordAnalysis) -> list[dict]:
    if not ctx.pairs:
        return []
    fam = decompose_family(ctx.word)
    bound = family_size_bound(fam)
    if fam.size > bound:
        return [{"kind": fam.kind.value, "size": fam.size, "bound": bound}]
    return []


def check_family_segments(ctx: WordAnalysis) -> list[dict]:
    if not ctx.pairs:
        return []
    out = []
    fam = decompose_family(ctx.word)
    f = fam.leader.factorization
    _, right = shift_budget(f)
    betas = [s for s in fam.segments if s.kind is SegmentKind.beta_segment]
    for seg in fam.segments:
        if seg.kind is SegmentKind.alpha_segment and len(seg.members) > right + 1:
            out.append({"segment": seg.type_pair, "problem": "alpha segment too large"})
        if seg.kind is SegmentKind.beta_segment and len(seg.members) > len(f.u1) - 1:
            out.append({"segment": seg.type_pair, "problem": "beta segment too large"})
    for prev, cur in zip(betas, betas[1:]):
        dp = prev.type_pair[0] - cur.type_pair[0]
        dq = cur.type_pair[1] - prev.type_pair[1]
        if dp <= 0 or dp != dq:
            out.append({"segments": (prev.type_pair, cur.type_pair),
                        "problem": "beta segment types not shifting evenly"})
    gammas = [s for s in fam.segments if s.kind is SegmentKind.gamma_segment]
    if gammas:
        first_gamma = gammas[0].members[0]
        g_pair = (first_gamma.square, first_gamma.factorization)
        for seg in gammas:
            for m in seg.members:
                if m.square.start == first_gamma.square.start:
                    continue
                kind = classify_mate(g_pair, (m.square, m.factorization))
                if kind is not MateKind.alpha:
                    out.append({"gamma_member": m.square.start,
                                "problem": f"not an alpha mate of the first gamma ({kind.value})"})
    return out


def check_rot1(ctx: WordAnalysis) -> list[dict]:
    if not ctx.starts_with_fs:
        return []
    ds, f = ctx.pairs[0]
    if f.e1 != f.e2:
        return []
    y = ctx.word[2 * ds.U_len :]
    if len(y) > len(f.u2) and lcp(ds.u, y) >= len(f.u2):
        return [{"y": y, "lcp": lcp(ds.u, y)}]
    return []


def check_bottomless_alpha(ctx: WordAnalysis) -> list[dict]:
    if not ctx.starts_with_fs:
        return []
    fam = decompose_family(ctx.word)
    if fam.kind is not FamilyKind.alpha or len(ctx.pairs) != fam.size:
        return []
    n = len(ctx.word)
    u_len = ctx.pairs[0][0].u_len
    if 6 * len(ctx.pairs) > 5 * n - 2 * u_len:
        return [{"delta": len(ctx.pairs), "n": n, "u_len": u_len}]
    return []


DEEP_CHECKS = {
    "factorization": check_factorization,
    "factorization_unique": check_factorization_unique,
    "canon1": check_canon1,
    "shift_budget_bound": check_shift_budget_bound,
    "nonprimitive_generator_case": check_nonprimitive_generator_case,
    "inversion_factor_lemma": check_inversion_factor_lemma,
    "inversion_intervals": check_inversion_intervals,
    "mate_taxonomy": check_mate_taxonomy,
    "v_cases": check_v_cases,
    "gamma_exponents": check_gamma_exponents,
    "gamma_epsilon_gap": check_gamma_epsilon_gap,
    "super_epsilon_bounds": check_super_epsilon_bounds,
    "family_size": check_family_size,
    "family_segments": check_family_segments,
    "rot1": check_rot1,
    "bottomless_alpha": check_bottomless_alpha,
}
