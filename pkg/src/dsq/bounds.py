"""Counting bounds, exhaustive lemma verification, and the extremal search.

The verifier walks every canonical word (first occurrences of symbols in
alphabet order) up to a length cap.  Cheap counting properties are evaluated
inside the scan kernel; words containing FS-double squares are handed to the
deep Python checks.  Work is partitioned into prefix shards processed by a
thread pool (the compiled kernels release the GIL), merged in shard order so
results do not depend on the worker count, and optionally checkpointed to an
append-only cursor file with one ``shard_prefix=<word> completed=<bool>``
line per shard.
"""

from __future__ import annotations

import logging
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from . import _kernels
from ._kernels import FLAG_NAMES, decode_word, encode_word, shard_prefixes
from ._properties import DEEP_CHECKS, WordAnalysis
from .core import is_primitive
from .squares import rightmost_table

log = logging.getLogger(__name__)

KERNEL_PROPS = tuple(FLAG_NAMES)
DEEP_PROPS = tuple(DEEP_CHECKS)
ALL_PROPS = KERNEL_PROPS + DEEP_PROPS

MAX_LEN_ADVISORY = 24


@dataclass(frozen=True)
class BoundCheck:
    name: str
    bound: int
    observed: int
    passed: bool


@dataclass(frozen=True)
class BoundReport:
    n: int
    delta: int
    distinct: int
    checks: tuple[BoundCheck, ...]

    @property
    def all_passed(self) -> bool:
        return all(c.passed for c in self.checks)


@dataclass(frozen=True)
class SearchResult:
    d: int
    n: int
    sigma: int
    witnesses: tuple[str, ...]
    conjecture_holds: bool


@dataclass(frozen=True)
class Certificate:
    word: str
    prop: str
    witness: object


def delta(w: str) -> int:
    """Number of FS-double squares of ``w`` (positions with two rightmost squares)."""
    return sum(1 for occs in rightmost_table(w).by_start.values() if len(occs) == 2)


def check_bounds(w: str) -> BoundReport:
    """Evaluate every counting bound on one word.

    The strengthened form 6*delta <= 5n - 2|u| is included when the word
    starts with an FS-double square; it is kept in exact integers (scaled by
    six) so no check ever rides on floating point.
    """
    table = rightmost_table(w)
    n = len(w)
    d = sum(1 for occs in table.by_start.values() if len(occs) == 2)
    distinct = len(table)
    nonprim = sum(
        1 for occ in table.by_content.values() if not is_primitive(occ.generator(w))
    )
    checks = [
        BoundCheck("delta_bound", 5 * n // 6, d, d <= 5 * n // 6),
        BoundCheck("distinct_bound", 11 * n // 6, distinct, distinct <= 11 * n // 6),
        BoundCheck("distinct_2n", 2 * n, distinct, distinct <= 2 * n),
        BoundCheck(
            "nonprimitive_bound",
            max(0, n // 2 - 1),
            nonprim,
            nonprim <= max(0, n // 2 - 1),
        ),
    ]
    first = table.by_start.get(1)
    if first is not None and len(first) == 2:
        u_len = first[0].gen_len
        checks.append(
            BoundCheck(
                "strengthened_delta",
                5 * n - 2 * u_len,
                6 * d,
                6 * d <= 5 * n - 2 * u_len,
            )
        )
    return BoundReport(n=n, delta=d, distinct=distinct, checks=tuple(checks))


# ---------------------------------------------------------------------------
# shard bookkeeping

def _default_jobs() -> int:
    return os.cpu_count() or 1

def _read_cursor(path: str | None) -> set[str]:
    done = set()
    if path and os.path.exists(path):
        with open(path) as fh:
            for line in fh:
                fields = dict(
                    part.split("=", 1) for part in line.split() if "=" in part
                )
                if fields.get("completed") == "true":
                    done.add(fields.get("shard_prefix", ""))
    return done

def _append_cursor(path: str | None, prefix: str, extra: str = "") -> None:
    if path:
        with open(path, "a") as fh:
            fh.write(f"shard_prefix={prefix} completed=true{extra}\n")


# ---------------------------------------------------------------------------
# exhaustive verification

def exhaustive_verify(
    max_len: int,
    alphabet: int,
    suite: set[str] | frozenset[str],
    jobs: int | None = None,
    resume_path: str | None = None,
) -> list[Certificate]:
    """Run the named properties over every canonical word up to ``max_len``.

    Returns one certificate per (word, property) violation; an empty list
    means every property held on the whole corpus.  ``suite`` may contain
    any name from ``ALL_PROPS``.
    """
    if not suite:
        raise ValueError("suite is empty")
    unknown = set(suite) - set(ALL_PROPS)
    if unknown:
        raise ValueError(f"unknown properties: {sorted(unknown)}")
    if not 1 <= alphabet <= 26:
        raise ValueError("alphabet size out of range")
    if max_len < 1:
        raise ValueError("max_len must be positive")
    if max_len > MAX_LEN_ADVISORY:
        log.warning("max_len %d exceeds the advisory cap %d; expect a long run",
                    max_len, MAX_LEN_ADVISORY)
    jobs = jobs or _default_jobs()

    kernel_wanted = [p for p in KERNEL_PROPS if p in suite]
    deep_wanted = [p for p in DEEP_PROPS if p in suite]

    shard_len = min(4, max_len)
    shards: list[tuple[str, int]] = []
    if shard_len > 1:
        shards.append(("", shard_len - 1))
    if shard_len >= 1:
        shards.extend(
            (decode_word(p, len(p)), max_len)
            for p in shard_prefixes(alphabet, shard_len)
        )
    done = _read_cursor(resume_path)
    pending = [(i, s) for i, s in enumerate(shards) if s[0] not in done]

    results: dict[int, tuple] = {}

    def run_shard(item):
        idx, (prefix, shard_max) = item
        cap_deep = 1 << 16
        cap_cert = 1 << 12
        while True:
            deep_rows = np.zeros((cap_deep, shard_max + 1), np.int8)
            cert_rows = np.zeros((cap_cert, shard_max + 1), np.int8)
            cert_mask = np.zeros(cap_cert, np.int64)
            stats = np.zeros(4, np.int64)
            n_deep, n_cert = _kernels.scan_shard(
                encode_word(prefix), shard_max, alphabet,
                deep_rows, cert_rows, cert_mask, stats,
            )
            if n_deep <= cap_deep and n_cert <= cap_cert:
                return idx, (prefix, deep_rows, n_deep, cert_rows, cert_mask, n_cert, stats)
            cap_deep = max(cap_deep * 4, n_deep)
            cap_cert = max(cap_cert * 4, n_cert)

    if jobs > 1 and len(pending) > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            for idx, payload in pool.map(run_shard, pending):
                results[idx] = payload
                _append_cursor(resume_path, payload[0])
    else:
        for item in pending:
            idx, payload = run_shard(item)
            results[idx] = payload
            _append_cursor(resume_path, payload[0])

    certificates: list[Certificate] = []
    deep_words: list[str] = []
    for idx in sorted(results):
        prefix, deep_rows, n_deep, cert_rows, cert_mask, n_cert, _stats = results[idx]
        for r in range(n_cert):
            word = decode_word(cert_rows[r], int(cert_rows[r, -1]))
            mask = int(cert_mask[r])
            for bit, name in enumerate(KERNEL_PROPS):
                if mask & (1 << bit) and name in suite:
                    certificates.append(
                        Certificate(word, name, {"mask_bit": bit})
                    )
        for r in range(n_deep):
            deep_words.append(decode_word(deep_rows[r], int(deep_rows[r, -1])))

    if deep_wanted:
        for word in deep_words:
            ctx = WordAnalysis.build(word)
            for name in deep_wanted:
                for witness in DEEP_CHECKS[name](ctx):
                    certificates.append(Certificate(word, name, witness))
    return certificates


# ---------------------------------------------------------------------------
# extremal search

def sigma_search(
    d: int,
    n: int,
    jobs: int | None = None,
    resume_path: str | None = None,
) -> SearchResult:
    """Exact maximum of distinct primitively rooted squares at (d, n).

    Enumerates canonical words of length ``n`` with exactly ``d`` distinct
    symbols; witnesses are the first (up to ten) canonical maxima.  The
    result is identical for any worker count: shards are merged in canonical
    order.
    """
    if not 1 <= d <= 26:
        raise ValueError("d out of range")
    if d > n:
        raise ValueError("d exceeds n")
    jobs = jobs or _default_jobs()

    shard_len = min(5 if n >= 12 else 3, n)
    prefixes = shard_prefixes(min(d, 26), shard_len)
    cached: dict[int, tuple[int, list[str]]] = {}
    pending = []
    if resume_path and os.path.exists(resume_path):
        cached_lines = {}
        with open(resume_path) as fh:
            for line in fh:
                fields = dict(p.split("=", 1) for p in line.split() if "=" in p)
                if fields.get("completed") == "true":
                    cached_lines[fields.get("shard_prefix", "")] = fields
        for i, p in enumerate(prefixes):
            word = decode_word(p, len(p))
            fields = cached_lines.get(word)
            if fields is not None and "sigma" in fields:
                wits = fields.get("witnesses", "")
                cached[i] = (
                    int(fields["sigma"]),
                    [w for w in wits.split(",") if w],
                )
            else:
                # a completion line without a result is re-run
                pending.append((i, p))
    else:
        pending = list(enumerate(prefixes))

    def run_shard(item):
        idx, prefix = item
        wit_rows = np.zeros((10, n), np.int8)
        stats = np.zeros(2, np.int64)
        best, n_wit = _kernels.sigma_shard(prefix, n, d, 0, wit_rows, stats)
        wits = [decode_word(wit_rows[r], n) for r in range(n_wit)]
        return idx, (int(best), wits)

    results: dict[int, tuple[int, list[str]]] = dict(cached)
    if jobs > 1 and len(pending) > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            for idx, payload in pool.map(run_shard, pending):
                results[idx] = payload
                name = decode_word(prefixes[idx], len(prefixes[idx]))
                _append_cursor(
                    resume_path, name,
                    f" sigma={payload[0]} witnesses={','.join(payload[1])}",
                )
    else:
        for item in pending:
            idx, payload = run_shard(item)
            results[idx] = payload
            name = decode_word(prefixes[idx], len(prefixes[idx]))
            _append_cursor(
                resume_path, name,
                f" sigma={payload[0]} witnesses={','.join(payload[1])}",
            )

    sigma = max((results[i][0] for i in sorted(results)), default=0)
    witnesses: list[str] = []
    for i in sorted(results):
        best, wits = results[i]
        if best == sigma:
            for w in wits:
                if len(witnesses) < 10:
                    witnesses.append(w)
    return SearchResult(
        d=d, n=n, sigma=sigma, witnesses=tuple(witnesses),
        conjecture_holds=sigma <= n - d,
    )


def sigma_oracle(d: int, n: int) -> int:
    """Plain enumeration oracle for sigma (no pruning, Python side)."""
    best = 0
    for word in _kernels.canonical_words(d, n):
        if len(set(word)) != d:
            continue
        table = rightmost_table(word)
        count = sum(
            1 for occ in table.by_content.values() if is_primitive(occ.generator(word))
        )
        best = max(best, count)
    return best
