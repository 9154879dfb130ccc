"""Hot kernels for corpus-wide scans and the extremal square search.

Words travel through these functions as small ``int8`` numpy arrays (symbol 0
is ``a``).  When numba is installed the kernels are compiled with ``@njit``
(nogil, cached); setting ``DSQ_NO_NUMBA=1`` in the environment selects the
same functions as a plain-Python fallback path, which is far slower but
byte-for-byte equivalent, and is what the benchmark compares against.

Two drivers live here:

* ``scan_shard`` walks every canonical word that extends a given prefix,
  evaluates the cheap counting properties inline, and emits words containing
  FS-double squares for the deep Python checks.
* ``sigma_shard`` runs the depth-first extremal search for the maximum
  number of distinct primitively rooted squares, with a sound
  two-new-squares-per-symbol bound for pruning.

Violation masks use one bit per property; see ``FLAG_NAMES``.
"""

from __future__ import annotations

import os

import numpy as np

NUMBA_DISABLED = os.environ.get("DSQ_NO_NUMBA", "") not in ("", "0")

try:
    if NUMBA_DISABLED:
        raise ImportError("numba disabled by DSQ_NO_NUMBA")
    from numba import njit

    NUMBA_ENABLED = True
except ImportError:
    NUMBA_ENABLED = False

    def njit(*args, **kwargs):  # type: ignore[misc]
        if args and callable(args[0]):
            return args[0]

        def deco(f):
            return f

        return deco

_jit = njit(cache=True, nogil=True)

# violation bits produced by _word_flags, by verifier property name
FLAG_NAMES = (
    "two_rightmost_max",
    "balanced_double_square",
    "cr_fs",
    "min_fs_length",
    "delta_bound",
    "distinct_bound",
    "distinct_2n",
    "nonprimitive_bound",
    "strengthened_delta",
)


def encode_word(w: str) -> np.ndarray:
    return np.frombuffer(w.encode("ascii"), dtype=np.int8) - ord("a")

def decode_word(row: np.ndarray, length: int) -> str:
    return bytes(int(x) + ord("a") for x in row[:length]).decode("ascii")


@_jit
def _generator_primitive(w, i, L):
    """Is the generator w[i : i+L] primitive?"""
    for p in range(1, L):
        if L % p == 0:
            periodic = True
            for t in range(L - p):
                if w[i + t] != w[i + p + t]:
                    periodic = False
                    break
            if periodic:
                return False
    return True


@_jit
def _word_flags(w, m, occ_s, occ_l, rm):
    """Violation mask, FS-double-square count, and distinct counts for one word.

    Returns (mask, delta, distinct, nonprim, first_fs_start, first_fs_ulen)
    with first_fs_start 0-based or -1.
    """
    n_occ = 0
    for i in range(m):
        top = (m - i) // 2
        for L in range(1, top + 1):
            is_sq = True
            for t in range(L):
                if w[i + t] != w[i + L + t]:
                    is_sq = False
                    break
            if is_sq:
                occ_s[n_occ] = i
                occ_l[n_occ] = L
                n_occ += 1

    for a in range(n_occ):
        i = occ_s[a]
        L = occ_l[a]
        rightmost = 1
        for j in range(i + 1, m - 2 * L + 1):
            same = True
            for t in range(2 * L):
                if w[j + t] != w[i + t]:
                    same = False
                    break
            if same:
                rightmost = 0
                break
        rm[a] = rightmost

    mask = 0
    delta = 0
    distinct = 0
    nonprim = 0
    first_fs_start = -1
    first_fs_ulen = 0

    a = 0
    while a < n_occ:
        start = occ_s[a]
        b = a
        rm_count = 0
        small = 0
        big = 0
        while b < n_occ and occ_s[b] == start:
            if rm[b] == 1:
                rm_count += 1
                if rm_count == 1:
                    small = occ_l[b]
                elif rm_count == 2:
                    big = occ_l[b]
            b += 1
        if rm_count > 2:
            mask |= 1
        if rm_count == 2:
            delta += 1
            if not (small < big < 2 * small):
                mask |= 2
            if first_fs_start < 0:
                first_fs_start = start
                first_fs_ulen = small
        if b - a >= 3:
            # all squares at this start, generator lengths ascending
            for x in range(a, b):
                if not _generator_primitive(w, start, occ_l[x]):
                    continue
                for y in range(x + 1, b):
                    for z in range(y + 1, b):
                        if occ_l[z] < occ_l[x] + occ_l[y]:
                            mask |= 4
        a = b

    for a in range(n_occ):
        if rm[a] == 1:
            distinct += 1
            if not _generator_primitive(w, occ_s[a], occ_l[a]):
                nonprim += 1

    if delta > 0 and m <= 9:
        mask |= 8
    if delta > (5 * m) // 6:
        mask |= 16
    if distinct > (11 * m) // 6:
        mask |= 32
    if distinct > 2 * m:
        mask |= 64
    cap = m // 2 - 1
    if cap < 0:
        cap = 0
    if nonprim > cap:
        mask |= 128
    if first_fs_start == 0 and 6 * delta > 5 * m - 2 * first_fs_ulen:
        mask |= 256

    return mask, delta, distinct, nonprim, first_fs_start, first_fs_ulen


@_jit
def analyze_word(w):
    """Single-word wrapper around the flag kernel (scratch managed here)."""
    m = w.shape[0]
    cap = m * m // 4 + 2
    occ_s = np.zeros(cap, np.int64)
    occ_l = np.zeros(cap, np.int64)
    rm = np.zeros(cap, np.int64)
    return _word_flags(w, m, occ_s, occ_l, rm)


@_jit
def scan_shard(prefix, max_len, k, deep_rows, cert_rows, cert_mask, stats):
    """Evaluate every canonical word extending ``prefix`` up to ``max_len``.

    Words over symbols 0..k-1 in canonical form (first occurrences in
    alphabet order).  Each violating word is stored in ``cert_rows`` with its
    mask; each word containing an FS-double square is stored in
    ``deep_rows`` (row = symbols, padded) for the deep Python checks.  Both
    buffers carry the word length in the last column.  stats[0] accumulates
    visited words, stats[1] FS-containing words, stats[2] violating words.
    Returns (n_deep, n_cert); on buffer overflow counting continues so the
    caller can retry with larger buffers.
    """
    scratch = max_len * max_len // 4 + 2
    occ_s = np.zeros(scratch, np.int64)
    occ_l = np.zeros(scratch, np.int64)
    rm = np.zeros(scratch, np.int64)
    w = np.zeros(max_len, np.int8)
    used = np.zeros(max_len + 2, np.int8)
    child = np.zeros(max_len + 2, np.int8)

    L0 = prefix.shape[0]
    for i in range(L0):
        w[i] = prefix[i]
        bump = 1 if prefix[i] == used[i] else 0
        used[i + 1] = used[i] + bump

    deep_cap = deep_rows.shape[0]
    cert_cap = cert_rows.shape[0]
    n_deep = 0
    n_cert = 0

    depth = L0
    child[depth] = 0
    first = L0 > 0  # evaluate the prefix word itself exactly once
    while depth >= L0:
        if first:
            m = depth
            first = False
        else:
            limit = used[depth] + 1
            if limit > k:
                limit = k
            c = child[depth]
            if depth >= max_len or c >= limit:
                depth -= 1
                continue
            child[depth] = c + 1
            w[depth] = c
            used[depth + 1] = used[depth] + (1 if c == used[depth] else 0)
            m = depth + 1
            depth = m
            child[depth] = 0

        stats[0] += 1
        mask, delta, _distinct, _nonprim, _ffs, _ffu = _word_flags(
            w, m, occ_s, occ_l, rm
        )
        if delta > 0:
            stats[1] += 1
            if n_deep < deep_cap:
                for t in range(m):
                    deep_rows[n_deep, t] = w[t]
                deep_rows[n_deep, deep_rows.shape[1] - 1] = m
            n_deep += 1
        if mask != 0:
            stats[2] += 1
            if n_cert < cert_cap:
                for t in range(m):
                    cert_rows[n_cert, t] = w[t]
                cert_rows[n_cert, cert_rows.shape[1] - 1] = m
                cert_mask[n_cert] = mask
            n_cert += 1
    return n_deep, n_cert


@_jit
def _new_pr_squares(w, m):
    """New distinct primitively rooted squares created by the symbol at m-1.

    A square ending at position m is counted when it is the first occurrence
    of its content anywhere in w[0:m].
    """
    total = 0
    for L in range(1, m // 2 + 1):
        i = m - 2 * L
        is_sq = True
        for t in range(L):
            if w[i + t] != w[i + L + t]:
                is_sq = False
                break
        if not is_sq:
            continue
        if not _generator_primitive(w, i, L):
            continue
        fresh = True
        for j in range(i):
            same = True
            for t in range(2 * L):
                if w[j + t] != w[i + t]:
                    same = False
                    break
            if same:
                fresh = False
                break
        if fresh:
            total += 1
    return total


@_jit
def sigma_shard(prefix, n, d, best_seed, wit_rows, stats):
    """Extremal search below ``prefix`` for words of length n, exactly d symbols.

    Tracks the running count of distinct primitively rooted squares
    incrementally and prunes a subtree when even two new squares per
    remaining symbol cannot reach the best count seen (appending one symbol
    adds at most two distinct squares).  Returns (best, n_wit); witnesses
    (up to the buffer row count) are the lexicographically first canonical
    maxima in this shard.  stats[0] accumulates visited words.
    """
    w = np.zeros(n, np.int8)
    used = np.zeros(n + 2, np.int8)
    child = np.zeros(n + 2, np.int8)
    cnt = np.zeros(n + 2, np.int64)

    L0 = prefix.shape[0]
    feasible = True
    for i in range(L0):
        w[i] = prefix[i]
        bump = 1 if prefix[i] == used[i] else 0
        used[i + 1] = used[i] + bump
        cnt[i + 1] = cnt[i] + _new_pr_squares(w, i + 1)
    if used[L0] > d or used[L0] + (n - L0) < d:
        feasible = False

    best = best_seed
    wit_cap = wit_rows.shape[0]
    n_wit = 0
    if not feasible:
        return best, n_wit

    depth = L0
    child[depth] = 0
    first = L0 > 0
    while depth >= L0:
        if first:
            m = depth
            first = False
        else:
            limit = used[depth] + 1
            if limit > d:
                limit = d
            c = child[depth]
            if depth >= n or c >= limit:
                depth -= 1
                continue
            child[depth] = c + 1
            w[depth] = c
            used[depth + 1] = used[depth] + (1 if c == used[depth] else 0)
            m = depth + 1
            if used[m] + (n - m) < d:
                continue
            cnt[m] = cnt[m - 1] + _new_pr_squares(w, m)
            depth = m
            child[depth] = 0

        stats[0] += 1
        if m == n:
            if used[m] == d:
                c2 = cnt[m]
                if c2 > best:
                    best = c2
                    n_wit = 0
                if c2 == best and n_wit < wit_cap:
                    for t in range(n):
                        wit_rows[n_wit, t] = w[t]
                    n_wit += 1
            depth -= 1
            continue
        if cnt[m] + 2 * (n - m) < best:
            depth -= 1
            continue
    return best, n_wit


def canonical_words(k: int, length: int):
    """All canonical words of exactly ``length`` over at most k symbols (Python side)."""
    if length == 0:
        yield ""
        return

    def walk(word: str, used: int):
        if len(word) == length:
            yield word
            return
        limit = min(used + 1, k)
        for c in range(limit):
            yield from walk(word + chr(ord("a") + c), used + (1 if c == used else 0))

    yield from walk("", 0)


def shard_prefixes(k: int, shard_len: int) -> list[np.ndarray]:
    """Canonical prefixes of the given length, the unit of work distribution."""
    return [encode_word(wd) for wd in canonical_words(k, shard_len)]
