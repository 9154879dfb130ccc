#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure-Python fallback.

Runs each workload twice in subprocesses: once with numba enabled, once with
DSQ_NO_NUMBA=1, and prints the timings side by side.  Workload sizes are kept
small enough that the fallback finishes in seconds.

Usage: python benchmarks/bench_kernels.py
"""

import json
import os
import subprocess
import sys
import time

WORKLOADS = ("word_flags", "corpus_scan", "sigma_search")


def run_workloads() -> dict:
    from dsq import _kernels
    from dsq.bounds import exhaustive_verify, sigma_search

    timings = {}

    words = [w for n in range(1, 13) for w in _kernels.canonical_words(2, n)]
    encoded = [_kernels.encode_word(w) for w in words]
    _kernels.analyze_word(encoded[0])  # compile outside the timed region
    t0 = time.perf_counter()
    for arr in encoded:
        _kernels.analyze_word(arr)
    timings["word_flags"] = time.perf_counter() - t0

    t0 = time.perf_counter()
    certs = exhaustive_verify(10, 3, {"two_rightmost_max", "delta_bound"})
    assert not certs
    timings["corpus_scan"] = time.perf_counter() - t0

    t0 = time.perf_counter()
    res = sigma_search(2, 14, jobs=1)
    assert res.conjecture_holds
    timings["sigma_search"] = time.perf_counter() - t0
    return timings


def main() -> int:
    if "--worker" in sys.argv:
        print(json.dumps(run_workloads()))
        return 0

    results = {}
    for label, env_extra in (("njit", {}), ("pure", {"DSQ_NO_NUMBA": "1"})):
        env = dict(os.environ, **env_extra)
        out = subprocess.run(
            [sys.executable, os.path.abspath(__file__), "--worker"],
            env=env, capture_output=True, text=True, check=True,
        )
        results[label] = json.loads(out.stdout.strip().splitlines()[-1])

    print(f"{'workload':<14} {'njit (s)':>10} {'pure (s)':>10} {'speedup':>9}")
    for name in WORKLOADS:
        jit, pure = results["njit"][name], results["pure"][name]
        print(f"{name:<14} {jit:>10.3f} {pure:>10.3f} {pure / jit:>8.1f}x")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
