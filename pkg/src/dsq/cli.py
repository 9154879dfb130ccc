"""Command-line front end: analyze words, verify lemma suites, run searches.

Exit codes are a stable contract: 0 success, 1 usage or input error, 2 a
falsification was found (a bound check failed or a verified claim produced a
counterexample).  JSON output is deterministic: fixed key order, no
timestamps; ``NO_COLOR`` (or a non-tty stdout) disables the ANSI accents in
text mode.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys

from .bounds import ALL_PROPS, check_bounds, exhaustive_verify, sigma_search
from .core import check_word
from .doublesq import find_fs_double_squares
from .families import decompose_family
from .figures import build_figures
from .inversion import find_inversion_factors, intervals
from .mates import classify_all
from .squares import FalsificationError

SCHEMA_VERSION = 1
WORD_ECHO_CAP = 4096
DEFAULT_MAX_LEN = 100_000


def _color_enabled() -> bool:
    return sys.stdout.isatty() and not os.environ.get("NO_COLOR")


def _mark(ok: bool) -> str:
    text = "PASS" if ok else "FAIL"
    if _color_enabled():
        code = "32" if ok else "31"
        return f"\x1b[{code}m{text}\x1b[0m"
    return text


def _dump(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def analysis_report(word: str) -> dict:
    """The full per-word report; every position is 1-based.

    The N1/N2/L1/R1/L2/R2 entries are local to the double square (position 1
    is the first symbol of U**2).
    """
    pairs = find_fs_double_squares(word)
    fs_entries = []
    for ds, f in pairs:
        iv = intervals(f)
        fs_entries.append({
            "start": ds.start,
            "u_len": ds.u_len,
            "U_len": ds.U_len,
            "u1": f.u1,
            "u2": f.u2,
            "e1": f.e1,
            "e2": f.e2,
            "N1": iv.N1,
            "N2": iv.N2,
            "L1": iv.L1,
            "R1": iv.R1,
            "L2": iv.L2,
            "R2": iv.R2,
        })
    mates = [
        {"from_start": U[0].start, "to_start": V[0].start, "kind": k.value}
        for U, V, k in classify_all(pairs)
    ]
    family = None
    if pairs:
        fam = decompose_family(word)
        family = {
            "kind": fam.kind.value,
            "segments": [
                {
                    "kind": seg.kind.value,
                    "type_pair": list(seg.type_pair),
                    "member_starts": [m.square.start for m in seg.members],
                }
                for seg in fam.segments
            ],
        }
    rep = check_bounds(word)
    echoed = (
        word
        if len(word) <= WORD_ECHO_CAP
        else "sha256:" + hashlib.sha256(word.encode()).hexdigest()
    )
    return {
        "schema_version": SCHEMA_VERSION,
        "word": echoed,
        "length": len(word),
        "delta": rep.delta,
        "distinct_squares": rep.distinct,
        "fs_double_squares": fs_entries,
        "mates": mates,
        "family": family,
        "bounds": {
            "n": rep.n,
            "delta": rep.delta,
            "distinct": rep.distinct,
            "checks": [
                {
                    "name": c.name,
                    "bound": c.bound,
                    "observed": c.observed,
                    "pass": c.passed,
                }
                for c in rep.checks
            ],
        },
    }


def _print_text_report(rep: dict) -> None:
    print(f"word {rep['word']}  n={rep['length']}  delta={rep['delta']}  "
          f"distinct={rep['distinct_squares']}")
    for e in rep["fs_double_squares"]:
        print(f"  double square @{e['start']}: |u|={e['u_len']} |U|={e['U_len']} "
              f"u1={e['u1']} u2={e['u2']} e1={e['e1']} e2={e['e2']} "
              f"inversion [{e['L1']},{e['R1']}] u [{e['L2']},{e['R2']}]")
    for m in rep["mates"]:
        print(f"  mate {m['from_start']} -> {m['to_start']}: {m['kind']}")
    if rep["family"]:
        segs = ", ".join(
            f"{s['kind']}({s['type_pair'][0]},{s['type_pair'][1]})x{len(s['member_starts'])}"
            for s in rep["family"]["segments"]
        )
        print(f"  family: {rep['family']['kind']} [{segs}]")
    for c in rep["bounds"]["checks"]:
        print(f"  bound {c['name']}: {c['observed']} <= {c['bound']} {_mark(c['pass'])}")


def cmd_analyze(args) -> int:
    if args.input == "-":
        lines = sys.stdin.read().splitlines()
    else:
        try:
            with open(args.input) as fh:
                lines = fh.read().splitlines()
        except OSError as exc:
            print(f"error: cannot read {args.input}: {exc}", file=sys.stderr)
            return 1

    failed_bound = False
    for lineno, raw in enumerate(lines, 1):
        word = raw.strip()
        if not word:
            continue
        try:
            check_word(word)
        except ValueError as exc:
            print(f"error: line {lineno}: {exc}", file=sys.stderr)
            return 1
        if len(word) > args.max_len:
            print(
                f"error: line {lineno}: word longer than cap {args.max_len}",
                file=sys.stderr,
            )
            return 1
        try:
            rep = analysis_report(word)
        except FalsificationError as exc:
            print(f"falsification: line {lineno}: {exc}", file=sys.stderr)
            return 2
        if args.format == "json":
            print(_dump(rep))
        else:
            _print_text_report(rep)
        if not all(c["pass"] for c in rep["bounds"]["checks"]):
            failed_bound = True
    return 2 if failed_bound else 0


def cmd_verify(args) -> int:
    suite = (
        set(ALL_PROPS)
        if args.suite == "all"
        else {name for name in args.suite.split(",") if name}
    )
    try:
        certs = exhaustive_verify(
            args.max_len, args.alphabet, suite,
            jobs=args.jobs, resume_path=args.resume,
        )
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    by_prop = {name: [] for name in sorted(suite)}
    for c in certs:
        by_prop[c.prop].append(c)
    for name in sorted(suite):
        n_bad = len(by_prop[name])
        print(f"{name}: {n_bad} counterexamples {_mark(n_bad == 0)}")
    for c in certs:
        print(f"  counterexample {c.prop}: word={c.word} witness={c.witness}")
    return 0 if not certs else 2


def cmd_search(args) -> int:
    try:
        res = sigma_search(args.d, args.n, jobs=args.jobs, resume_path=args.resume)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    print(_dump({
        "schema_version": SCHEMA_VERSION,
        "d": res.d,
        "n": res.n,
        "sigma": res.sigma,
        "witnesses": list(res.witnesses),
        "conjecture_bound": res.n - res.d,
        "conjecture_holds": res.conjecture_holds,
    }))
    return 0


def _render_figure(fw) -> list[str]:
    """Word plus marker lines: brackets for the two squares of the leading
    double square, carets for the inversion-factor positions."""
    word = fw.word
    f = fw.factorization
    u_len, U_len = len(f.u), len(f.U)

    def brackets(width, open_ch, close_ch):
        line = [" "] * len(word)
        for pos, ch in ((0, open_ch), (width - 1, close_ch),
                        (width, open_ch), (2 * width - 1, close_ch)):
            line[pos] = ch
        return "".join(line).rstrip()

    inv = [" "] * len(word)
    for p in find_inversion_factors(f):
        if p - 1 < len(inv):
            inv[p - 1] = "^"
    return [
        word,
        brackets(u_len, "[", "]"),
        brackets(U_len, "(", ")"),
        "".join(inv).rstrip(),
    ]


def cmd_figures(_args) -> int:
    all_ok = True
    for fw in build_figures():
        word = fw.word
        f = fw.factorization
        print(f"-- {fw.name}: u1={fw.u1} u2={fw.u2} e1={fw.e1} e2={fw.e2} "
              f"|word|={len(word)}")
        for line in _render_figure(fw):
            print("   " + line)
        checks: list[tuple[str, object, object]] = []
        exp = fw.expect
        if "lcp" in exp:
            from .doublesq import shift_budget

            left, right = shift_budget(f)
            checks.append(("lcp", exp["lcp"], right))
            checks.append(("lcs", exp["lcs"], left))
        if "natural_inversion_factor" in exp:
            from .inversion import natural_inversion_factor

            checks.append(("natural_inversion_factor",
                           exp["natural_inversion_factor"],
                           natural_inversion_factor(f)))
        if "inversion_positions" in exp:
            checks.append(("inversion_positions",
                           exp["inversion_positions"],
                           find_inversion_factors(f)))
        if "family_kind" in exp:
            fam = decompose_family(word)
            checks.append(("family_kind", exp["family_kind"], fam.kind.value))
            if "family_size" in exp:
                checks.append(("family_size", exp["family_size"], fam.size))
            if "segment_count" in exp:
                checks.append(("segment_count", exp["segment_count"],
                               len(fam.segments)))
            if "alpha_segments" in exp:
                kinds = [s.kind.value for s in fam.segments]
                checks.append(("alpha_segments", exp["alpha_segments"],
                               kinds.count("alpha_segment")))
                checks.append(("beta_segments", exp["beta_segments"],
                               kinds.count("beta_segment")))
            if "max_segment_size" in exp:
                checks.append(("max_segment_size", exp["max_segment_size"],
                               max(len(s.members) for s in fam.segments)))
        for name, want, got in checks:
            ok = want == got
            all_ok = all_ok and ok
            print(f"   {name}: expected {want} got {got} {_mark(ok)}")
    return 0 if all_ok else 2


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dsq",
        description="distinct-square and FS-double-square analysis",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="analyze words, one per line")
    p.add_argument("input", nargs="?", default="-", metavar="FILE|-")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--max-len", type=int, default=DEFAULT_MAX_LEN)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("verify", help="exhaustive property verification")
    p.add_argument("--max-len", type=int, required=True)
    p.add_argument("--alphabet", type=int, required=True)
    p.add_argument("--suite", default="all",
                   help="comma separated property names, or 'all'")
    p.add_argument("--jobs", type=int, default=None)
    p.add_argument("--resume", default=None, metavar="PATH")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("search", help="maximum distinct primitively rooted squares")
    p.add_argument("--d", type=int, required=True, help="distinct symbols")
    p.add_argument("--n", type=int, required=True, help="word length")
    p.add_argument("--jobs", type=int, default=None)
    p.add_argument("--resume", default=None, metavar="PATH")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("figures", help="reproduce the reference constructions")
    p.set_defaults(func=cmd_figures)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    raise SystemExit(main())
