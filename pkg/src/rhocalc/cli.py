"""Command-line interface.

Exit codes: 0 success, 2 usage or parse error, 3 verification or count failure.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import action, combinators
from .errors import CountMismatch, RhoCalcError
from .funcset import bump, format_function, format_set, parse_function, parse_set, reverse, rho_set
from .letters import ABC
from .pipeline import build_KrhoX, count_report
from .presentation import (
    ExplicitBenign,
    SubgroupSpec,
    format_presentation,
    format_subgroup,
    parse_presentation,
    parse_subgroup,
    presentation_to_json,
    validate,
)
from .sweeps import box_grid, sparse_grid
from .words import Word, format_word, parse_word

EXIT_OK, EXIT_USAGE, EXIT_FAIL = 0, 2, 3

BUILDERS = {
    "xi1": lambda: combinators.xi(1),
    "C": combinators.group_C,
    "A": combinators.group_A,
    "Abar": combinators.group_A_bar,
}


class UsageError(Exception):
    pass


def cmd_build(args, out):
    if args.name not in BUILDERS:
        raise UsageError(f"UnknownName: {args.name} (choose from {', '.join(BUILDERS)})")
    p = BUILDERS[args.name]()
    out.write(presentation_to_json(p) if args.json else format_presentation(p))
    return EXIT_OK


def _read(path, what):
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {what} {path}: {exc.strerror}") from None


def cmd_rho(args, out):
    lx_text = _read(args.lx, "subgroup file")
    over, lwords = parse_subgroup(lx_text)
    kx_path = args.kx
    if kx_path is None:
        if over is None:
            raise UsageError("no --kx given and the subgroup file has no 'over' header")
        kx_path = Path(args.lx).parent / over
    k = validate(parse_presentation(_read(kx_path, "presentation")))
    if args.abc is not None:
        abc = tuple(parse_word(w) for w in args.abc)
    elif all(g in k.gens for g in ABC):
        abc = tuple(Word.letter(g) for g in ABC)
    else:
        raise UsageError("K_X lacks literal a, b, c; pass --abc WORD WORD WORD")
    inp = ExplicitBenign(k, SubgroupSpec(k, tuple(lwords)), abc)

    outdir = Path(args.out_dir)
    outdir.mkdir(parents=True, exist_ok=True)
    try:
        trace = build_KrhoX(inp)
    except CountMismatch as exc:
        out.write(f"CountMismatch: {exc}\n")
        return EXIT_FAIL
    files = {"KP.txt": trace.kp, "KQ.txt": trace.kq, "KQ1.txt": trace.kq1, "KrhoX.txt": trace.krho}
    for name, p in files.items():
        (outdir / name).write_text(format_presentation(p))
    (outdir / "LQ.txt").write_text(format_subgroup(trace.l_q, "KQ.txt"))
    (outdir / "LQ1.txt").write_text(format_subgroup(trace.l_q1, "KQ1.txt"))
    (outdir / "LrhoX.txt").write_text(format_subgroup(trace.l_rho, "KrhoX.txt"))
    report = count_report(trace)
    (outdir / "report.json").write_text(json.dumps(report, indent=2) + "\n")
    text = _format_count_report(report)
    (outdir / "report.txt").write_text(text)
    out.write(json.dumps(report, indent=2) + "\n" if args.json else text)
    return EXIT_OK if report["ok"] else EXIT_FAIL


def _format_count_report(report):
    lines = [f"m={report['m']} n={report['n']} k={report['k']}"]
    for section in ("generators", "relations"):
        lines.append(f"{section}:")
        for t in report[section]:
            mark = "ok" if t["expected"] == t["actual"] else "MISMATCH"
            lines.append(f"  {t['block_name']:<20} {t['expected']:>6} {t['actual']:>6}  {mark}")
    exp, act = report["total"]["expected"], report["total"]["actual"]
    lines.append(f"total: expected {exp[0]} generators, {exp[1]} relations; "
                 f"got {act[0]}, {act[1]}")
    lines.append("PASS" if report["ok"] else "FAIL")
    return "\n".join(lines) + "\n"


def _ints(text):
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise UsageError(f"bad integer list {text!r}") from None


def _verify_cases(args):
    kind = args.kind
    if args.f is not None and args.sweep is not None:
        raise UsageError("--f and --sweep are exclusive")
    fs = [parse_function(args.f)] if args.f is not None else None
    if kind == "rho-chain":
        if args.j is not None:
            raise UsageError("rho-chain takes no --j")
        fs = fs or list(box_grid(2 if args.sweep is None else args.sweep))
        return [action.rho_chain_check(f) for f in fs]
    radius = 3 if args.sweep is None else args.sweep
    js = _ints(args.j) if args.j is not None else None
    if fs is None:
        fs = list(sparse_grid(radius))
    if kind == "lemma35":
        js = js if js is not None else list(range(-radius - 1, radius + 2))
        return [action.lemma35_check(f, j) for f in fs for j in js]
    if js is not None:
        if len(js) != 2:
            raise UsageError("commute needs --j J1,J2")
        pairs = [tuple(js)]
    else:
        r = range(-radius - 1, radius + 2)
        pairs = [(j1, j2) for j1 in r for j2 in r if j1 < j2]
    return [action.commute_check(f, j1, j2) for f in fs for j1, j2 in pairs]


def _describe_success(args, report):
    f = parse_function(args.f)
    if args.kind == "lemma35":
        g = bump(f, _ints(args.j)[0], 1)
    elif args.kind == "commute":
        j1, j2 = _ints(args.j)
        g = bump(bump(f, j1, 1), j2, 1)
    else:
        g = reverse(f)
    word = report.cases[0][1]
    return f"  result: a_{format_function(g)} = {format_word(word)}"


def cmd_verify(args, out):
    reports = _verify_cases(args)
    failed = [r for r in reports if not r.ok]
    if args.json:
        payload = {
            "kind": args.kind,
            "checked": len(reports),
            "failed": len(failed),
            "ok": not failed,
            "failures": [
                {"label": r.label,
                 "cases": [{"name": n, "got": format_word(g), "expected": format_word(x)}
                           for n, g, x in r.cases]}
                for r in failed
            ],
        }
        out.write(json.dumps(payload, indent=2) + "\n")
    else:
        for r in failed:
            out.write(f"FAIL {r.label}\n")
            for n, g, x in r.cases:
                out.write(f"  {n}: got {format_word(g)}\n  {'':{len(n)}}  expected {format_word(x)}\n")
        status = "PASS" if not failed else "FAIL"
        out.write(f"{status} {args.kind}: {len(reports) - len(failed)}/{len(reports)} checks\n")
        if not failed and args.f is not None and reports:
            out.write(_describe_success(args, reports[0]) + "\n")
    return EXIT_OK if not failed else EXIT_FAIL


def cmd_reduce(args, out):
    out.write(format_word(parse_word(args.word)) + "\n")
    return EXIT_OK


def cmd_fn(args, out):
    if args.op == "show":
        out.write(format_function(parse_function(args.expr)) + "\n")
    elif args.op == "rho":
        out.write(format_function(reverse(parse_function(args.expr))) + "\n")
    elif args.op == "rhoset":
        out.write(format_set(rho_set(parse_set(args.expr))) + "\n")
    else:
        raise UsageError(f"unknown fn operation {args.op!r}")
    return EXIT_OK


def make_parser():
    parser = argparse.ArgumentParser(prog="rhocalc", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("build", help="print a named presentation")
    p.add_argument("name", help="xi1, C, A or Abar")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("rho", help="run the reversing-operation pipeline")
    p.add_argument("--kx", help="presentation file of K_X")
    p.add_argument("--lx", required=True, help="subgroup file of L_X")
    p.add_argument("--abc", nargs=3, metavar="WORD", help="words for a, b, c in K_X")
    p.add_argument("--out-dir", required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_rho)

    p = sub.add_parser("verify", help="run word-level checks")
    p.add_argument("kind", choices=["lemma35", "rho-chain", "commute"])
    p.add_argument("--f", help="function, e.g. 2,5,3 or {-1:3,0:2}")
    p.add_argument("--j", help="index, or J1,J2 for commute")
    p.add_argument("--sweep", type=int, help="grid radius")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("reduce", help="freely reduce a word")
    p.add_argument("word")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("fn", help="functions with finite support")
    p.add_argument("op", choices=["show", "rho", "rhoset"])
    p.add_argument("expr")
    p.set_defaults(func=cmd_fn)
    return parser


def main(argv=None, out=None):
    out = out or sys.stdout
    parser = make_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code
    try:
        return args.func(args, out)
    except UsageError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_USAGE
    except RhoCalcError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
