"""Command-line front end.

Exit codes: 0 success, 1 I/O, parse or usage error, 2 invalid loop,
3 property violation found by ``fuzz``.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .documents import AnalysisDocument, DocumentError, LoopDocument, format_rat, parse_loop_document
from .generate import random_loops
from .loop import InvalidLoopError, VectorLoop
from .rotation import (
    hm_rotation,
    rotation_formula,
    rotation_report,
    winding_number_exact,
    winding_number_float,
)
from .refine import refine_loop

EXIT_OK = 0
EXIT_IO = 1
EXIT_INVALID = 2
EXIT_VIOLATION = 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _read_input(path: str | None) -> str:
    if path is None or path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _load(args) -> tuple[LoopDocument, VectorLoop]:
    doc = parse_loop_document(_read_input(args.input), args.format)
    return doc, doc.to_loop()


def render_table(doc: AnalysisDocument) -> str:
    header = ("i", "eps", "a", "x", "y", "l", "terms")
    rows = [header] + [
        (str(e.i), str(e.epsilon), format_rat(e.a), str(e.x), str(e.y), str(e.l),
         " ".join(map(str, e.terms)) or "-")
        for e in doc.edges
    ]
    widths = [max(len(r[k]) for r in rows) for k in range(len(header))]
    lines = []
    if doc.name:
        lines.append(f"loop: {doc.name}")
    for r in rows:
        lines.append("  ".join(c.rjust(w) for c, w in zip(r, widths)).rstrip())
    lines.append(f"sum of sign-weighted (3(l+1) - sum n): {doc.orientation_sum}")
    lines.append(f"sum of a: {format_rat(doc.a_sum)}")
    lines.append(f"sum of (x+y)/eps: {format_rat(doc.xy_sum)}")
    lines.append(f"rotation number: {format_rat(doc.rotation)}")
    lines.append(f"unimodular formula on refined loop ({len(doc.refined_vertices)} vertices): "
                 f"{format_rat(doc.hm_on_refined)}")
    lines.append(f"winding number (exact): {doc.winding_exact}")
    lines.append(f"winding number (float): {doc.winding_float:.12f}")
    return "\n".join(lines) + "\n"


def cmd_analyze(args) -> int:
    doc, loop = _load(args)
    analysis = AnalysisDocument.from_report(loop, rotation_report(loop), doc.name)
    sys.stdout.write(analysis.dumps() + "\n" if args.json else render_table(analysis))
    return EXIT_OK


def cmd_refine(args) -> int:
    doc, loop = _load(args)
    ref = refine_loop(loop)
    out = LoopDocument.from_loop(ref.enlarged, doc.name)
    out.provenance = [tuple(p) for p in ref.provenance]
    if args.format == "plain" and not args.json:
        sys.stdout.write(out.dumps_plain())
    else:
        sys.stdout.write(json.dumps(out.to_dict(), indent=2) + "\n")
    return EXIT_OK


def cmd_rotation(args) -> int:
    _, loop = _load(args)
    result = rotation_formula(loop)
    if args.json:
        payload = {
            "rotation": format_rat(result.value),
            "partial_sums": {
                "orientation": result.orientation_sum,
                "a": format_rat(result.a_sum),
                "xy_over_epsilon": format_rat(result.xy_sum),
            },
        }
        sys.stdout.write(json.dumps(payload, indent=2) + "\n")
    else:
        sys.stdout.write(f"{format_rat(result.value)}\n")
    return EXIT_OK


def cmd_oracle(args) -> int:
    _, loop = _load(args)
    exact = winding_number_exact(loop)
    value, rounded = winding_number_float(loop)
    if args.json:
        sys.stdout.write(json.dumps({"winding_exact": exact, "winding_float": value,
                                     "winding_float_rounded": rounded}, indent=2) + "\n")
    else:
        sys.stdout.write(f"exact: {exact}\nfloat: {value:.12f} (rounds to {rounded})\n")
    return EXIT_OK


def check_loop(loop: VectorLoop) -> str | None:
    """Return a description of the first disagreement, or None if all routes agree."""
    try:
        formula = rotation_formula(loop).value
        winding = winding_number_exact(loop)
        refined = hm_rotation(refine_loop(loop).enlarged)
        _, rounded = winding_number_float(loop)
    except ArithmeticError as exc:
        return f"{type(exc).__name__}: {exc}"
    if not formula == winding == refined == rounded:
        return (f"formula={format_rat(formula)} winding={winding} "
                f"refined={format_rat(refined)} float={rounded}")
    return None


def _check_counts(args) -> None:
    if args.count < 1:
        raise UsageError(f"--count must be at least 1, got {args.count}")
    if args.max_d < 2:
        raise UsageError(f"--max-d must be at least 2, got {args.max_d}")
    if args.coord_bound < 1:
        raise UsageError(f"--coord-bound must be at least 1, got {args.coord_bound}")


def cmd_fuzz(args) -> int:
    _check_counts(args)
    passed = failed = 0
    first_failure = None
    for trial, loop in enumerate(random_loops(args.seed, args.count, args.max_d, args.coord_bound), start=1):
        problem = check_loop(loop)
        if args.verbose:
            status = "ok" if problem is None else "FAIL"
            sys.stdout.write(f"trial {trial} d={len(loop)} {status}\n")
        if problem is None:
            passed += 1
        else:
            failed += 1
            if first_failure is None:
                first_failure = (trial, loop, problem)
    sys.stdout.write(f"seed={args.seed} count={args.count} max_d={args.max_d} "
                     f"coord_bound={args.coord_bound}\n")
    sys.stdout.write(f"passed: {passed}\nfailed: {failed}\n")
    if first_failure is not None:
        trial, loop, problem = first_failure
        sys.stdout.write(f"first counterexample (trial {trial}): {problem}\n")
        sys.stdout.write(LoopDocument.from_loop(loop).dumps() + "\n")
        return EXIT_VIOLATION
    return EXIT_OK


def cmd_gen(args) -> int:
    _check_counts(args)
    loops = random_loops(args.seed, args.count, args.max_d, args.coord_bound)
    for k, loop in enumerate(loops, start=1):
        doc = LoopDocument.from_loop(loop, f"random-{args.seed}-{k}")
        if args.format == "plain":
            if k > 1:
                sys.stdout.write("\n")
            sys.stdout.write(doc.dumps_plain())
        else:
            sys.stdout.write(doc.dumps() + "\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="hjrotation", description="Rotation numbers of primitive vector loops.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add_input(p):
        p.add_argument("--input", metavar="PATH", help="loop file, '-' or omitted for stdin")
        p.add_argument("--format", choices=("structured", "plain"), default="structured")
        p.add_argument("--json", action="store_true", help="machine-readable output")

    def add_random(p, count_default):
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--count", type=int, default=count_default)
        p.add_argument("--max-d", type=int, default=12)
        p.add_argument("--coord-bound", type=int, default=50)

    p = sub.add_parser("analyze", help="per-edge table, partial sums and rotation number")
    add_input(p)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("refine", help="insert vectors to make the loop unimodular")
    add_input(p)
    p.set_defaults(func=cmd_refine)

    p = sub.add_parser("rotation", help="rotation number from the continued-fraction formula")
    add_input(p)
    p.set_defaults(func=cmd_rotation)

    p = sub.add_parser("oracle", help="winding number of the polygon, exact and floating point")
    add_input(p)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("fuzz", help="cross-check all routes on random loops")
    add_random(p, 1000)
    p.add_argument("--verbose", action="store_true", help="one line per trial")
    p.set_defaults(func=cmd_fuzz)

    p = sub.add_parser("gen", help="emit random valid loops")
    add_random(p, 1)
    p.add_argument("--format", choices=("structured", "plain"), default="structured")
    p.set_defaults(func=cmd_gen)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        sys.stderr.write(f"usage error: {exc}\n")
        return EXIT_IO
    except InvalidLoopError as exc:
        sys.stderr.write(f"invalid loop: {exc}\n")
        return EXIT_INVALID
    except (OSError, DocumentError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
