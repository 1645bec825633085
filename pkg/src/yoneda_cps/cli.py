"""Command line interface.

All results go to stdout as JSON with sorted keys; progress and errors
go to stderr.  Exit codes: 0 success, 1 bad input or an exceeded walk
cap, 2 an internal invariant violation.
"""

import argparse
import json
import sys

from .decide import analyze, finitely_generated, noetherian, report_to_json
from .ext import ext_class, generators_up_to, hilbert_series, poincare_table, yoneda_mul
from .graph import build_marked_graph, export_dot, export_json, graph_params
from .monomial import MonomialIdeal, PreconditionError
from .oracle import cross_validate, minimal_resolution
from .presentation import PresentationError, parse_presentation
from .walks import WalkCapExceeded, parse_display_walk
from .ext import ExtClass  # noqa: F401  (re-exported for scripting)


def _load(path):
    if path == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(path) as fh:
                text = fh.read()
        except OSError as e:
            raise PresentationError(f"cannot read {path}: {e.strerror}")
    return parse_presentation(text)


def _emit(obj):
    sys.stdout.write(json.dumps(obj, indent=2, sort_keys=True) + "\n")


def _progress(msg):
    print(msg, file=sys.stderr)


def cmd_analyze(args):
    report = analyze(_load(args.presentation))
    _emit(report_to_json(report))
    return 0


def cmd_graph(args):
    g = build_marked_graph(MonomialIdeal(_load(args.presentation)))
    if args.format == "dot":
        sys.stdout.write(export_dot(g))
    else:
        _emit(export_json(g))
    return 0


def cmd_ext_basis(args):
    g = build_marked_graph(MonomialIdeal(_load(args.presentation)))
    table = poincare_table(g, args.max_degree)
    classes = generators_up_to(g, args.max_degree)
    _emit({
        "max_cohomological_degree": args.max_degree,
        "dimensions": table.to_json(),
        "generators": [c.to_json() for c in classes],
    })
    return 0


def _parse_walk_arg(g, text, name):
    try:
        items = json.loads(text)
    except json.JSONDecodeError as e:
        raise PresentationError(f"{name} is not a JSON array: {e.msg}")
    if not isinstance(items, list) or not all(isinstance(x, str) for x in items):
        raise PresentationError(f"{name} must be a JSON array of vertex words")
    try:
        return parse_display_walk(g, items)
    except ValueError as e:
        raise PresentationError(f"{name}: {e}")


def cmd_multiply(args):
    g = build_marked_graph(MonomialIdeal(_load(args.presentation)))
    try:
        left = ext_class(g, _parse_walk_arg(g, args.left, "--left"))
        right = ext_class(g, _parse_walk_arg(g, args.right, "--right"))
    except ValueError as e:
        raise PresentationError(str(e))
    product = yoneda_mul(g, left, right)
    _emit({
        "left": left.to_json(),
        "right": right.to_json(),
        "product": product.to_json() if product else None,
        "zero": product is None,
    })
    return 0


def cmd_decide_fg(args):
    g = build_marked_graph(MonomialIdeal(_load(args.presentation)))
    verdict = finitely_generated(g)
    _emit(verdict.to_json())
    return 0


def cmd_decide_noetherian(args):
    g = build_marked_graph(MonomialIdeal(_load(args.presentation)))
    _emit(noetherian(g, args.side).to_json())
    return 0


def cmd_series(args):
    g = build_marked_graph(MonomialIdeal(_load(args.presentation)))
    series = hilbert_series(g)
    out = series.to_json()
    out["pretty"] = str(series)
    if args.truncate is not None:
        out["coefficients"] = series.series(args.truncate)
    _emit(out)
    return 0


def cmd_validate(args):
    ideal = MonomialIdeal(_load(args.presentation))
    g = build_marked_graph(ideal)
    table = minimal_resolution(ideal, field_char=args.field_char,
                               max_i=args.max_i, max_j=args.max_j,
                               jobs=args.jobs, progress=_progress)
    mismatches = cross_validate(g, table)
    _emit({
        "betti": table.to_json(),
        "mismatches": mismatches,
        "params": {
            "edge_count": graph_params(g).edge_count,
        },
    })
    if mismatches:
        print("cross validation failed: walk counts disagree with the "
              "resolution", file=sys.stderr)
        return 2
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="yoneda-cps",
        description="Finiteness properties of the cohomology of graded "
                    "monomial algebras",
    )
    parser.add_argument("--jobs", type=int, default=1,
                        help="worker processes for the oracle")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="full report on one presentation")
    p.add_argument("presentation")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("graph", help="export the annihilator graph")
    p.add_argument("presentation")
    p.add_argument("--format", choices=("json", "dot"), default="json")
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("ext-basis", help="basis and generators by degree")
    p.add_argument("presentation")
    p.add_argument("--max-degree", type=int, default=6)
    p.set_defaults(func=cmd_ext_basis)

    p = sub.add_parser("multiply", help="product of two basis classes")
    p.add_argument("presentation")
    p.add_argument("--left", required=True,
                   help='JSON walk, e.g. \'["b","cda"]\'')
    p.add_argument("--right", required=True)
    p.set_defaults(func=cmd_multiply)

    p = sub.add_parser("decide-fg", help="finite generation verdict")
    p.add_argument("presentation")
    p.set_defaults(func=cmd_decide_fg)

    p = sub.add_parser("decide-noetherian", help="one-sided chain condition")
    p.add_argument("presentation")
    p.add_argument("--side", choices=("left", "right"), required=True)
    p.set_defaults(func=cmd_decide_noetherian)

    p = sub.add_parser("series", help="Hilbert series of the cohomology")
    p.add_argument("presentation")
    p.add_argument("--truncate", type=int, default=None,
                   help="also expand this many coefficients")
    p.set_defaults(func=cmd_series)

    p = sub.add_parser("validate", help="cross-check walks against the "
                                        "resolution oracle")
    p.add_argument("presentation")
    p.add_argument("--field-char", type=int, default=2)
    p.add_argument("--max-i", type=int, default=8)
    p.add_argument("--max-j", type=int, default=16)
    p.set_defaults(func=cmd_validate)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (PresentationError, PreconditionError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    except WalkCapExceeded as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    except AssertionError as e:
        print(f"internal invariant violated: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
