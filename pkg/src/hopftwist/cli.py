"""Command line front end.

hopftwist verify <suite> [--order K] [--theta EXPR] [--seed N]
                         [--json PATH] [--timings]
hopftwist describe <file.json>
hopftwist octonion-table [--csv PATH]

Exit codes: 0 all checks passed, 1 at least one failed, 2 malformed input
(unknown suite, unparsable scalar, schema violation, unreadable file).
"""

import argparse
import sys

from .errors import ParseError, SchemaError, UnknownSuite
from .io_json import describe_doc, load_json_file, octonion_table_csv, octonion_table_rows
from .suites import SUITE_NAMES, run_suite


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="hopftwist",
        description="exact checks for twisted algebra structures",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run a named check suite")
    v.add_argument(
        "suite",
        help="one of %s, or 'all'" % ", ".join(SUITE_NAMES),
    )
    v.add_argument("--order", type=int, default=None, help="series truncation order")
    v.add_argument("--theta", default=None, help="deformation parameter expression")
    v.add_argument("--seed", type=int, default=None, help="seed for sampled inputs")
    v.add_argument("--json", dest="json_path", default=None, help="write the JSON report here ('-' for stdout)")
    v.add_argument("--timings", action="store_true", help="include elapsed time in the report")

    d = sub.add_parser("describe", help="summarize a JSON document")
    d.add_argument("file", help="path to the document")

    o = sub.add_parser("octonion-table", help="print the octonion multiplication table")
    o.add_argument("--csv", default=None, help="write (i,j,k,sign) rows to this file")
    return parser


def _cmd_verify(args):
    rep = run_suite(args.suite, order=args.order, theta=args.theta, seed=args.seed)
    for c in rep.checks:
        if c.ok:
            print("pass  %s" % c.id)
        else:
            extra = "" if c.witness is None else "  [%s]" % c.witness
            print(
                "%s %s  residual=%d%s"
                % (c.status.upper(), c.id, c.residual_term_count, extra)
            )
    passed = sum(1 for c in rep.checks if c.ok)
    print("%d/%d checks passed (seed %d)" % (passed, len(rep.checks), rep.seed))
    if args.json_path:
        text = rep.to_json(timings=args.timings)
        if args.json_path == "-":
            sys.stdout.write(text)
        else:
            with open(args.json_path, "w", encoding="utf-8") as fh:
                fh.write(text)
    return 0 if rep.ok else 1


def _cmd_describe(args):
    doc = load_json_file(args.file)
    for line in describe_doc(doc):
        print(line)
    return 0


def _cmd_octonion_table(args):
    if args.csv:
        with open(args.csv, "w", encoding="utf-8") as fh:
            fh.write(octonion_table_csv())
        print("wrote %s" % args.csv)
        return 0
    cell = {(i, j): (k, s) for i, j, k, s in octonion_table_rows()}
    header = "      " + "".join("%6s" % ("e%d" % j) for j in range(8))
    print(header)
    for i in range(8):
        row = ["%6s" % ("e%d" % i)]
        for j in range(8):
            k, s = cell[(i, j)]
            row.append("%6s" % ("%se%d" % ("-" if s < 0 else " ", k)))
        print("".join(row))
    return 0


def main(argv=None):
    parser = _build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "verify": _cmd_verify,
        "describe": _cmd_describe,
        "octonion-table": _cmd_octonion_table,
    }
    try:
        return handlers[args.command](args)
    except (UnknownSuite, ParseError, SchemaError) as e:
        print("error: %s" % e, file=sys.stderr)
        return 2
    except OSError as e:
        print("error: %s" % e, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
