import argparse
import sys

from larch.reader import read_rows
from larch.stats import summarize
from larch.render import render_table


def build_parser():
    parser = argparse.ArgumentParser(prog="larch", description="Summarize a CSV column.")
    parser.add_argument("path", help="CSV file to read")
    parser.add_argument("--column", required=True, help="column to summarize")
    parser.add_argument("--delimiter", default=",")
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    rows = read_rows(args.path, delimiter=args.delimiter)
    try:
        summary = summarize(rows, args.column)
    except KeyError:
        print(f"no such column: {args.column}", file=sys.stderr)
        return 1
    print(render_table(summary))
    return 0


if __name__ == "__main__":
    sys.exit(main())
