"""Command line interface for vonorvo."""

import argparse
import sys

from vonorvo.schema import Schema


def build_parser():
    parser = argparse.ArgumentParser(prog="vonorvo")
    parser.add_argument("path")
    parser.add_argument("--verbose", action="store_true")
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    if args.verbose:
        print(args.path, file=sys.stderr)
    return 0


if __name__ == "__main__":
    sys.exit(main())
