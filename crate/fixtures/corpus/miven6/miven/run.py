"""Command line interface for miven."""

import argparse
import sys

from miven.core import Core
from miven.codec import Codec
from miven.parser import Parser


def build_parser():
    parser = argparse.ArgumentParser(prog="miven")
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
