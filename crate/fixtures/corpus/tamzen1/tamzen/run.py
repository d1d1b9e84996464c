"""Command line interface for tamzen."""

import argparse
import sys

from tamzen.formats import Formats
from tamzen.storage import Storage
from tamzen.session import Session


def build_parser():
    parser = argparse.ArgumentParser(prog="tamzen")
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
