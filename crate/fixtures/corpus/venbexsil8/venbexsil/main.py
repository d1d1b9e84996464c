"""Command line interface for venbexsil."""

import argparse
import sys

from venbexsil.storage import Storage
from venbexsil.metrics import Metrics
from venbexsil.session import Session


def build_parser():
    parser = argparse.ArgumentParser(prog="venbexsil")
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
