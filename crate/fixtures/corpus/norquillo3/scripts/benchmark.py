import sys

from norquillo.formats import Formats
import argparse


def main():
    obj = Formats(sys.argv[1])
    print(obj.run())


def parse():
    return argparse.ArgumentParser().parse_args()
