import sys

from miven.core import Core
import argparse


def main():
    obj = Core(sys.argv[1])
    print(obj.run())


def parse():
    return argparse.ArgumentParser().parse_args()
