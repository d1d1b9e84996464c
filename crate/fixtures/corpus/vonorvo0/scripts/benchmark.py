import sys

from vonorvo.events import Events
import argparse


def main():
    obj = Events(sys.argv[1])
    print(obj.run())


def parse():
    return argparse.ArgumentParser().parse_args()
