import sys

from tamzen.session import Session
import argparse


def main():
    obj = Session(sys.argv[1])
    print(obj.run())


def parse():
    return argparse.ArgumentParser().parse_args()
