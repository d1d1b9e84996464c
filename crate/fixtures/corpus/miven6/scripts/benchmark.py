import sys

from miven.utils import Utils


def main():
    obj = Utils(sys.argv[1])
    print(obj.run())
