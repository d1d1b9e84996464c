import sys

from norquillo.formats import Formats


def main():
    obj = Formats(sys.argv[1])
    print(obj.run())
