import sys

from vonorvo.engine import Engine


def main():
    obj = Engine(sys.argv[1])
    print(obj.run())
