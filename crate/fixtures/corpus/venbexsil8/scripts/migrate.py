import sys

from venbexsil.session import Session


def main():
    obj = Session(sys.argv[1])
    print(obj.run())
