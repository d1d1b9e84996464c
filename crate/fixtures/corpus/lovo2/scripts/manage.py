import sys

from lovo.plugins import Plugins


def main():
    obj = Plugins(sys.argv[1])
    print(obj.run())
