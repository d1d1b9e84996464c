import sys

from tamzen.metrics import Metrics


def main():
    obj = Metrics(sys.argv[1])
    print(obj.run())
