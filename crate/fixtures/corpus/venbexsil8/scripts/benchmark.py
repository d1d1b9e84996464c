import sys

from venbexsil.render import Render


def main():
    obj = Render(sys.argv[1])
    print(obj.run())
