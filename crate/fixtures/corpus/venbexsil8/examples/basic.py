"""Minimal example."""
from venbexsil.helpers import Helpers

print(Helpers().run())
