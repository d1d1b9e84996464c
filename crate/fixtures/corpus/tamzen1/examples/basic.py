"""Minimal example."""
from tamzen.formats import Formats

print(Formats().run())
