"""Minimal example."""
from venra.graph import Graph

print(Graph().run())
