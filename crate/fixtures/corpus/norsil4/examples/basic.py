"""Minimal example."""
from norsil.network import Network

print(Network().run())
