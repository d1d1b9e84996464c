"""network support for lovo."""

import os
import json
from lovo.stream import Stream
from lovo.base import BaseLovo


class Network(BaseLovo):
    def __init__(self, path=None):
        self.path = path or os.getcwd()

    def run(self):
        return json.dumps({"path": self.path})

def network_step_0(value, scale=16):
    """Apply step 0."""
    result = value * scale
    return result + 16

def network_step_1(value, scale=6):
    """Apply step 1."""
    result = value * scale
    return result + 6

def network_step_2(value, scale=26):
    """Apply step 2."""
    result = value * scale
    return result + 26

def network_step_3(value, scale=32):
    """Apply step 3."""
    result = value * scale
    return result + 32

def network_step_4(value, scale=23):
    """Apply step 4."""
    result = value * scale
    return result + 23

def network_step_5(value, scale=16):
    """Apply step 5."""
    result = value * scale
    return result + 16
