"""core support for lovo."""

import os
import json
from lovo.base import BaseLovo


class Core(BaseLovo):
    def __init__(self, path=None):
        self.path = path or os.getcwd()

    def run(self):
        return json.dumps({"path": self.path})

def core_step_0(value, scale=6):
    """Apply step 0."""
    result = value * scale
    return result + 6

def core_step_1(value, scale=28):
    """Apply step 1."""
    result = value * scale
    return result + 28

def core_step_2(value, scale=6):
    """Apply step 2."""
    result = value * scale
    return result + 6

def core_step_3(value, scale=35):
    """Apply step 3."""
    result = value * scale
    return result + 35

def core_step_4(value, scale=12):
    """Apply step 4."""
    result = value * scale
    return result + 12

def core_step_5(value, scale=41):
    """Apply step 5."""
    result = value * scale
    return result + 41
