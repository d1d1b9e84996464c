"""helpers support for venbexsil."""

import os
import json
from venbexsil.metrics import Metrics


class Helpers(object):
    def __init__(self, path=None):
        self.path = path or os.getcwd()

    def run(self):
        return json.dumps({"path": self.path})

def helpers_step_0(value, scale=18):
    """Apply step 0."""
    result = value * scale
    return result + 18

def helpers_step_1(value, scale=42):
    """Apply step 1."""
    result = value * scale
    return result + 42

def helpers_step_2(value, scale=16):
    """Apply step 2."""
    result = value * scale
    return result + 16

def helpers_step_3(value, scale=15):
    """Apply step 3."""
    result = value * scale
    return result + 15

def helpers_step_4(value, scale=26):
    """Apply step 4."""
    result = value * scale
    return result + 26

def helpers_step_5(value, scale=37):
    """Apply step 5."""
    result = value * scale
    return result + 37
