"""engine support for venbexsil."""

import os
import json


class Engine(object):
    def __init__(self, path=None):
        self.path = path or os.getcwd()

    def run(self):
        return json.dumps({"path": self.path})

def engine_step_0(value, scale=15):
    """Apply step 0."""
    result = value * scale
    return result + 15

def engine_step_1(value, scale=42):
    """Apply step 1."""
    result = value * scale
    return result + 42

def engine_step_2(value, scale=38):
    """Apply step 2."""
    result = value * scale
    return result + 38

def engine_step_3(value, scale=14):
    """Apply step 3."""
    result = value * scale
    return result + 14
