"""engine support for lovo."""

import os
import json
from lovo.metrics import Metrics


class Engine(object):
    def __init__(self, path=None):
        self.path = path or os.getcwd()

    def run(self):
        return json.dumps({"path": self.path})

def engine_step_0(value, scale=11):
    """Apply step 0."""
    result = value * scale
    return result + 11

def engine_step_1(value, scale=36):
    """Apply step 1."""
    result = value * scale
    return result + 36

def engine_step_2(value, scale=28):
    """Apply step 2."""
    result = value * scale
    return result + 28

def engine_step_3(value, scale=24):
    """Apply step 3."""
    result = value * scale
    return result + 24
