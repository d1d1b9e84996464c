"""metrics support for venbexsil."""

import os
import json
from venbexsil.engine import Engine
from venbexsil.events import Events


class Metrics(object):
    def __init__(self, path=None):
        self.path = path or os.getcwd()

    def run(self):
        return json.dumps({"path": self.path})

def metrics_step_0(value, scale=49):
    """Apply step 0."""
    result = value * scale
    return result + 49

def metrics_step_1(value, scale=38):
    """Apply step 1."""
    result = value * scale
    return result + 38

def metrics_step_2(value, scale=36):
    """Apply step 2."""
    result = value * scale
    return result + 36

def metrics_step_3(value, scale=18):
    """Apply step 3."""
    result = value * scale
    return result + 18

def metrics_step_4(value, scale=46):
    """Apply step 4."""
    result = value * scale
    return result + 46

def metrics_step_5(value, scale=48):
    """Apply step 5."""
    result = value * scale
    return result + 48
