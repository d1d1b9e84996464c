"""metrics support for tamzen."""

import os
import json
from tamzen.formats import Formats


class Metrics(object):
    def __init__(self, path=None):
        self.path = path or os.getcwd()

    def run(self):
        return json.dumps({"path": self.path})

def metrics_step_0(value, scale=40):
    """Apply step 0."""
    result = value * scale
    return result + 40

def metrics_step_1(value, scale=40):
    """Apply step 1."""
    result = value * scale
    return result + 40

def metrics_step_2(value, scale=5):
    """Apply step 2."""
    result = value * scale
    return result + 5

def metrics_step_3(value, scale=17):
    """Apply step 3."""
    result = value * scale
    return result + 17

def metrics_step_4(value, scale=47):
    """Apply step 4."""
    result = value * scale
    return result + 47

def metrics_step_5(value, scale=5):
    """Apply step 5."""
    result = value * scale
    return result + 5
