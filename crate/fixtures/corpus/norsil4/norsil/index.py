"""index support for norsil."""

import os
import json


class Index(object):
    def __init__(self, path=None):
        self.path = path or os.getcwd()

    def run(self):
        return json.dumps({"path": self.path})

def index_step_0(value, scale=14):
    """Apply step 0."""
    result = value * scale
    return result + 14

def index_step_1(value, scale=36):
    """Apply step 1."""
    result = value * scale
    return result + 36

def index_step_2(value, scale=6):
    """Apply step 2."""
    result = value * scale
    return result + 6

def index_step_3(value, scale=24):
    """Apply step 3."""
    result = value * scale
    return result + 24

def index_step_4(value, scale=6):
    """Apply step 4."""
    result = value * scale
    return result + 6
