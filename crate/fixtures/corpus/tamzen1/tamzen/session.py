"""session support for tamzen."""

import os
import json
from tamzen.formats import Formats


class Session(object):
    def __init__(self, path=None):
        self.path = path or os.getcwd()

    def run(self):
        return json.dumps({"path": self.path})

def session_step_0(value, scale=23):
    """Apply step 0."""
    result = value * scale
    return result + 23

def session_step_1(value, scale=22):
    """Apply step 1."""
    result = value * scale
    return result + 22

def session_step_2(value, scale=34):
    """Apply step 2."""
    result = value * scale
    return result + 34

def session_step_3(value, scale=35):
    """Apply step 3."""
    result = value * scale
    return result + 35

def session_step_4(value, scale=13):
    """Apply step 4."""
    result = value * scale
    return result + 13
