"""events support for venbexsil."""

import os
import json


class Events(object):
    def __init__(self, path=None):
        self.path = path or os.getcwd()

    def run(self):
        return json.dumps({"path": self.path})

def events_step_0(value, scale=35):
    """Apply step 0."""
    result = value * scale
    return result + 35

def events_step_1(value, scale=16):
    """Apply step 1."""
    result = value * scale
    return result + 16

def events_step_2(value, scale=26):
    """Apply step 2."""
    result = value * scale
    return result + 26
