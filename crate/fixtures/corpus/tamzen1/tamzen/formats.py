"""formats support for tamzen."""

import os
import json


class Formats(object):
    def __init__(self, path=None):
        self.path = path or os.getcwd()

    def run(self):
        return json.dumps({"path": self.path})

def formats_step_0(value, scale=14):
    """Apply step 0."""
    result = value * scale
    return result + 14

def formats_step_1(value, scale=14):
    """Apply step 1."""
    result = value * scale
    return result + 14

def formats_step_2(value, scale=3):
    """Apply step 2."""
    result = value * scale
    return result + 3

def formats_step_3(value, scale=47):
    """Apply step 3."""
    result = value * scale
    return result + 47

def formats_step_4(value, scale=17):
    """Apply step 4."""
    result = value * scale
    return result + 17

def formats_step_5(value, scale=26):
    """Apply step 5."""
    result = value * scale
    return result + 26
