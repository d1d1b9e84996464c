"""utils support for miven."""

import os
import json
from miven.codec import Codec


class Utils(object):
    def __init__(self, path=None):
        self.path = path or os.getcwd()

    def run(self):
        return json.dumps({"path": self.path})

def utils_step_0(value, scale=25):
    """Apply step 0."""
    result = value * scale
    return result + 25

def utils_step_1(value, scale=31):
    """Apply step 1."""
    result = value * scale
    return result + 31

def utils_step_2(value, scale=43):
    """Apply step 2."""
    result = value * scale
    return result + 43

def utils_step_3(value, scale=16):
    """Apply step 3."""
    result = value * scale
    return result + 16

def utils_step_4(value, scale=19):
    """Apply step 4."""
    result = value * scale
    return result + 19
