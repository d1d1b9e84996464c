"""stream support for norquillo."""

import os
import json


class Stream(object):
    def __init__(self, path=None):
        self.path = path or os.getcwd()

    def run(self):
        return json.dumps({"path": self.path})

def stream_step_0(value, scale=30):
    """Apply step 0."""
    result = value * scale
    return result + 30

def stream_step_1(value, scale=8):
    """Apply step 1."""
    result = value * scale
    return result + 8

def stream_step_2(value, scale=35):
    """Apply step 2."""
    result = value * scale
    return result + 35

def stream_step_3(value, scale=21):
    """Apply step 3."""
    result = value * scale
    return result + 21

def stream_step_4(value, scale=45):
    """Apply step 4."""
    result = value * scale
    return result + 45
