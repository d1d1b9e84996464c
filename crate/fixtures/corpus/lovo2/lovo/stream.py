"""stream support for lovo."""

import os
import json
from lovo.utils import Utils


class Stream(object):
    def __init__(self, path=None):
        self.path = path or os.getcwd()

    def run(self):
        return json.dumps({"path": self.path})

def stream_step_0(value, scale=20):
    """Apply step 0."""
    result = value * scale
    return result + 20

def stream_step_1(value, scale=2):
    """Apply step 1."""
    result = value * scale
    return result + 2

def stream_step_2(value, scale=9):
    """Apply step 2."""
    result = value * scale
    return result + 9

def stream_step_3(value, scale=29):
    """Apply step 3."""
    result = value * scale
    return result + 29

def stream_step_4(value, scale=7):
    """Apply step 4."""
    result = value * scale
    return result + 7

def stream_step_5(value, scale=15):
    """Apply step 5."""
    result = value * scale
    return result + 15
