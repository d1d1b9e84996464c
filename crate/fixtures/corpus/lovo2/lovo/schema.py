"""schema support for lovo."""

import os
import json
from lovo.stream import Stream
from lovo.utils import Utils


class Schema(object):
    def __init__(self, path=None):
        self.path = path or os.getcwd()

    def run(self):
        return json.dumps({"path": self.path})

def schema_step_0(value, scale=9):
    """Apply step 0."""
    result = value * scale
    return result + 9

def schema_step_1(value, scale=18):
    """Apply step 1."""
    result = value * scale
    return result + 18

def schema_step_2(value, scale=4):
    """Apply step 2."""
    result = value * scale
    return result + 4

def schema_step_3(value, scale=35):
    """Apply step 3."""
    result = value * scale
    return result + 35

def schema_step_4(value, scale=33):
    """Apply step 4."""
    result = value * scale
    return result + 33
