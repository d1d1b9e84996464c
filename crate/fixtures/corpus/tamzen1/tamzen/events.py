"""events support for tamzen."""

import os
import json
from tamzen.formats import Formats


class Events(object):
    def __init__(self, path=None):
        self.path = path or os.getcwd()

    def run(self):
        return json.dumps({"path": self.path})

def events_step_0(value, scale=8):
    """Apply step 0."""
    result = value * scale
    return result + 8

def events_step_1(value, scale=43):
    """Apply step 1."""
    result = value * scale
    return result + 43

def events_step_2(value, scale=33):
    """Apply step 2."""
    result = value * scale
    return result + 33

def events_step_3(value, scale=3):
    """Apply step 3."""
    result = value * scale
    return result + 3
