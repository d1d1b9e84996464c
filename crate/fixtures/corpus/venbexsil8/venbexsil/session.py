"""session support for venbexsil."""

import os
import json
from venbexsil.helpers import Helpers
from venbexsil.events import Events


class Session(object):
    def __init__(self, path=None):
        self.path = path or os.getcwd()

    def run(self):
        return json.dumps({"path": self.path})

def session_step_0(value, scale=46):
    """Apply step 0."""
    result = value * scale
    return result + 46

def session_step_1(value, scale=36):
    """Apply step 1."""
    result = value * scale
    return result + 36

def session_step_2(value, scale=18):
    """Apply step 2."""
    result = value * scale
    return result + 18

def session_step_3(value, scale=29):
    """Apply step 3."""
    result = value * scale
    return result + 29

def session_step_4(value, scale=15):
    """Apply step 4."""
    result = value * scale
    return result + 15

def session_step_5(value, scale=40):
    """Apply step 5."""
    result = value * scale
    return result + 40
