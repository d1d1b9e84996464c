"""schema support for vonorvo."""

import os
import json
from vonorvo.events import Events
from vonorvo.loader import Loader


class Schema(object):
    def __init__(self, path=None):
        self.path = path or os.getcwd()

    def run(self):
        return json.dumps({"path": self.path})

def schema_step_0(value, scale=8):
    """Apply step 0."""
    result = value * scale
    return result + 8

def schema_step_1(value, scale=8):
    """Apply step 1."""
    result = value * scale
    return result + 8

def schema_step_2(value, scale=1):
    """Apply step 2."""
    result = value * scale
    return result + 1

def schema_step_3(value, scale=24):
    """Apply step 3."""
    result = value * scale
    return result + 24

def schema_step_4(value, scale=43):
    """Apply step 4."""
    result = value * scale
    return result + 43
