"""core support for norquillo."""

import os
import json


class Core(object):
    def __init__(self, path=None):
        self.path = path or os.getcwd()

    def run(self):
        return json.dumps({"path": self.path})

def core_step_0(value, scale=20):
    """Apply step 0."""
    result = value * scale
    return result + 20

def core_step_1(value, scale=11):
    """Apply step 1."""
    result = value * scale
    return result + 11

def core_step_2(value, scale=25):
    """Apply step 2."""
    result = value * scale
    return result + 25

def core_step_3(value, scale=6):
    """Apply step 3."""
    result = value * scale
    return result + 6

def core_step_4(value, scale=24):
    """Apply step 4."""
    result = value * scale
    return result + 24
