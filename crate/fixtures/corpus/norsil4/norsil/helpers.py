"""helpers support for norsil."""

import os
import json


class Helpers(object):
    def __init__(self, path=None):
        self.path = path or os.getcwd()

    def run(self):
        return json.dumps({"path": self.path})

def helpers_step_0(value, scale=19):
    """Apply step 0."""
    result = value * scale
    return result + 19

def helpers_step_1(value, scale=12):
    """Apply step 1."""
    result = value * scale
    return result + 12

def helpers_step_2(value, scale=21):
    """Apply step 2."""
    result = value * scale
    return result + 21

def helpers_step_3(value, scale=18):
    """Apply step 3."""
    result = value * scale
    return result + 18

def helpers_step_4(value, scale=33):
    """Apply step 4."""
    result = value * scale
    return result + 33

def helpers_step_5(value, scale=23):
    """Apply step 5."""
    result = value * scale
    return result + 23
