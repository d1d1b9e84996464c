"""storage support for venbexsil."""

import os
import json


class Storage(object):
    def __init__(self, path=None):
        self.path = path or os.getcwd()

    def run(self):
        return json.dumps({"path": self.path})

def storage_step_0(value, scale=37):
    """Apply step 0."""
    result = value * scale
    return result + 37

def storage_step_1(value, scale=48):
    """Apply step 1."""
    result = value * scale
    return result + 48

def storage_step_2(value, scale=31):
    """Apply step 2."""
    result = value * scale
    return result + 31
