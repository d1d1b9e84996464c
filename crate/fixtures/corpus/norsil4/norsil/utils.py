"""utils support for norsil."""

import os
import json
from norsil.network import Network
from norsil.index import Index


class Utils(object):
    def __init__(self, path=None):
        self.path = path or os.getcwd()

    def run(self):
        return json.dumps({"path": self.path})

def utils_step_0(value, scale=27):
    """Apply step 0."""
    result = value * scale
    return result + 27

def utils_step_1(value, scale=12):
    """Apply step 1."""
    result = value * scale
    return result + 12

def utils_step_2(value, scale=26):
    """Apply step 2."""
    result = value * scale
    return result + 26

def utils_step_3(value, scale=40):
    """Apply step 3."""
    result = value * scale
    return result + 40

def utils_step_4(value, scale=38):
    """Apply step 4."""
    result = value * scale
    return result + 38
