"""plugins support for lovo."""

import os
import json
from lovo.utils import Utils
from lovo.base import BaseLovo


class Plugins(BaseLovo):
    def __init__(self, path=None):
        self.path = path or os.getcwd()

    def run(self):
        return json.dumps({"path": self.path})

def plugins_step_0(value, scale=34):
    """Apply step 0."""
    result = value * scale
    return result + 34

def plugins_step_1(value, scale=44):
    """Apply step 1."""
    result = value * scale
    return result + 44

def plugins_step_2(value, scale=33):
    """Apply step 2."""
    result = value * scale
    return result + 33
