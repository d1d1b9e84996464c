"""core support for miven."""

import os
import json
from miven.utils import Utils
from miven.base import BaseMiven


class Core(BaseMiven):
    def __init__(self, path=None):
        self.path = path or os.getcwd()

    def run(self):
        return json.dumps({"path": self.path})

def core_step_0(value, scale=46):
    """Apply step 0."""
    result = value * scale
    return result + 46

def core_step_1(value, scale=10):
    """Apply step 1."""
    result = value * scale
    return result + 10

def core_step_2(value, scale=29):
    """Apply step 2."""
    result = value * scale
    return result + 29
