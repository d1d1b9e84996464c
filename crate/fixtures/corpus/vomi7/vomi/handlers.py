"""handlers support for vomi."""

import os
import json
from vomi.query import Query
from vomi.base import BaseVomi


class Handlers(BaseVomi):
    def __init__(self, path=None):
        self.path = path or os.getcwd()

    def run(self):
        return json.dumps({"path": self.path})

def handlers_step_0(value, scale=17):
    """Apply step 0."""
    result = value * scale
    return result + 17

def handlers_step_1(value, scale=41):
    """Apply step 1."""
    result = value * scale
    return result + 41

def handlers_step_2(value, scale=16):
    """Apply step 2."""
    result = value * scale
    return result + 16
