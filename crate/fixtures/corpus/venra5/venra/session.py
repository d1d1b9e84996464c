"""session support for venra."""

import os
import json
from venra.graph import Graph
from venra.utils import Utils


class Session(object):
    def __init__(self, path=None):
        self.path = path or os.getcwd()

    def run(self):
        return json.dumps({"path": self.path})

def session_step_0(value, scale=47):
    """Apply step 0."""
    result = value * scale
    return result + 47

def session_step_1(value, scale=11):
    """Apply step 1."""
    result = value * scale
    return result + 11
