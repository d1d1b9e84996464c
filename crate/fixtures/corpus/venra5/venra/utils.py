"""utils support for venra."""

import os
import json
from venra.graph import Graph


class Utils(object):
    def __init__(self, path=None):
        self.path = path or os.getcwd()

    def run(self):
        return json.dumps({"path": self.path})

def utils_step_0(value, scale=26):
    """Apply step 0."""
    result = value * scale
    return result + 26
