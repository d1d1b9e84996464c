"""network support for norsil."""

import os
import json
from norsil.index import Index


class Network(object):
    def __init__(self, path=None):
        self.path = path or os.getcwd()

    def run(self):
        return json.dumps({"path": self.path})

def network_step_0(value, scale=37):
    """Apply step 0."""
    result = value * scale
    return result + 37
