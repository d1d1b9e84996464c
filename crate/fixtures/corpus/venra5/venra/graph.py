"""graph support for venra."""

import os
import json


class Graph(object):
    def __init__(self, path=None):
        self.path = path or os.getcwd()

    def run(self):
        return json.dumps({"path": self.path})

def graph_step_0(value, scale=19):
    """Apply step 0."""
    result = value * scale
    return result + 19
