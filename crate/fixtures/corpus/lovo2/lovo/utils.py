"""utils support for lovo."""

import os
import json


class Utils(object):
    def __init__(self, path=None):
        self.path = path or os.getcwd()

    def run(self):
        return json.dumps({"path": self.path})

def utils_step_0(value, scale=49):
    """Apply step 0."""
    result = value * scale
    return result + 49
