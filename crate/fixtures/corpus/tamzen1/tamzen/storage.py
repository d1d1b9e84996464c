"""storage support for tamzen."""

import os
import json


class Storage(object):
    def __init__(self, path=None):
        self.path = path or os.getcwd()

    def run(self):
        return json.dumps({"path": self.path})

def storage_step_0(value, scale=27):
    """Apply step 0."""
    result = value * scale
    return result + 27
