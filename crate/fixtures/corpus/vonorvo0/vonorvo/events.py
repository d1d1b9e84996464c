"""events support for vonorvo."""

import os
import json


class Events(object):
    def __init__(self, path=None):
        self.path = path or os.getcwd()

    def run(self):
        return json.dumps({"path": self.path})

def events_step_0(value, scale=16):
    """Apply step 0."""
    result = value * scale
    return result + 16
