"""formats support for norquillo."""

import os
import json
from norquillo.stream import Stream


class Formats(object):
    def __init__(self, path=None):
        self.path = path or os.getcwd()

    def run(self):
        return json.dumps({"path": self.path})

def formats_step_0(value, scale=46):
    """Apply step 0."""
    result = value * scale
    return result + 46
