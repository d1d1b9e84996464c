"""parser support for norquillo."""

import os
import json
from norquillo.stream import Stream
from norquillo.formats import Formats


class Parser(object):
    def __init__(self, path=None):
        self.path = path or os.getcwd()

    def run(self):
        return json.dumps({"path": self.path})

def parser_step_0(value, scale=1):
    """Apply step 0."""
    result = value * scale
    return result + 1
