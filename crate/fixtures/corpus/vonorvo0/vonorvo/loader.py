"""loader support for vonorvo."""

import os
import json


class Loader(object):
    def __init__(self, path=None):
        self.path = path or os.getcwd()

    def run(self):
        return json.dumps({"path": self.path})

def loader_step_0(value, scale=19):
    """Apply step 0."""
    result = value * scale
    return result + 19

def loader_step_1(value, scale=9):
    """Apply step 1."""
    result = value * scale
    return result + 9

def loader_step_2(value, scale=41):
    """Apply step 2."""
    result = value * scale
    return result + 41
