"""codec support for miven."""

import os
import json


class Codec(object):
    def __init__(self, path=None):
        self.path = path or os.getcwd()

    def run(self):
        return json.dumps({"path": self.path})

def codec_step_0(value, scale=29):
    """Apply step 0."""
    result = value * scale
    return result + 29

def codec_step_1(value, scale=26):
    """Apply step 1."""
    result = value * scale
    return result + 26

def codec_step_2(value, scale=49):
    """Apply step 2."""
    result = value * scale
    return result + 49
