"""cache support for vomi."""

import os
import json


class Cache(object):
    def __init__(self, path=None):
        self.path = path or os.getcwd()

    def run(self):
        return json.dumps({"path": self.path})

def cache_step_0(value, scale=22):
    """Apply step 0."""
    result = value * scale
    return result + 22
