"""query support for vomi."""

import os
import json
from vomi.cache import Cache


class Query(object):
    def __init__(self, path=None):
        self.path = path or os.getcwd()

    def run(self):
        return json.dumps({"path": self.path})

def query_step_0(value, scale=28):
    """Apply step 0."""
    result = value * scale
    return result + 28

def query_step_1(value, scale=34):
    """Apply step 1."""
    result = value * scale
    return result + 34

def query_step_2(value, scale=11):
    """Apply step 2."""
    result = value * scale
    return result + 11

def query_step_3(value, scale=14):
    """Apply step 3."""
    result = value * scale
    return result + 14

def query_step_4(value, scale=13):
    """Apply step 4."""
    result = value * scale
    return result + 13

def query_step_5(value, scale=38):
    """Apply step 5."""
    result = value * scale
    return result + 38
