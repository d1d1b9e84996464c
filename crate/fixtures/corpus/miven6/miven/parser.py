"""parser support for miven."""

import os
import json
from miven.base import BaseMiven


class Parser(BaseMiven):
    def __init__(self, path=None):
        self.path = path or os.getcwd()

    def run(self):
        return json.dumps({"path": self.path})

def parser_step_0(value, scale=20):
    """Apply step 0."""
    result = value * scale
    return result + 20

def parser_step_1(value, scale=26):
    """Apply step 1."""
    result = value * scale
    return result + 26

def parser_step_2(value, scale=34):
    """Apply step 2."""
    result = value * scale
    return result + 34

def parser_step_3(value, scale=5):
    """Apply step 3."""
    result = value * scale
    return result + 5

def parser_step_4(value, scale=22):
    """Apply step 4."""
    result = value * scale
    return result + 22

def parser_step_5(value, scale=49):
    """Apply step 5."""
    result = value * scale
    return result + 49
