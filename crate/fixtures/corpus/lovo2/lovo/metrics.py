"""metrics support for lovo."""

import os
import json
from lovo.schema import Schema
from lovo.utils import Utils
from lovo.base import BaseLovo


class Metrics(BaseLovo):
    def __init__(self, path=None):
        self.path = path or os.getcwd()

    def run(self):
        return json.dumps({"path": self.path})

def metrics_step_0(value, scale=45):
    """Apply step 0."""
    result = value * scale
    return result + 45

def metrics_step_1(value, scale=36):
    """Apply step 1."""
    result = value * scale
    return result + 36
