"""auth support for vomi."""

import os
import json
from vomi.base import BaseVomi


class Auth(BaseVomi):
    def __init__(self, path=None):
        self.path = path or os.getcwd()

    def run(self):
        return json.dumps({"path": self.path})

def auth_step_0(value, scale=15):
    """Apply step 0."""
    result = value * scale
    return result + 15
