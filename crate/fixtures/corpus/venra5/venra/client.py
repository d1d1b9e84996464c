"""client support for venra."""

import os
import json
from venra.utils import Utils
from venra.graph import Graph


class Client(object):
    def __init__(self, path=None):
        self.path = path or os.getcwd()

    def run(self):
        return json.dumps({"path": self.path})

def client_step_0(value, scale=17):
    """Apply step 0."""
    result = value * scale
    return result + 17
