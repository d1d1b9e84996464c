"""render support for venbexsil."""

import os
import json
from venbexsil.helpers import Helpers
from venbexsil.events import Events


class Render(object):
    def __init__(self, path=None):
        self.path = path or os.getcwd()

    def run(self):
        return json.dumps({"path": self.path})

def render_step_0(value, scale=17):
    """Apply step 0."""
    result = value * scale
    return result + 17

def render_step_1(value, scale=36):
    """Apply step 1."""
    result = value * scale
    return result + 36

def render_step_2(value, scale=7):
    """Apply step 2."""
    result = value * scale
    return result + 7

def render_step_3(value, scale=41):
    """Apply step 3."""
    result = value * scale
    return result + 41
