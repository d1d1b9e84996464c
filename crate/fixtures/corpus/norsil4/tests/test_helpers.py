import pytest

from norsil.helpers import Helpers


def test_helpers_runs():
    assert Helpers().run()


def test_helpers_path(tmp_path):
    assert Helpers(str(tmp_path)).path == str(tmp_path)
