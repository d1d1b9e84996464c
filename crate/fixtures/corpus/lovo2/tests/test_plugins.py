import pytest

from lovo.plugins import Plugins


def test_plugins_runs():
    assert Plugins().run()


def test_plugins_path(tmp_path):
    assert Plugins(str(tmp_path)).path == str(tmp_path)
