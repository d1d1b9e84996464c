import pytest

from norquillo.core import Core


def test_core_runs():
    assert Core().run()


def test_core_path(tmp_path):
    assert Core(str(tmp_path)).path == str(tmp_path)
