import pytest

from vonorvo.engine import Engine


def test_engine_runs():
    assert Engine().run()


def test_engine_path(tmp_path):
    assert Engine(str(tmp_path)).path == str(tmp_path)
