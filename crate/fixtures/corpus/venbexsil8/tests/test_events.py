import pytest

from venbexsil.events import Events


def test_events_runs():
    assert Events().run()


def test_events_path(tmp_path):
    assert Events(str(tmp_path)).path == str(tmp_path)
