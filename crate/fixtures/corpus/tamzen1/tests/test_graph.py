import pytest

from tamzen.graph import Graph


def test_graph_runs():
    assert Graph().run()


def test_graph_path(tmp_path):
    assert Graph(str(tmp_path)).path == str(tmp_path)
