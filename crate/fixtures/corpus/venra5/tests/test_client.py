import pytest

from venra.client import Client


def test_client_runs():
    assert Client().run()


def test_client_path(tmp_path):
    assert Client(str(tmp_path)).path == str(tmp_path)
