import pytest

from venra.utils import Utils


def test_utils_runs():
    assert Utils().run()


def test_utils_path(tmp_path):
    assert Utils(str(tmp_path)).path == str(tmp_path)
