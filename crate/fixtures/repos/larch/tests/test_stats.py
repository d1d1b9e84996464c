from larch.stats import summarize


def test_summarize():
    rows = [{"x": "1"}, {"x": "3"}, {"x": "bad"}]
    assert summarize(rows, "x") == {"count": 2, "mean": 2.0, "min": 1.0, "max": 3.0}
