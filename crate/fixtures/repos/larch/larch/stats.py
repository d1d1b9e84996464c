from larch.util import to_float


def summarize(rows, column):
    values = [to_float(r[column]) for r in rows]
    values = [v for v in values if v is not None]
    if not values:
        return {"count": 0}
    return {
        "count": len(values),
        "mean": sum(values) / len(values),
        "min": min(values),
        "max": max(values),
    }
