def to_float(text):
    try:
        return float(text)
    except (TypeError, ValueError):
        return None
