"""Base classes."""


class BaseMiven:
    """Common interface."""

    def run(self):
        raise NotImplementedError

    def close(self):
        pass
