"""Base classes."""


class BaseLovo:
    """Common interface."""

    def run(self):
        raise NotImplementedError

    def close(self):
        pass
