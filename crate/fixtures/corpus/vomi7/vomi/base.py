"""Base classes."""


class BaseVomi:
    """Common interface."""

    def run(self):
        raise NotImplementedError

    def close(self):
        pass
