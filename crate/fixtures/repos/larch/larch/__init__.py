"""Summarize CSV files."""

__version__ = "0.3.0"
