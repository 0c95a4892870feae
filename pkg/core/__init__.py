"""Core package for frobcat."""

__version__ = "0.1.0"
