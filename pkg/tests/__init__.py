"""Tests package for frobcat."""
