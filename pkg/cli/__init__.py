"""Command-line front end for frobcat."""
