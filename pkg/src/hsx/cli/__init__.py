"""Command-line interface for hsx."""
