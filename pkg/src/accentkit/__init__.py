"""Accent-change statistics, rule detection, and pronunciation corpus generation."""

__version__ = "0.1.0"
