"""Superpermutation matrices, universal words for value-shift classes, and their bounds."""

__version__ = "0.1.0"
