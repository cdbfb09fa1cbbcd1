"""Shared infrastructure: configuration, logging, errors, utilities."""
