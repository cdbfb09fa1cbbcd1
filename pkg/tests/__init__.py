"""Test suite for sliding hull."""
