"""Tests for the geometry package."""
