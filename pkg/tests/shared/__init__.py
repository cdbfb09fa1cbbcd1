"""Tests for core infrastructure components."""
