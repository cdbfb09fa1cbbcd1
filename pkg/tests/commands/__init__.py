"""Tests for the commands package."""
