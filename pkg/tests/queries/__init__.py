"""Tests for the queries package."""
