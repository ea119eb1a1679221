"""Nornir fatpoints unit tests."""
