"""Nornir fatpoints inventory."""
