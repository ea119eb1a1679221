"""Nornir fatpoints plugins."""
