"""Nornir fatpoints tasks."""
