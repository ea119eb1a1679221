"""Nornir fat point verifier and Horace ledger."""

__version__ = "0.1.0"
