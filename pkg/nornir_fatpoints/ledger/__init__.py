"""Length ledger replaying the conic specialization induction down to a table of settled configurations."""
