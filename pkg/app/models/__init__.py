"""Pydantic value types for partitions, tableaux, verdicts and command records."""
