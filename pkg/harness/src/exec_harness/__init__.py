"""Sandboxed one-shot execution of candidate code against its assertions."""
