"""Benchmark forge and scorer evaluation for code functional-equivalence pairs."""

__version__ = "0.1.0"
