"""Semantic-preserving and semantic-altering source transformations."""

from .base import Applied, Failed, NotApplicable, TransformOutcome
from .sa import SA_FAMILIES, misuse_operator, select_dissimilar
from .sp import (
    SP_VARIANTS,
    SuggestionProvider,
    convert_loop,
    default_suggestion_provider,
    insert_dead_code,
    remote_suggestion_provider,
    rename_variable,
    swap_comparison_operands,
)

__all__ = [
    "Applied", "Failed", "NotApplicable", "SA_FAMILIES", "SP_VARIANTS",
    "SuggestionProvider", "TransformOutcome", "convert_loop",
    "default_suggestion_provider", "insert_dead_code", "misuse_operator",
    "remote_suggestion_provider", "rename_variable", "select_dissimilar",
    "swap_comparison_operands",
]
