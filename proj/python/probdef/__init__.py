"""Tight-interval entailment over probabilistic default theories."""

from ._probdef import (
    Interval,
    ProbdefError,
    Theory,
    entail,
    explain,
    satisfiable,
    sigma_consistent,
    z_partition,
)

SEMANTICS = ("zero", "one", "z", "lex", "ce")

__all__ = [
    "Interval",
    "ProbdefError",
    "SEMANTICS",
    "Theory",
    "entail",
    "explain",
    "satisfiable",
    "sigma_consistent",
    "z_partition",
]
