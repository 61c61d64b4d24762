"""Staged Schreier graphs of Z2*Z2*Z2*Z2: build, verify and measure."""

from ._core import (
    BudgetError,
    Build,
    Config,
    ConfigError,
    Graph,
    HolonomyError,
    InvariantError,
    build,
    cost_estimate,
    dihedral_demo,
    nth_word,
    report,
    verify,
    word_rank,
)

__all__ = [
    "BudgetError",
    "Build",
    "Config",
    "ConfigError",
    "Graph",
    "HolonomyError",
    "InvariantError",
    "build",
    "cost_estimate",
    "dihedral_demo",
    "nth_word",
    "report",
    "verify",
    "word_rank",
]
