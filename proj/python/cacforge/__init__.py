"""Crosstalk avoidance codes: bus delay model, pattern classes, codebooks, codec and evaluation."""

from ._core import (
    RankTable,
    build,
    classic,
    classify,
    codebook_size,
    iolc,
    pattern_delay,
    recursion,
    seed_codebooks,
    worst_delay,
)

__all__ = [
    "RankTable",
    "build",
    "classic",
    "classify",
    "codebook_size",
    "iolc",
    "pattern_delay",
    "recursion",
    "seed_codebooks",
    "worst_delay",
]
