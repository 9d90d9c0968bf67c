"""Randomized and accelerated Bregman-Kaczmarz solvers."""

from ._arbk import (
    ArbkError,
    LinearSystem,
    Potential,
    Problem,
    ThetaSchedule,
    __version__,
    compare,
    generate,
    soft_shrink,
    solve,
)

__all__ = [
    "ArbkError",
    "LinearSystem",
    "Potential",
    "Problem",
    "ThetaSchedule",
    "__version__",
    "compare",
    "generate",
    "soft_shrink",
    "solve",
]
