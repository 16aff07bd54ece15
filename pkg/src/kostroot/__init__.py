"""Exact root-system combinatorics for Kostant root systems of Lie superalgebras."""

from .rootsys import (
    AlgebraSpec,
    AlgebraSpecError,
    Root,
    RootSystem,
    build,
    build_root_system,
    parse_algebra,
)

__all__ = [
    "AlgebraSpec",
    "AlgebraSpecError",
    "Root",
    "RootSystem",
    "build",
    "build_root_system",
    "parse_algebra",
]
