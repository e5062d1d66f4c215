"""Procedurally generated visual algorithmic puzzles with exact solvers."""

__version__ = "0.1.0"
