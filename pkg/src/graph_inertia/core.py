"""Shared primitives: exact rational parsing, inertia triples, error types."""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

__all__ = ["GraphError", "ParseError", "Inertia", "parse_rational"]


class GraphError(ValueError):
    """An operation or constructor was handed a graph it cannot accept."""


class ParseError(GraphError):
    """Malformed textual input; carries the 1-based line number when known."""

    def __init__(self, message: str, line: int | None = None) -> None:
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


_RATIONAL = re.compile(r"[+-]?\d+(?:/[1-9]\d*)?")


def parse_rational(text: str) -> Fraction:
    """Parse an ``int`` or ``int/int`` literal into an exact Fraction.

    Floats, empty strings and zero denominators are rejected.
    """
    if not _RATIONAL.fullmatch(text):
        raise ValueError(f"not an integer or integer ratio: {text!r}")
    return Fraction(text)


@dataclass(frozen=True)
class Inertia:
    """Counts of positive, negative and zero eigenvalues of a symmetric matrix.

    For a graph this is taken over its weighted adjacency matrix, so
    ``pos + neg + zero`` equals the number of vertices.
    """

    pos: int
    neg: int
    zero: int

    def __add__(self, other: "Inertia") -> "Inertia":
        return Inertia(self.pos + other.pos, self.neg + other.neg, self.zero + other.zero)

    @property
    def pn(self) -> tuple[int, int]:
        """The (positive, negative) pair, which decompositions track exactly."""
        return (self.pos, self.neg)

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.pos, self.neg, self.zero)

    def __str__(self) -> str:
        return f"(i+={self.pos}, i-={self.neg}, i0={self.zero})"
