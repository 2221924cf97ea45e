"""Digit strings and their count vectors.

A digit string is a non-empty sequence of base-10 digits kept as a plain
``str`` so that leading zeros survive: "011" and "11" are different strings.
The count vector of a string is the 10-tuple whose entry i says how many
times digit i occurs. Counts are plain ints and may exceed 9, since strings
can be arbitrarily long.

All functions here are pure and never mutate their inputs.
"""

from __future__ import annotations

DIGITS = "0123456789"

CountVector = tuple[int, ...]


class NumbioError(Exception):
    """Base class for the domain errors raised by this package."""


class InvalidDigitError(NumbioError, ValueError):
    """A character outside 0-9 appeared where a digit string was expected."""


class EmptyInputError(NumbioError, ValueError):
    """A digit string must contain at least one digit."""


def parse(text: str) -> str:
    """Validate ``text`` as a digit string and return it unchanged.

    Leading zeros are significant and preserved exactly.
    """
    if not text:
        raise EmptyInputError("empty digit string")
    if not (text.isascii() and text.isdigit()):
        bad = next(ch for ch in text if ch not in DIGITS)
        raise InvalidDigitError(f"invalid digit {bad!r} in {text!r}")
    return text


def count_vector(s: str) -> CountVector:
    """The ten digit multiplicities of ``s``, indexed by digit value."""
    return tuple(s.count(ch) for ch in DIGITS)


def max_digit(s: str) -> int:
    """Largest digit value occurring in ``s``."""
    return int(max(s))


def digit_sum(s: str) -> int:
    """Sum of the digits of ``s``."""
    return sum(map(int, s))


def is_legitimate(s: str) -> bool:
    """True when ``s`` is a genuine number, i.e. does not start with zero."""
    return s[0] != "0"


def is_biographable(counts: CountVector) -> bool:
    """True when every multiplicity fits into a single digit (at most 9)."""
    return max(counts) <= 9


def canonical_key(s: str) -> tuple[int, str]:
    """Sort key ordering digit strings by length, then lexicographically."""
    return (len(s), s)
