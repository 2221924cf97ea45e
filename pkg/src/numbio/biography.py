"""The biography relation on digit strings and its two distinguished forms.

A biography of ``n`` is a digit string whose position-i digit equals the
number of occurrences of digit i in ``n``. The shortest one (``cv``) stops
at the largest digit of ``n``; the longest one (``cls``) always spells all
ten positions. Everything in between differs only by trailing zeros.
"""

from __future__ import annotations

from .digits import DIGITS, CountVector, NumbioError, count_vector, max_digit


class BiographyFailure(NumbioError):
    """No biography exists: some digit occurs more than nine times."""

    def __init__(self, digit: int, multiplicity: int):
        super().__init__(f"digit {digit} occurs {multiplicity} times")
        self.digit = digit
        self.multiplicity = multiplicity


def _checked_counts(s: str) -> CountVector:
    counts = count_vector(s)
    for digit, mult in enumerate(counts):
        if mult > 9:
            raise BiographyFailure(digit, mult)
    return counts


def is_biography(m: str, n: str) -> bool:
    """True when ``m`` records the digit counts of ``n``.

    Position i of ``m`` must equal the number of occurrences of digit i in
    ``n``, and every digit of ``n`` must lie below ``len(m)`` so that nothing
    is left untallied. No biography can have more than 10 positions: an
    eleventh would tally a digit that cannot exist.
    """
    if len(m) > 10:
        return False
    counts = count_vector(n)
    if any(counts[i] for i in range(len(m), 10)):
        return False
    return all(int(m[i]) == counts[i] for i in range(len(m)))


def cv(n: str) -> str:
    """Shortest biography of ``n``: one position per digit value up to the largest.

    A CV may start with zero (when ``n`` has no zeros); it is a digit string,
    not necessarily a legitimate number.
    """
    counts = _checked_counts(n)
    return "".join(DIGITS[c] for c in counts[: max_digit(n) + 1])


def cls(n: str) -> str:
    """Longest biography of ``n``: all ten positions, trailing zero counts included."""
    counts = _checked_counts(n)
    return "".join(DIGITS[c] for c in counts)


def biographies(n: str) -> list[str]:
    """Every biography of ``n``, shortest first.

    These are exactly the prefixes of ``cls(n)`` long enough to cover the
    largest digit of ``n``, so there are ``11 - len(cv(n))`` of them.
    """
    full = cls(n)
    return [full[:length] for length in range(max_digit(n) + 1, 11)]
