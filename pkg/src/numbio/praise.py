"""Mutually-praising pairs: two distinct strings, each a biography of the other."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Iterator

from .biography import is_biography
from .digits import (
    DIGITS,
    canonical_key,
    count_vector,
    digit_sum,
    is_biographable,
    is_legitimate,
    max_digit,
)


def is_mutually_praising(a: str, b: str) -> bool:
    """True when ``a`` and ``b`` are distinct biographies of each other."""
    return a != b and is_biography(a, b) and is_biography(b, a)


@dataclass(frozen=True)
class PraisingPair:
    """Unordered pair of mutual biographies; ``a`` is the smaller member."""

    a: str
    b: str

    @property
    def both_legitimate(self) -> bool:
        return is_legitimate(self.a) and is_legitimate(self.b)

    def as_dict(self) -> dict[str, Any]:
        return {"a": self.a, "b": self.b, "both_legitimate": self.both_legitimate}


def _pair(x: str, y: str) -> PraisingPair:
    a, b = sorted((x, y), key=canonical_key)
    return PraisingPair(a, b)


def _pair_sort_key(pair: PraisingPair) -> tuple[tuple[int, str], tuple[int, str]]:
    return (canonical_key(pair.a), canonical_key(pair.b))


def _candidate_subjects(max_len: int = 10, max_sum: int = 10) -> Iterator[str]:
    # Every digit string of length <= max_len whose digit sum is 1..max_sum.
    # A member of a praising pair must have digit sum equal to its partner's
    # length, so nothing with a larger sum can ever qualify.
    stack = [("", 0)]
    while stack:
        prefix, used = stack.pop()
        if prefix and used:
            yield prefix
        if len(prefix) < max_len:
            for value in range(min(9, max_sum - used), -1, -1):
                stack.append((prefix + DIGITS[value], used + value))


def find_praising_pairs() -> list[PraisingPair]:
    """Every mutually-praising pair with members up to 10 digits long.

    For each candidate subject ``b`` there is at most one possible partner:
    a biography of ``b`` must spell b's digit counts, and the reverse
    direction pins its length to the digit sum of ``b``. Checking that one
    string both ways settles the pair.
    """
    found: set[PraisingPair] = set()
    for b in _candidate_subjects():
        counts = count_vector(b)
        if not is_biographable(counts):
            continue
        length = digit_sum(b)  # the partner's length, if a partner exists
        if not (max_digit(b) + 1 <= length <= 10):
            continue
        a = "".join(DIGITS[c] for c in counts[:length])
        if a != b and is_biography(b, a):
            found.add(_pair(a, b))
    return sorted(found, key=_pair_sort_key)


@dataclass(frozen=True)
class PraiseProperties:
    """Results of the two structural checks on fully legitimate pairs.

    members_all_have_zeros:  every member of a legitimate pair contains a 0
    some_member_ends_in_zero: in every legitimate pair, a member ends in 0
    """

    members_all_have_zeros: bool
    zero_violations: tuple[PraisingPair, ...]
    some_member_ends_in_zero: bool
    ending_violations: tuple[PraisingPair, ...]

    @property
    def all_pass(self) -> bool:
        return self.members_all_have_zeros and self.some_member_ends_in_zero


def check_praise_properties(pairs: list[PraisingPair]) -> PraiseProperties:
    """Check both structural facts over every pair whose members are numbers."""
    legit = [p for p in pairs if p.both_legitimate]
    zero_bad = tuple(p for p in legit if "0" not in p.a or "0" not in p.b)
    end_bad = tuple(p for p in legit if not (p.a.endswith("0") or p.b.endswith("0")))
    return PraiseProperties(
        members_all_have_zeros=not zero_bad,
        zero_violations=zero_bad,
        some_member_ends_in_zero=not end_bad,
        ending_violations=end_bad,
    )
