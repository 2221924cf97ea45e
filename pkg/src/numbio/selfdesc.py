"""Autobiographical (self-descriptive) numbers.

A number is autobiographical when it is one of its own biographies: digit i
counts the occurrences of digit i in the number itself. There are exactly
seven of them in base 10; ``enumerate_autobiographical`` finds them all.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .biography import is_biography
from .digits import canonical_key, digit_sum, is_legitimate


def is_autobiographical(n: str) -> bool:
    """True when ``n`` is a legitimate number and a biography of itself."""
    return is_legitimate(n) and is_biography(n, n)


def _candidate_vectors(length: int) -> Iterator[tuple[int, ...]]:
    # Digit-count tuples (c0..c_{length-1}) with c0 >= 1 and sum == length.
    # A self-describing string must read as such a tuple: its digit sum
    # equals its length, and legitimacy forces at least one zero, hence a
    # nonzero leading count.
    def extend(prefix: tuple[int, ...], remaining: int) -> Iterator[tuple[int, ...]]:
        position = len(prefix)
        if position == length:
            if remaining == 0:
                yield prefix
            return
        if remaining > 9 * (length - position):
            return
        lowest = 1 if position == 0 else 0
        for value in range(lowest, min(9, remaining) + 1):
            yield from extend(prefix + (value,), remaining - value)

    yield from extend((), length)


def enumerate_autobiographical() -> list[str]:
    """All autobiographical numbers, ordered by length then lexicographically.

    The candidate space is pruned to count vectors that sum to their own
    length, but membership is always decided by ``is_autobiographical``, so
    a pruning mistake could only cost time, never a member.
    """
    members = []
    for length in range(1, 11):
        for vec in _candidate_vectors(length):
            candidate = "".join(str(v) for v in vec)
            if is_autobiographical(candidate):
                members.append(candidate)
    members.sort(key=canonical_key)
    return members


@dataclass(frozen=True)
class StructuralFacts:
    """Which structural facts hold across a catalogue of autobiographical numbers.

    digit_sum_equals_length: each member's digit sum equals its length
    leading_count_nonzero:   each member starts with a nonzero digit
    tail_is_one_two_and_ones: past the first digit, the nonzero digits of a
        member are exactly one 2 plus any number of 1s
    at_most_two_ones:        each member contains 0, 1 or 2 ones
    """

    digit_sum_equals_length: bool
    leading_count_nonzero: bool
    tail_is_one_two_and_ones: bool
    at_most_two_ones: bool

    @property
    def all_pass(self) -> bool:
        return (
            self.digit_sum_equals_length
            and self.leading_count_nonzero
            and self.tail_is_one_two_and_ones
            and self.at_most_two_ones
        )


def _tail_shape(m: str) -> bool:
    rest = [int(ch) for ch in m[1:] if ch != "0"]
    return rest.count(2) == 1 and all(v in (1, 2) for v in rest)


def check_structural_facts(members: list[str]) -> StructuralFacts:
    """Check the four structural facts against every catalogue member."""
    return StructuralFacts(
        digit_sum_equals_length=all(digit_sum(m) == len(m) for m in members),
        leading_count_nonzero=all(m[0] != "0" for m in members),
        tail_is_one_two_and_ones=all(_tail_shape(m) for m in members),
        at_most_two_ones=all(m.count("1") in (0, 1, 2) for m in members),
    )
