"""Iterated biography maps: trajectories, cycle structure, range verification.

Starting from a seed string, repeatedly taking the CV (or CLS) gives a
sequence that either hits a string with no biography within three steps or
runs forever and falls into a cycle. This module classifies seeds, computes
trajectories with an exact prefix/cycle split, and verifies over integer
ranges that every surviving seed lands in one of the known cycles.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from enum import Enum
from itertools import repeat
from typing import Any, Callable, Literal

from .biography import cls, cv
from .digits import NumbioError, canonical_key, count_vector, max_digit

MapKind = Literal["cv", "cls"]

_STEPS: dict[str, Callable[[str], str]] = {"cv": cv, "cls": cls}


def _step_for(kind: str) -> Callable[[str], str]:
    try:
        return _STEPS[kind]
    except KeyError:
        raise ValueError(f"unknown map kind {kind!r}") from None


class SeedNotInfinite(NumbioError):
    """The seed's iteration breaks down, so no trajectory exists."""


class StepBudgetExceeded(NumbioError):
    """No repeat was found within the allowed number of steps."""


class Verdict(str, Enum):
    """Whether a seed iterates forever, and if not, why it stops."""

    INFINITE = "infinite"
    CATEGORY1 = "category1"  # a digit occurs more than nine times
    CATEGORY2 = "category2"  # all ten digits occur equally often
    CATEGORY3 = "category3"  # multiplicities are exactly {0..9} with digit 9 present


@dataclass(frozen=True)
class SeedClassification:
    verdict: Verdict
    failure_depth: int | None  # first undefined iteration step; None when infinite

    @property
    def is_infinite(self) -> bool:
        return self.verdict is Verdict.INFINITE


_ZERO_TO_NINE = list(range(10))


def classify_seed(s: str) -> SeedClassification:
    """Decide whether iterating biographies from ``s`` can go on forever.

    The doomed seeds fall into three patterns, failing at step 1, 2 or 3:
    a digit repeated more than nine times; all ten digits present equally
    often; multiplicities forming exactly {0..9}. The third pattern is fatal
    only when digit 9 itself occurs: otherwise the next CV is shorter than
    ten positions and the iteration survives.
    """
    counts = count_vector(s)
    if max(counts) > 9:
        return SeedClassification(Verdict.CATEGORY1, 1)
    if min(counts) >= 1 and len(set(counts)) == 1:
        return SeedClassification(Verdict.CATEGORY2, 2)
    if counts[9] and sorted(counts) == _ZERO_TO_NINE:
        return SeedClassification(Verdict.CATEGORY3, 3)
    return SeedClassification(Verdict.INFINITE, None)


def height(s: str) -> int:
    """max(largest digit + 1, number of digits) of ``s``."""
    return max(max_digit(s) + 1, len(s))


def canonical_cycle(members: "list[str] | tuple[str, ...]") -> tuple[str, ...]:
    """Rotate a cycle so its smallest member (by length, then lex) comes first."""
    pivot = min(range(len(members)), key=lambda i: canonical_key(members[i]))
    return tuple(members[pivot:]) + tuple(members[:pivot])


@dataclass(frozen=True)
class Trajectory:
    """Pre-periodic prefix and cycle of an iterated biography sequence.

    The prefix starts with the seed and lists the strings visited before the
    cycle; the cycle is stored in canonical rotation, so trajectories that
    enter the same loop at different points compare equal on it.
    """

    map_kind: MapKind
    seed: str
    prefix: tuple[str, ...]
    cycle: tuple[str, ...]

    def as_dict(self) -> dict[str, Any]:
        return {
            "map": self.map_kind,
            "seed": self.seed,
            "prefix": list(self.prefix),
            "cycle": list(self.cycle),
        }


def trajectory(map_kind: MapKind, seed: str, max_steps: int = 1000) -> Trajectory:
    """Iterate from ``seed`` until a repeat and split prefix from cycle."""
    fate = classify_seed(seed)
    if not fate.is_infinite:
        raise SeedNotInfinite(
            f"seed {seed} is {fate.verdict.value}: iteration fails at step {fate.failure_depth}"
        )
    step = _step_for(map_kind)
    seen = {seed: 0}
    seq = [seed]
    for _ in range(max_steps):
        nxt = step(seq[-1])
        at = seen.get(nxt)
        if at is not None:
            return Trajectory(map_kind, seed, tuple(seq[:at]), canonical_cycle(seq[at:]))
        seen[nxt] = len(seq)
        seq.append(nxt)
    raise StepBudgetExceeded(f"no repeat within {max_steps} steps from seed {seed}")


def cv_trajectory(seed: str, max_steps: int = 1000) -> Trajectory:
    return trajectory("cv", seed, max_steps)


def cls_trajectory(seed: str, max_steps: int = 1000) -> Trajectory:
    return trajectory("cls", seed, max_steps)


# The cycles every surviving seed is expected to reach, in canonical rotation.
CV_TWO_CYCLE = canonical_cycle(("12", "011"))
CV_SIX_CYCLE = canonical_cycle(("22", "002", "201", "111", "03", "1001"))
CLS_TWO_CYCLE = canonical_cycle(("6300000100", "7101001000"))

KNOWN_CYCLES: dict[str, frozenset[tuple[str, ...]]] = {
    "cv": frozenset({CV_TWO_CYCLE, CV_SIX_CYCLE}),
    "cls": frozenset({CLS_TWO_CYCLE}),
}


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of iterating every seed in an integer range to its cycle."""

    map_kind: MapKind
    lo: int
    hi: int
    checked: int
    skipped: int
    cycle_histogram: dict[tuple[str, ...], int]
    max_prefix: int
    counterexamples: tuple[str, ...]

    def conforms(self, expected: frozenset[tuple[str, ...]] | None = None) -> bool:
        """True when no seed escaped and every cycle seen was expected."""
        if expected is None:
            expected = KNOWN_CYCLES[self.map_kind]
        return not self.counterexamples and set(self.cycle_histogram) <= set(expected)

    def as_dict(self) -> dict[str, Any]:
        ordered = sorted(
            self.cycle_histogram, key=lambda members: [canonical_key(m) for m in members]
        )
        return {
            "map": self.map_kind,
            "lo": self.lo,
            "hi": self.hi,
            "checked": self.checked,
            "skipped": self.skipped,
            "cycles": [
                {"members": list(members), "absorbed": self.cycle_histogram[members]}
                for members in ordered
            ],
            "max_prefix": self.max_prefix,
            "counterexamples": list(self.counterexamples),
        }


def _resolve(
    start: str,
    step: Callable[[str], str],
    resolved: dict[str, tuple[tuple[str, ...], int]],
) -> tuple[tuple[str, ...], int]:
    """Canonical cycle and distance to it for ``start``, memoizing the walk.

    The start node itself is left out of the memo unless it lies on the
    cycle: range seeds are each visited once, and skipping them keeps the
    memo bounded by the small post-step state space even for huge ranges.
    """
    known = resolved.get(start)
    if known is not None:
        return known
    path = [start]
    index = {start: 0}
    while True:
        nxt = step(path[-1])
        known = resolved.get(nxt)
        if known is not None:
            cycle_, base = known
            cut = len(path)  # every path node is pre-periodic
            break
        at = index.get(nxt)
        if at is not None:
            cycle_ = canonical_cycle(path[at:])
            base = 0
            cut = at  # path[cut:] are the cycle members
            break
        index[nxt] = len(path)
        path.append(nxt)
    for j, node in enumerate(path):
        if j >= cut:
            resolved[node] = (cycle_, 0)
        elif j > 0:
            resolved[node] = (cycle_, base + cut - j)
    return cycle_, (base + cut if cut else 0)


def _split_range(lo: int, hi: int, parts: int) -> list[tuple[int, int]]:
    size = hi - lo + 1
    parts = max(1, min(parts, size))
    chunk = size // parts
    extra = size % parts
    bounds = []
    start = lo
    for i in range(parts):
        stop = start + chunk - 1 + (1 if i < extra else 0)
        bounds.append((start, stop))
        start = stop + 1
    return bounds


def _verify_chunk(
    map_kind: MapKind, lo: int, hi: int, max_steps: int, collect_rows: bool
) -> tuple[VerificationReport, "list[tuple[str, int, str]] | None"]:
    step = _step_for(map_kind)
    resolved: dict[str, tuple[tuple[str, ...], int]] = {}
    histogram: dict[tuple[str, ...], int] = {}
    skipped = 0
    max_prefix = 0
    counterexamples: list[str] = []
    rows: list[tuple[str, int, str]] | None = [] if collect_rows else None
    for n in range(lo, hi + 1):
        seed = str(n)
        if not classify_seed(seed).is_infinite:
            skipped += 1
            continue
        cycle_, dist = _resolve(seed, step, resolved)
        if dist + len(cycle_) > max_steps:
            # The plain walk would not see a repeat within the budget.
            counterexamples.append(seed)
            if rows is not None:
                rows.append((seed, -1, ""))
            continue
        histogram[cycle_] = histogram.get(cycle_, 0) + 1
        if dist > max_prefix:
            max_prefix = dist
        if rows is not None:
            rows.append((seed, dist, cycle_[0]))
    report = VerificationReport(
        map_kind=map_kind,
        lo=lo,
        hi=hi,
        checked=(hi - lo + 1) - skipped,
        skipped=skipped,
        cycle_histogram=histogram,
        max_prefix=max_prefix,
        counterexamples=tuple(counterexamples),
    )
    return report, rows


def _merge_reports(parts: list[VerificationReport]) -> VerificationReport:
    histogram: dict[tuple[str, ...], int] = {}
    counterexamples: list[str] = []
    checked = skipped = max_prefix = 0
    for part in parts:
        for cycle_, n in part.cycle_histogram.items():
            histogram[cycle_] = histogram.get(cycle_, 0) + n
        counterexamples.extend(part.counterexamples)
        checked += part.checked
        skipped += part.skipped
        max_prefix = max(max_prefix, part.max_prefix)
    return VerificationReport(
        map_kind=parts[0].map_kind,
        lo=parts[0].lo,
        hi=parts[-1].hi,
        checked=checked,
        skipped=skipped,
        cycle_histogram=histogram,
        max_prefix=max_prefix,
        counterexamples=tuple(counterexamples),
    )


def _run_chunks(
    map_kind: MapKind, lo: int, hi: int, max_steps: int, jobs: int, collect_rows: bool
) -> list[tuple[VerificationReport, "list[tuple[str, int, str]] | None"]]:
    if lo < 0 or lo > hi:
        raise ValueError(f"invalid range [{lo}, {hi}]")
    if max_steps < 1:
        raise ValueError("max_steps must be positive")
    bounds = _split_range(lo, hi, jobs)
    if len(bounds) == 1:
        return [_verify_chunk(map_kind, lo, hi, max_steps, collect_rows)]
    los, his = zip(*bounds)
    with ProcessPoolExecutor(max_workers=len(bounds)) as pool:
        return list(
            pool.map(
                _verify_chunk,
                repeat(map_kind),
                los,
                his,
                repeat(max_steps),
                repeat(collect_rows),
            )
        )


def verify_cycles(
    map_kind: MapKind, lo: int, hi: int, max_steps: int = 1000, jobs: int = 1
) -> VerificationReport:
    """Iterate every seed in [lo, hi] and histogram the cycles reached.

    Seeds whose iteration breaks down are counted as skipped; seeds that find
    no repeat within ``max_steps`` become counterexample entries rather than
    errors. The merged result is identical for any ``jobs``.
    """
    parts = _run_chunks(map_kind, lo, hi, max_steps, jobs, collect_rows=False)
    return _merge_reports([report for report, _ in parts])


def verify_cv_cycles(lo: int, hi: int, max_steps: int = 1000, jobs: int = 1) -> VerificationReport:
    return verify_cycles("cv", lo, hi, max_steps, jobs)


def verify_cls_cycles(lo: int, hi: int, max_steps: int = 1000, jobs: int = 1) -> VerificationReport:
    return verify_cycles("cls", lo, hi, max_steps, jobs)


def verification_rows(
    map_kind: MapKind, lo: int, hi: int, max_steps: int = 1000, jobs: int = 1
) -> list[tuple[str, int, str]]:
    """Per-seed (seed, prefix_len, cycle_id) rows for every surviving seed.

    cycle_id is the canonical cycle's first member; a seed over the step
    budget gets prefix_len -1 and an empty cycle_id.
    """
    parts = _run_chunks(map_kind, lo, hi, max_steps, jobs, collect_rows=True)
    rows: list[tuple[str, int, str]] = []
    for _, chunk_rows in parts:
        rows.extend(chunk_rows or [])
    return rows


def check_repdigit_bound(seed: str, max_steps: int = 1000) -> bool:
    """From step 3 on, any all-same-digit CV in the trajectory has length <= 5."""
    t = cv_trajectory(seed, max_steps)
    for k, x in enumerate(t.prefix):
        if k > 2 and len(set(x)) == 1 and len(x) > 5:
            return False
    return all(not (len(set(x)) == 1 and len(x) > 5) for x in t.cycle)


def check_height_descent(seed: str, max_steps: int = 1000) -> bool:
    """Heights above 5 never rise from step 3 on, and some height drops below 6."""
    t = cv_trajectory(seed, max_steps)
    transitions: list[tuple[str, str]] = []
    for k in range(len(t.prefix) - 1):
        if k > 2:
            transitions.append((t.prefix[k], t.prefix[k + 1]))
    if t.prefix and len(t.prefix) - 1 > 2:
        # The hand-off into the cycle; recompute since the stored cycle is rotated.
        transitions.append((t.prefix[-1], cv(t.prefix[-1])))
    n_cycle = len(t.cycle)
    for i, x in enumerate(t.cycle):
        transitions.append((x, t.cycle[(i + 1) % n_cycle]))
    if not all(height(b) <= height(a) for a, b in transitions if height(a) > 5):
        return False
    return any(height(x) < 6 for x in t.prefix + t.cycle)


def check_cls_zeroes(seed: str, max_steps: int = 1000) -> bool:
    """From step 4 on a CLS has at least six zeros; from step 5 its first digit is >= 6."""
    t = cls_trajectory(seed, max_steps)
    for k, x in enumerate(t.prefix):
        if k > 3 and x.count("0") < 6:
            return False
        if k > 4 and int(x[0]) < 6:
            return False
    return all(x.count("0") >= 6 and int(x[0]) >= 6 for x in t.cycle)
