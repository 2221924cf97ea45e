"""Acceptance suite: one test per criterion, each printing a PASS line.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the per-criterion
lines alongside pytest's own verdicts.
"""

import json
import random
import time

from numbio import (
    CLS_TWO_CYCLE,
    CV_SIX_CYCLE,
    CV_TWO_CYCLE,
    biographies,
    check_cls_zeroes,
    check_height_descent,
    check_praise_properties,
    check_repdigit_bound,
    classify_seed,
    cls,
    count_vector,
    cv,
    digit_sum,
    enumerate_autobiographical,
    is_biographable,
    is_biography,
    max_digit,
)
from numbio.cli import run
from oracles import (
    failure_depth_by_iteration,
    naive_autobiographical_scan,
    praising_pairs_by_scan,
)

EXPECTED_CATALOG = [
    "1210",
    "2020",
    "21200",
    "3211000",
    "42101000",
    "521001000",
    "6210001000",
]


def _cli_json(capsys, *argv):
    code = run(list(argv))
    out = capsys.readouterr().out
    assert code == 0
    return json.loads(out)


def test_criterion_1_enumeration_and_naive_scan(capsys):
    started = time.perf_counter()
    code = run(["autobio", "--enumerate"])
    elapsed_search = time.perf_counter() - started
    out = capsys.readouterr().out
    assert code == 0
    assert out.splitlines() == EXPECTED_CATALOG
    assert elapsed_search < 1.0

    started = time.perf_counter()
    scanned = naive_autobiographical_scan(max_len=7)
    elapsed_scan = time.perf_counter() - started
    assert scanned == EXPECTED_CATALOG[:4]
    assert elapsed_scan < 60.0
    print(
        f"PASS criterion 1: catalogue of 7 in {elapsed_search:.2f}s, "
        f"naive scan found first 4 in {elapsed_scan:.1f}s"
    )


def test_criterion_2_cv_verification_to_100k(capsys):
    started = time.perf_counter()
    data = _cli_json(
        capsys, "verify-cv", "--from", "0", "--to", "100000", "--format", "json"
    )
    elapsed = time.perf_counter() - started
    assert data["counterexamples"] == []
    cycles = {tuple(entry["members"]) for entry in data["cycles"]}
    assert cycles == {CV_TWO_CYCLE, CV_SIX_CYCLE}
    assert data["checked"] + data["skipped"] == 100001
    assert elapsed < 30.0
    print(f"PASS criterion 2: verify-cv 0..100000 in {elapsed:.1f}s, both cycles, no escapes")


def test_criterion_3_cls_verification_to_100k(capsys):
    started = time.perf_counter()
    data = _cli_json(
        capsys, "verify-cls", "--from", "0", "--to", "100000", "--format", "json"
    )
    elapsed = time.perf_counter() - started
    assert data["counterexamples"] == []
    cycles = {tuple(entry["members"]) for entry in data["cycles"]}
    assert cycles == {CLS_TWO_CYCLE}
    assert elapsed < 30.0
    print(f"PASS criterion 3: verify-cls 0..100000 in {elapsed:.1f}s, single cycle, no escapes")


def test_criterion_4_trajectories_of_zero(capsys):
    data = _cli_json(capsys, "cv-seq", "0", "--format", "json")
    assert data["prefix"] == ["0", "1", "01", "11", "02", "101"]
    assert data["cycle"] == ["12", "011"]
    data = _cli_json(capsys, "cls-seq", "0", "--format", "json")
    assert data["prefix"] == [
        "0",
        "1000000000",
        "9100000000",
        "8100000001",
        "7200000010",
        "7110000100",
    ]
    assert data["cycle"] == ["6300000100", "7101001000"]
    print("PASS criterion 4: both trajectories of 0 match exactly")


def test_criterion_5_classifier_agrees_with_iteration():
    rng = random.Random(73003)
    seeds = [
        "".join(rng.choice("0123456789") for _ in range(rng.randint(1, 12)))
        for _ in range(2000)
    ]
    seeds += [d * length for d in "0123456789" for length in (10, 11, 12)]
    seeds += ["0123456789", "0123456789" * 2, "0123456789" * 3]
    seeds += ["".join(str(d) * d for d in range(1, 10))]
    for seed in seeds:
        assert classify_seed(seed).failure_depth == failure_depth_by_iteration(seed), seed
    print(f"PASS criterion 5: classifier matches the iteration oracle on {len(seeds)} seeds")


def test_criterion_6_trajectory_properties_to_10k():
    checked = 0
    for n in range(10001):
        seed = str(n)
        if not classify_seed(seed).is_infinite:
            continue
        assert check_repdigit_bound(seed), seed
        assert check_height_descent(seed), seed
        assert check_cls_zeroes(seed), seed
        checked += 1
    assert checked == 10001
    print(f"PASS criterion 6: repdigit, height and zero-count properties on {checked} seeds")


def test_criterion_7_praising_pairs(capsys, all_pairs):
    started = time.perf_counter()
    data = _cli_json(capsys, "praise", "--find", "--format", "json")
    pairs = {(p["a"], p["b"]) for p in data["pairs"]}
    assert ("130", "1101") in pairs
    assert ("2210", "11200") in pairs
    assert ("6300000100", "7101001000") in pairs

    small = {(a, b) for a, b in pairs if len(a) <= 6 and len(b) <= 6}
    assert small == praising_pairs_by_scan(max_len=6)

    assert {(p.a, p.b) for p in all_pairs} == pairs
    legit = [p for p in all_pairs if p.both_legitimate]
    report = check_praise_properties(all_pairs)
    assert report.all_pass
    elapsed = time.perf_counter() - started
    assert elapsed < 60.0
    print(
        f"PASS criterion 7: {len(pairs)} pairs ({len(legit)} legitimate), scan-equal on "
        f"length<=6, both exercises hold, {elapsed:.1f}s"
    )


def test_criterion_8_biography_algebra_bulk():
    rng = random.Random(615243)
    produced = 0
    while produced < 10000:
        length = rng.randint(1, 30)
        n = "".join(rng.choice("0123456789") for _ in range(length))
        if not is_biographable(count_vector(n)):
            continue
        produced += 1
        shortest = cv(n)
        longest = cls(n)
        every = biographies(n)
        assert is_biography(shortest, n)
        assert is_biography(longest, n)
        assert len(shortest) == max_digit(n) + 1
        assert longest.startswith(shortest)
        assert len(every) == 11 - len(shortest)
        for m in every:
            assert digit_sum(m) == len(n)
    print("PASS criterion 8: biography algebra on 10000 random biographable strings")
