"""Exit criteria. Each test prints one ``PASS``/``FAIL`` line, then asserts.

Run alone with ``pytest tests/test_acceptance.py -s`` to see the lines
inline; without ``-s`` they are still emitted (capture is bypassed).
"""

import math
import random
import time
from pathlib import Path

import pytest

from arithmos.classify import power_count
from arithmos.commensurability import (
    Commensurable,
    Irrational,
    LineKind,
    RationalInteger,
    Surd,
    classify_line,
    decide_rationality,
    partition_audit,
    surd_ratio_commensurable,
)
from arithmos.euclid import Ratio, are_relatively_prime, coprime_power_lemma, mul_repeated, reduce
from arithmos.oracle import oracle_root_rational, oracle_surd_ratio, root_witnesses
from arithmos.proof import build_trace, replay

GOLDEN = Path(__file__).parent / "golden"

SWEEP_N = 10**4
ROOT_Q_BOUND = 10**3
X9_MAX = 300
X9_BOUND = 10**3
TIME_LIMIT_S = 60.0


@pytest.fixture
def report(capsys):
    def _report(criterion, ok, detail):
        with capsys.disabled():
            print(f"\nACCEPTANCE {criterion}: {'PASS' if ok else 'FAIL'} - {detail}")
        assert ok, detail

    return _report


@pytest.mark.parametrize("e", [2, 3])
def test_c1_equivalence2_sweep(report, e):
    start = time.perf_counter()
    mismatches = []
    for n in range(1, SWEEP_N + 1):
        decided = isinstance(decide_rationality(Surd(n, e)), RationalInteger)
        found = bool(oracle_root_rational(n, e, ROOT_Q_BOUND))
        if decided != found:
            mismatches.append(n)
    elapsed = time.perf_counter() - start
    report(
        f"1 (degree {e})",
        not mismatches and elapsed < TIME_LIMIT_S,
        f"n<={SWEEP_N}, q<={ROOT_Q_BOUND}: {len(mismatches)} mismatches in {elapsed:.1f}s (limit {TIME_LIMIT_S:.0f}s)",
    )


def test_c2_theodorus_range(report):
    powers = {n for n in range(2, 18) if classify_line(Surd(n, 2)) is LineKind.POWER}
    lengths = {n for n in range(2, 18) if classify_line(Surd(n, 2)) is LineKind.LENGTH}
    ok = powers == {2, 3, 5, 6, 7, 8, 10, 11, 12, 13, 14, 15, 17} and lengths == {4, 9, 16}
    report("2", ok, f"Power on {sorted(powers)}, Length on {sorted(lengths)}")


def test_c3_coprime_powers_exhaustive(report):
    violations = 0
    for a in range(1, 501):
        for b in range(1, 501):
            base = math.gcd(a, b) == 1
            for e in (2, 3):
                if coprime_power_lemma(a, b, e) != base:
                    violations += 1
    report("3", violations == 0, f"a, b <= 500 at degrees 2 and 3: {violations} violations")


def test_c4_reduction_witnesses(report):
    failures = 0
    for a in range(1, 501):
        for b in range(1, 501):
            w = reduce(Ratio(a, b))
            r = w.reduced
            if not (
                are_relatively_prime(r.num, r.den)
                and r.num * w.num_factor == a
                and r.den * w.den_factor == b
                and w.num_factor == w.den_factor
            ):
                failures += 1
    report("4", failures == 0, f"a, b <= 500: {failures} bad witnesses")


def test_c5_pappus_gap(report):
    gap = partition_audit(8, 2)
    no_gap = partition_audit(2, 3)
    ok = (
        gap.gap
        and isinstance(gap.verdict, Commensurable)
        and gap.verdict.ratio.same_terms(Ratio(2, 1))
        and not no_gap.gap
    )
    report("5", ok, f"audit(8,2) gap={gap.gap} ratio={getattr(gap.verdict, 'ratio', None)}; audit(2,3) gap={no_gap.gap}")


def test_c6_x9_sweep(report):
    mismatches, bad_identity = [], []
    for a in range(1, X9_MAX + 1):
        for b in range(1, X9_MAX + 1):
            verdict = surd_ratio_commensurable(a, b)
            oracle = oracle_surd_ratio(a, b, X9_BOUND)
            if isinstance(verdict, Commensurable):
                p, q = verdict.ratio.as_tuple()
                if a * q * q != b * p * p:
                    bad_identity.append((a, b))
            if isinstance(verdict, Commensurable) != bool(oracle):
                mismatches.append((a, b))
    report(
        "6",
        not mismatches and not bad_identity,
        f"a, b <= {X9_MAX}, bound {X9_BOUND}: {len(mismatches)} mismatches, {len(bad_identity)} identity failures",
    )


def test_c7_trace_replay(report):
    rng = random.Random(148)
    candidates = [n for n in range(2, SWEEP_N + 1) if math.isqrt(n) ** 2 != n]
    sample = rng.sample(candidates, 100)
    failures = []
    for n in sample:
        verdict = decide_rationality(Surd(n, 2))
        try:
            outcome = replay(verdict.trace)
            if not (isinstance(verdict, Irrational) and outcome.contradiction):
                failures.append(n)
        except Exception:
            failures.append(n)
    golden_ok = (
        build_trace(2, 2).to_text() == (GOLDEN / "trace_sqrt2.txt").read_text()
        and build_trace(2, 2).to_json() == (GOLDEN / "trace_sqrt2.json").read_text()
    )
    report("7", not failures and golden_ok, f"{len(sample)} traces, {len(failures)} replay failures; golden n=2 match={golden_ok}")


def test_c8_lowest_terms_denominator(report):
    offenders, with_witness = [], 0
    for n in range(1, SWEEP_N + 1):
        for p, q in root_witnesses(n, 2, ROOT_Q_BOUND):
            if math.gcd(p, q) == 1:
                with_witness += 1
                if q != 1:
                    offenders.append((n, p, q))
    report(
        "8",
        not offenders,
        f"n<={SWEEP_N}, q<={ROOT_Q_BOUND}: {with_witness} lowest-terms witnesses, {len(offenders)} with q != 1",
    )


def test_c9_commutativity_and_counting(report):
    non_commuting = [(m, n) for m in range(1, 201) for n in range(1, 201) if mul_repeated(m, n) != mul_repeated(n, m)]
    squares = {k * k for k in range(1, 101)}
    count_errors, running = [], 0
    for m in range(1, SWEEP_N + 1):
        running += m not in squares
        if power_count(m) != running or power_count(m) != m - math.isqrt(m):
            count_errors.append(m)
    report(
        "9",
        not non_commuting and not count_errors,
        f"{len(non_commuting)} non-commuting pairs (m, n <= 200); {len(count_errors)} power_count errors (max <= {SWEEP_N})",
    )
