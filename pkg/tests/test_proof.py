import dataclasses
import json
from pathlib import Path

import pytest
from hypothesis import given
from hypothesis import strategies as st

from arithmos.errors import ContractViolation, PreconditionError
from arithmos.proof import (
    STEP_NAMES,
    ConcludeUnitDenominator,
    PerfectPowerTest,
    ProofTrace,
    ReduceToLowestTerms,
    build_trace,
    replay,
    trace_from_json,
)

GOLDEN = Path(__file__).parent / "golden"


def test_step_order():
    assert STEP_NAMES == (
        "AssumeRational",
        "ReduceToLowestTerms",
        "SquareBothSides",
        "InvokeCoprimePowers",
        "ConcludeUnitDenominator",
        "PerfectPowerTest",
    )
    trace = build_trace(2, 2)
    assert tuple(type(s).__name__ for s in trace.steps) == STEP_NAMES


def test_steps_out_of_order_rejected():
    steps = build_trace(2, 2).steps
    with pytest.raises(PreconditionError):
        ProofTrace(2, 2, steps[::-1])


def test_golden_text():
    assert build_trace(2, 2).to_text() == (GOLDEN / "trace_sqrt2.txt").read_text()


def test_golden_json():
    assert build_trace(2, 2).to_json() == (GOLDEN / "trace_sqrt2.json").read_text()


def test_text_is_one_line_per_step():
    lines = build_trace(3, 3).to_text().splitlines()
    assert [line.split(":")[0] for line in lines] == list(STEP_NAMES)


@given(st.integers(1, 10**9), st.sampled_from([2, 3]))
def test_json_round_trip(n, e):
    trace = build_trace(n, e)
    assert trace_from_json(trace.to_json()) == trace
    assert trace_from_json(json.loads(trace.to_json())) == trace


@given(st.integers(1, 10**12), st.sampled_from([2, 3]))
def test_every_trace_replays(n, e):
    trace = build_trace(n, e)
    outcome = replay(trace)
    assert outcome == trace.outcome
    guess = round(n ** (1 / e))
    is_power = any(k**e == n for k in (guess - 1, guess, guess + 1))
    assert outcome.contradiction == (not is_power)


def test_rational_trace_ends_in_root():
    outcome = replay(build_trace(27, 3))
    assert outcome.root == 3 and not outcome.contradiction


@pytest.mark.parametrize(
    "index, replacement",
    [
        (1, ReduceToLowestTerms(4, 2, 1)),
        (4, ConcludeUnitDenominator(2, 1, 2)),
        (5, PerfectPowerTest(2, 2, 2, None)),
        (5, PerfectPowerTest(2, 2, 1, 1)),
    ],
)
def test_tampered_trace_fails_replay(index, replacement):
    steps = list(build_trace(2, 2).steps)
    steps[index] = replacement
    with pytest.raises(ContractViolation):
        replay(ProofTrace(2, 2, tuple(steps)))


def test_tampered_radicand_fails_replay():
    trace = build_trace(2, 2)
    forged = dataclasses.replace(trace, radicand=3)
    with pytest.raises(ContractViolation):
        replay(forged)
