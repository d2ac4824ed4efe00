"""Step-by-step certificates for the rationality of square and cube roots.

A trace follows the lowest-terms argument: suppose the root of n equals t/q,
reduce to r/s, raise both sides to the degree, use that powers of coprime
numbers stay coprime, conclude the denominator is the unit, and finish with
an exact perfect-power test on n. When n is not a perfect power the last
step is a contradiction and the root is irrational.

Each step records only the numbers it determines. :func:`replay` recomputes
them from the previous step with the operations of :mod:`arithmos.euclid`.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass
from typing import Union

from .errors import ContractViolation, PreconditionError
from .euclid import (
    Ratio,
    coprime_power_lemma,
    degree as check_degree,
    floor_root,
    integer_root,
    natural,
    power,
    reduce,
)

__all__ = [
    "STEP_NAMES",
    "AssumeRational",
    "ConcludeUnitDenominator",
    "InvokeCoprimePowers",
    "PerfectPowerTest",
    "ProofTrace",
    "ReduceToLowestTerms",
    "SquareBothSides",
    "build_trace",
    "replay",
    "root_symbol",
    "trace_from_json",
]


def root_symbol(n: int, e: int) -> str:
    return f"sqrt({n})" if e == 2 else f"cbrt({n})"


@dataclass(frozen=True)
class AssumeRational:
    radicand: int
    degree: int

    def claim(self) -> str:
        root = root_symbol(self.radicand, self.degree)
        return f"{root}/m = p/q for some naturals m, p, q; with t = m*p, {root} = t/q"


@dataclass(frozen=True)
class ReduceToLowestTerms:
    lhs_num: int
    lhs_den: int
    common_factor: int

    def claim(self) -> str:
        return (
            "t/q = r/s with r, s prime to one another, r dividing t and s dividing q; "
            f"the left side {self.lhs_num}/{self.lhs_den} is in lowest terms "
            f"(common factor {self.common_factor})"
        )


@dataclass(frozen=True)
class SquareBothSides:
    lhs_num: int
    lhs_den: int
    degree: int

    def claim(self) -> str:
        e = self.degree
        return f"{self.lhs_num}/{self.lhs_den} = r^{e}/s^{e}"


@dataclass(frozen=True)
class InvokeCoprimePowers:
    degree: int
    lhs_num: int
    lhs_den: int

    def claim(self) -> str:
        e = self.degree
        return (
            f"r, s prime to one another, so r^{e}, s^{e} prime to one another; "
            f"r^{e}/s^{e} and {self.lhs_num}/{self.lhs_den} are both in lowest terms"
        )


@dataclass(frozen=True)
class ConcludeUnitDenominator:
    degree: int
    s_power: int
    s: int

    def claim(self) -> str:
        e = self.degree
        return (
            f"equal ratios in lowest terms have equal terms, so s^{e} = {self.s_power} "
            f"divides 1; s = {self.s} and the radicand equals r^{e}"
        )


@dataclass(frozen=True)
class PerfectPowerTest:
    radicand: int
    degree: int
    floor_root: int
    root: int | None

    @property
    def contradiction(self) -> bool:
        return self.root is None

    def claim(self) -> str:
        n, e, k = self.radicand, self.degree, self.floor_root
        if self.root is None:
            return (
                f"{k}^{e} < {n} < {k + 1}^{e}: no natural r has r^{e} = {n}, "
                "contradiction"
            )
        return f"{k}^{e} = {n}: r = {k}, the root is the natural {k}"


Step = Union[
    AssumeRational,
    ReduceToLowestTerms,
    SquareBothSides,
    InvokeCoprimePowers,
    ConcludeUnitDenominator,
    PerfectPowerTest,
]

_STEP_TYPES = (
    AssumeRational,
    ReduceToLowestTerms,
    SquareBothSides,
    InvokeCoprimePowers,
    ConcludeUnitDenominator,
    PerfectPowerTest,
)
STEP_NAMES = tuple(t.__name__ for t in _STEP_TYPES)


@dataclass(frozen=True)
class ProofTrace:
    radicand: int
    degree: int
    steps: tuple[Step, ...]

    def __post_init__(self):
        names = tuple(type(s).__name__ for s in self.steps)
        if names != STEP_NAMES:
            raise PreconditionError(f"steps out of order: {names}")

    @property
    def outcome(self) -> PerfectPowerTest:
        return self.steps[-1]

    @property
    def irrational(self) -> bool:
        return self.outcome.contradiction

    def to_text(self) -> str:
        """One line per step: ``Name: key=value ... | claim``."""
        lines = []
        for step in self.steps:
            fields = " ".join(
                f"{k}={'none' if v is None else v}" for k, v in asdict(step).items()
            )
            lines.append(f"{type(step).__name__}: {fields} | {step.claim()}")
        return "\n".join(lines) + "\n"

    def to_dict(self) -> dict:
        return {
            "radicand": self.radicand,
            "degree": self.degree,
            "irrational": self.irrational,
            "steps": [
                {"step": type(s).__name__, **asdict(s), "claim": s.claim()}
                for s in self.steps
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"


def trace_from_json(text: str | dict) -> ProofTrace:
    data = json.loads(text) if isinstance(text, str) else text
    by_name = {t.__name__: t for t in _STEP_TYPES}
    steps = []
    for raw in data["steps"]:
        raw = dict(raw)
        cls = by_name[raw.pop("step")]
        raw.pop("claim", None)
        steps.append(cls(**raw))
    return ProofTrace(data["radicand"], data["degree"], tuple(steps))


def build_trace(n: int, e: int) -> ProofTrace:
    """Instantiate the lowest-terms argument for the degree-``e`` root of ``n``."""
    natural(n, "n")
    check_degree(e)
    lhs = reduce(Ratio(n, 1))
    num, den = lhs.reduced.as_tuple()
    coprime_power_lemma(num, den, e)
    s = integer_root(den, e)
    steps = (
        AssumeRational(n, e),
        ReduceToLowestTerms(num, den, lhs.factor),
        SquareBothSides(num, den, e),
        InvokeCoprimePowers(e, num, den),
        ConcludeUnitDenominator(e, den, s),
        PerfectPowerTest(n, e, floor_root(n, e), integer_root(n, e)),
    )
    return ProofTrace(n, e, steps)


def _require(ok: bool, step: str, detail: str) -> None:
    if not ok:
        raise ContractViolation(f"{step} does not replay: {detail}")


def replay(trace: ProofTrace) -> PerfectPowerTest:
    """Re-derive every step from its predecessor; return the final step.

    Raises ContractViolation at the first step whose recorded numbers do not
    follow from the one before.
    """
    assume, lowest, raised, coprime, unit, test = trace.steps
    n, e = assume.radicand, assume.degree
    _require(
        (n, e) == (trace.radicand, trace.degree) and e == check_degree(e),
        "AssumeRational", f"radicand/degree {n}, {e}",
    )

    w = reduce(Ratio(n, 1))
    _require(
        w.check()
        and w.reduced.same_terms(Ratio(lowest.lhs_num, lowest.lhs_den))
        and w.factor == lowest.common_factor,
        "ReduceToLowestTerms", f"{n}/1 reduces to {w.reduced}, factor {w.factor}",
    )

    _require(
        (raised.lhs_num, raised.lhs_den) == (lowest.lhs_num, lowest.lhs_den)
        and raised.degree == e,
        "SquareBothSides", "left side differs from the reduced ratio",
    )

    _require(
        (coprime.lhs_num, coprime.lhs_den, coprime.degree)
        == (raised.lhs_num, raised.lhs_den, e)
        and coprime_power_lemma(coprime.lhs_num, coprime.lhs_den, e),
        "InvokeCoprimePowers", "left side is not in lowest terms at this degree",
    )

    _require(
        unit.degree == e
        and unit.s_power == coprime.lhs_den
        and integer_root(unit.s_power, e) == unit.s == 1,
        "ConcludeUnitDenominator", f"s^{e} = {unit.s_power}, s = {unit.s}",
    )

    k = test.floor_root
    _require(
        (test.radicand, test.degree) == (n, e)
        and power(k, e) <= n < power(k + 1, e)
        and test.root == integer_root(n, e)
        and (test.root is None) == (power(k, e) != n),
        "PerfectPowerTest", f"bracket {k}^{e} <= {n} < {k + 1}^{e}",
    )
    return test
