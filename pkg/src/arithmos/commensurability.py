"""Decision procedures for rational roots and commensurable square roots."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Union

from .errors import ContractViolation
from .euclid import Ratio, degree as check_degree, floor_root, integer_root, natural, reduce
from .proof import ProofTrace, build_trace, root_symbol

__all__ = [
    "AuditReport",
    "Commensurable",
    "CommensurabilityVerdict",
    "Incommensurable",
    "Irrational",
    "LineKind",
    "RationalInteger",
    "RationalityVerdict",
    "Surd",
    "classify_line",
    "decide_rationality",
    "equivalence1_check",
    "partition_audit",
    "surd_ratio_commensurable",
]


@dataclass(frozen=True)
class Surd:
    """The side of a square (degree 2) or cube (degree 3) of area/volume ``radicand``."""

    radicand: int
    degree: int = 2

    def __post_init__(self):
        natural(self.radicand, "radicand")
        check_degree(self.degree)

    def __str__(self):
        return root_symbol(self.radicand, self.degree)

    def raised(self) -> int:
        """The square or cube the line produces: always a natural."""
        return self.radicand


@dataclass(frozen=True)
class RationalInteger:
    k: int


@dataclass(frozen=True)
class Irrational:
    trace: ProofTrace


RationalityVerdict = Union[RationalInteger, Irrational]


class LineKind(enum.Enum):
    LENGTH = "Length"
    POWER = "Power"


@dataclass(frozen=True)
class Commensurable:
    ratio: Ratio


@dataclass(frozen=True)
class Incommensurable:
    witness: Ratio


CommensurabilityVerdict = Union[Commensurable, Incommensurable]


def equivalence1_check(n: int, e: int) -> bool:
    """Whether the degree-``e`` root of ``n`` is a natural.

    Only squaring/cubing is used, no coprimality. Both directions are
    checked against the floor root and a mismatch raises ContractViolation.
    """
    k = integer_root(n, e)
    f = floor_root(n, e)
    if (f**e == n) != (k is not None):
        raise ContractViolation(f"floor root {f} and exact root {k} disagree for {n}")
    if k is not None and k**e != n:
        raise ContractViolation(f"{k}^{e} != {n}")
    return k is not None


def decide_rationality(s: Surd) -> RationalityVerdict:
    """Rational roots of naturals are naturals; anything else is irrational.

    >>> decide_rationality(Surd(9))
    RationalInteger(k=3)
    """
    trace = build_trace(s.radicand, s.degree)
    root = trace.outcome.root
    if root is not None:
        return RationalInteger(root)
    return Irrational(trace)


def classify_line(s: Surd) -> LineKind:
    """Length if commensurable with the unit, otherwise a power.

    A power is still commensurable in square (or cube): ``s.raised()`` is a
    natural either way.
    """
    natural(s.raised(), "raised surd")
    if isinstance(decide_rationality(s), RationalInteger):
        return LineKind.LENGTH
    return LineKind.POWER


def surd_ratio_commensurable(a: int, b: int) -> CommensurabilityVerdict:
    """Compare sqrt(a) with sqrt(b).

    Commensurable exactly when a/b in lowest terms is a ratio of two
    squares; the verdict then carries p/q = sqrt(a)/sqrt(b).
    """
    lowest = reduce(Ratio(a, b)).reduced
    p = integer_root(lowest.num, 2)
    q = integer_root(lowest.den, 2)
    if p is None or q is None:
        return Incommensurable(lowest)
    if a * q * q != b * p * p:
        raise ContractViolation(f"{a}*{q}^2 != {b}*{p}^2")
    return Commensurable(Ratio(p, q))


@dataclass(frozen=True)
class AuditReport:
    """The pair sqrt(a), sqrt(b) against the length/power partition.

    ``gap`` is raised when both lines are powers yet commensurable with each
    other, a relation the two-class partition cannot express.
    """

    a: int
    b: int
    kind_a: LineKind
    kind_b: LineKind
    verdict: CommensurabilityVerdict

    @property
    def commensurable(self) -> bool:
        return isinstance(self.verdict, Commensurable)

    @property
    def gap(self) -> bool:
        return (
            self.kind_a is LineKind.POWER
            and self.kind_b is LineKind.POWER
            and self.commensurable
        )


def partition_audit(a: int, b: int) -> AuditReport:
    return AuditReport(
        a=a,
        b=b,
        kind_a=classify_line(Surd(a, 2)),
        kind_b=classify_line(Surd(b, 2)),
        verdict=surd_ratio_commensurable(a, b),
    )
