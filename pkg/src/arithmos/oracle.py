"""Brute-force witness searches used to check the decision procedures.

These share nothing with :mod:`arithmos.commensurability` beyond
``integer_root``: no reduction to lowest terms, no coprimality. An empty
result is evidence only up to ``search_bound``, which is always reported.
"""

from __future__ import annotations

from collections.abc import Iterator
from dataclasses import dataclass

from .errors import ContractViolation
from .euclid import degree as check_degree, integer_root, natural

__all__ = [
    "DEFAULT_RATIO_BOUND",
    "DEFAULT_ROOT_BOUND",
    "OracleResult",
    "oracle_root_rational",
    "oracle_surd_ratio",
    "root_witnesses",
]

DEFAULT_ROOT_BOUND = 1000
DEFAULT_RATIO_BOUND = 1000


@dataclass(frozen=True)
class OracleResult:
    found: tuple[int, int] | None
    search_bound: int

    def __bool__(self):
        return self.found is not None


def root_witnesses(n: int, e: int, q_bound: int) -> Iterator[tuple[int, int]]:
    """Every ``(p, q)`` with ``q <= q_bound`` and ``p**e == n * q**e``, by q."""
    natural(n, "n")
    check_degree(e)
    natural(q_bound, "q_bound")
    for q in range(1, q_bound + 1):
        target = n * q**e
        p = integer_root(target, e)
        if p is not None:
            if p**e != target:
                raise ContractViolation(f"oracle witness {p}/{q} fails for {n}")
            yield p, q


def oracle_root_rational(n: int, e: int, q_bound: int = DEFAULT_ROOT_BOUND) -> OracleResult:
    """First ``(p, q)`` with ``p**e == n * q**e``, scanning q upward.

    >>> oracle_root_rational(9, 2, 10)
    OracleResult(found=(3, 1), search_bound=10)
    """
    found = next(root_witnesses(n, e, q_bound), None)
    return OracleResult(found, q_bound)


def oracle_surd_ratio(a: int, b: int, bound: int = DEFAULT_RATIO_BOUND) -> OracleResult:
    """First ``(p, q)``, lexicographic in ``(q, p)``, with ``a*q**2 == b*p**2``.

    Both p and q range over ``1..bound``. For each q at most one p can
    work, so the scan over p is an exact square-root test.
    """
    natural(a, "a")
    natural(b, "b")
    natural(bound, "bound")
    for q in range(1, bound + 1):
        lhs = a * q * q
        if lhs % b:
            continue
        p = integer_root(lhs // b, 2)
        if p is not None and p <= bound:
            if a * q * q != b * p * p:
                raise ContractViolation(f"oracle witness {p}/{q} fails for {a}:{b}")
            return OracleResult((p, q), bound)
    return OracleResult(None, bound)
