"""Exact arithmetic on whole numbers and their ratios, Book VII style.

A *natural* here is a plain Python ``int`` that is at least 1: the ancient
domain has no zero and no negatives, and the unit 1 counts as a number.
Every function validates its inputs with :func:`natural` and never touches
floating point.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import ContractViolation, PreconditionError

__all__ = [
    "DEGREES",
    "REPEATED_ADDITION_LIMIT",
    "Ratio",
    "ReductionWitness",
    "are_relatively_prime",
    "coprime_power_lemma",
    "degree",
    "floor_root",
    "gcd",
    "gcd_anthyphairesis",
    "gcd_division",
    "integer_root",
    "mul_repeated",
    "natural",
    "power",
    "prestet_divisor",
    "reduce",
]

DEGREES = (2, 3)

# mul_repeated adds n to itself m times up to this many additions, then
# switches to native multiplication.
REPEATED_ADDITION_LIMIT = 4096

# gcd subtracts while the larger term is at most this many times the smaller;
# beyond that a single division replaces the run of subtractions.
_SUBTRACTION_SPAN = 8


def natural(value, name: str = "value") -> int:
    """Return ``value`` if it is an int >= 1, else raise PreconditionError."""
    if isinstance(value, bool) or not isinstance(value, int):
        raise PreconditionError(f"{name} must be a whole number, got {value!r}")
    if value < 1:
        raise PreconditionError(f"{name} must be >= 1, got {value}")
    return value


def degree(e) -> int:
    """Validate a root degree; only squares and cubes are constructible."""
    if isinstance(e, bool) or e not in DEGREES:
        raise PreconditionError(f"degree must be 2 or 3, got {e!r}")
    return e


def mul_repeated(m: int, n: int) -> int:
    """Return ``m`` times ``n`` as n added to itself m times.

    >>> mul_repeated(3, 4)
    12
    """
    natural(m, "m")
    natural(n, "n")
    if m > REPEATED_ADDITION_LIMIT:
        return m * n
    total = 0
    for _ in range(m):
        total += n
    return total


def power(k: int, e: int) -> int:
    """``k`` raised to ``e``, each step being k copies of the previous power."""
    natural(k, "k")
    natural(e, "e")
    result = k
    for _ in range(e - 1):
        result = mul_repeated(k, result)
    return result


def gcd_anthyphairesis(a: int, b: int) -> int:
    """Greatest common measure by reciprocal subtraction only.

    Linear in max(a, b) / min(a, b); intended as the reference route.
    """
    natural(a, "a")
    natural(b, "b")
    while a != b:
        if a > b:
            a -= b
        else:
            b -= a
    return a


def gcd_division(a: int, b: int) -> int:
    """Greatest common measure by the division form of Euclid's algorithm."""
    natural(a, "a")
    natural(b, "b")
    while b:
        a, b = b, a % b
    return a


def gcd(a: int, b: int) -> int:
    """Greatest common measure of two naturals.

    Runs reciprocal subtraction, but collapses a long run of subtractions of
    the same term into one division.

    >>> gcd(4, 10)
    2
    """
    natural(a, "a")
    natural(b, "b")
    while a != b:
        if a < b:
            a, b = b, a
        if a > _SUBTRACTION_SPAN * b:
            a %= b
            if a == 0:
                return b
        else:
            a -= b
    return a


def are_relatively_prime(a: int, b: int) -> bool:
    """True when only the unit measures both ``a`` and ``b``."""
    return gcd(a, b) == 1


@dataclass(frozen=True, eq=False)
class Ratio:
    """An ordered pair of naturals. Equality is cross-multiplication."""

    num: int
    den: int

    def __post_init__(self):
        natural(self.num, "num")
        natural(self.den, "den")

    def __eq__(self, other):
        if not isinstance(other, Ratio):
            return NotImplemented
        return self.num * other.den == self.den * other.num

    def __hash__(self):
        g = math.gcd(self.num, self.den)
        return hash((self.num // g, self.den // g))

    def __str__(self):
        return f"{self.num}/{self.den}"

    def same_terms(self, other: Ratio) -> bool:
        """Termwise identity, stricter than ``==``."""
        return self.num == other.num and self.den == other.den

    def as_tuple(self) -> tuple[int, int]:
        return self.num, self.den


@dataclass(frozen=True)
class ReductionWitness:
    """A ratio, its lowest-terms form, and the factors linking them.

    ``original.num == reduced.num * num_factor`` and likewise for the
    denominators; both factors are the same common measure.
    """

    original: Ratio
    reduced: Ratio
    num_factor: int
    den_factor: int

    @property
    def factor(self) -> int:
        return self.num_factor

    def check(self) -> bool:
        o, r = self.original, self.reduced
        return (
            are_relatively_prime(r.num, r.den)
            and o.num == r.num * self.num_factor
            and o.den == r.den * self.den_factor
            and self.num_factor == self.den_factor
        )


def reduce(r: Ratio) -> ReductionWitness:
    """Bring ``r`` to lowest terms and return the divisibility witness.

    >>> reduce(Ratio(4, 10)).reduced
    Ratio(num=2, den=5)
    """
    g = gcd(r.num, r.den)
    return ReductionWitness(
        original=r,
        reduced=Ratio(r.num // g, r.den // g),
        num_factor=g,
        den_factor=g,
    )


def coprime_power_lemma(a: int, b: int, e: int) -> bool:
    """Whether ``a**e`` and ``b**e`` are relatively prime.

    Also checks the lemma itself: the answer must equal whether ``a`` and
    ``b`` are relatively prime, otherwise ContractViolation is raised.
    """
    natural(a, "a")
    natural(b, "b")
    degree(e)
    powers_coprime = are_relatively_prime(a**e, b**e)
    if powers_coprime != are_relatively_prime(a, b):
        raise ContractViolation(
            f"coprimality of {a}, {b} not preserved at degree {e}"
        )
    return powers_coprime


def prestet_divisor(b: int, c: int, d: int) -> int:
    """Given d | b*c with c, d coprime, return k such that b == d * k.

    The quotient comes from lowest terms: b*c = k'*d gives c/d = k'/b, and
    c/d is already in lowest terms, so d measures b.
    """
    natural(b, "b")
    natural(c, "c")
    natural(d, "d")
    bc = b * c
    if bc % d:
        raise PreconditionError(f"{d} does not divide {b}*{c} = {bc}")
    if not are_relatively_prime(c, d):
        raise PreconditionError(f"{c} and {d} are not relatively prime")
    witness = reduce(Ratio(bc // d, b))
    if not witness.reduced.same_terms(Ratio(c, d)):
        raise ContractViolation(f"lowest terms of {bc // d}/{b} is not {c}/{d}")
    return witness.den_factor


def _residues(modulus: int, e: int) -> tuple[bool, ...]:
    hits = {pow(x, e, modulus) for x in range(modulus)}
    return tuple(x in hits for x in range(modulus))


# Exact rejection tables: a perfect e-th power has an e-th power residue
# modulo every modulus.
_SQUARE_FILTERS = tuple((m, _residues(m, 2)) for m in (64, 63, 65, 11))
_CUBE_FILTERS = tuple((m, _residues(m, 3)) for m in (63, 13, 19))


def _newton_floor_root(n: int, e: int) -> int:
    # Starts above the root and decreases monotonically to floor(n ** (1/e)).
    x = 1 << -(-n.bit_length() // e)
    while True:
        y = ((e - 1) * x + n // x ** (e - 1)) // e
        if y >= x:
            return x
        x = y


def floor_root(n: int, e: int) -> int:
    """Largest k with ``k**e <= n``."""
    natural(n, "n")
    degree(e)
    if e == 2:
        return math.isqrt(n)
    return _newton_floor_root(n, e)


def integer_root(n: int, e: int) -> int | None:
    """Return k with ``k**e == n`` exactly, or None.

    >>> integer_root(9, 2)
    3
    >>> integer_root(17, 2) is None
    True
    """
    natural(n, "n")
    degree(e)
    for modulus, table in _SQUARE_FILTERS if e == 2 else _CUBE_FILTERS:
        if not table[n % modulus]:
            return None
    k = math.isqrt(n) if e == 2 else _newton_floor_root(n, e)
    return k if k ** e == n else None
