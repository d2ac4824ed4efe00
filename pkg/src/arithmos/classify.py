"""Square/oblong and cube/parallelepipedal partition of the naturals.

Every natural falls in exactly one plane class and one solid class. A
non-square is drawn as the unit-sided rectangle ``(1, n)`` and a non-cube as
the block ``(1, 1, n)``; :func:`oblong_factorizations` lists the other
rectangles when they exist.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .euclid import floor_root, integer_root, natural

__all__ = [
    "ClassificationTable",
    "CubeEquilateral",
    "Oblong",
    "Parallelepipedal",
    "PlaneClass",
    "SolidClass",
    "SquareEquilateral",
    "TableRow",
    "classification_table",
    "classify_plane",
    "classify_solid",
    "oblong_factorizations",
    "power_count",
]


@dataclass(frozen=True)
class SquareEquilateral:
    """An equal times an equal: ``side * side``."""

    side: int

    name = "SquareEquilateral"

    @property
    def figure(self) -> tuple[int, int]:
        return (self.side, self.side)


@dataclass(frozen=True)
class Oblong:
    """Only a product of unequal sides; drawn as ``(1, n)``."""

    canonical_figure: tuple[int, int]

    name = "Oblong"

    @property
    def figure(self) -> tuple[int, int]:
        return self.canonical_figure


@dataclass(frozen=True)
class CubeEquilateral:
    side: int

    name = "CubeEquilateral"

    @property
    def figure(self) -> tuple[int, int, int]:
        return (self.side, self.side, self.side)


@dataclass(frozen=True)
class Parallelepipedal:
    canonical_figure: tuple[int, int, int]

    name = "Parallelepipedal"

    @property
    def figure(self) -> tuple[int, int, int]:
        return self.canonical_figure


PlaneClass = Union[SquareEquilateral, Oblong]
SolidClass = Union[CubeEquilateral, Parallelepipedal]


def classify_plane(n: int) -> PlaneClass:
    """
    >>> classify_plane(9)
    SquareEquilateral(side=3)
    >>> classify_plane(3)
    Oblong(canonical_figure=(1, 3))
    """
    k = integer_root(n, 2)
    if k is not None:
        return SquareEquilateral(k)
    return Oblong((1, n))


def classify_solid(n: int) -> SolidClass:
    k = integer_root(n, 3)
    if k is not None:
        return CubeEquilateral(k)
    return Parallelepipedal((1, 1, n))


def oblong_factorizations(n: int) -> list[tuple[int, int]]:
    """All rectangles ``(p, q)`` with ``p <= q`` and ``p * q == n``.

    A square side pair ``(k, k)`` is included when n is a square.
    """
    natural(n, "n")
    return [(p, n // p) for p in range(1, floor_root(n, 2) + 1) if n % p == 0]


@dataclass(frozen=True)
class TableRow:
    n: int
    plane: PlaneClass
    solid: SolidClass


@dataclass(frozen=True)
class ClassificationTable:
    max: int
    rows: tuple[TableRow, ...]

    @property
    def squares(self) -> list[int]:
        return [r.n for r in self.rows if isinstance(r.plane, SquareEquilateral)]

    @property
    def oblongs(self) -> list[int]:
        return [r.n for r in self.rows if isinstance(r.plane, Oblong)]


def classification_table(max: int) -> ClassificationTable:
    natural(max, "max")
    rows = tuple(
        TableRow(n, classify_plane(n), classify_solid(n)) for n in range(1, max + 1)
    )
    return ClassificationTable(max=max, rows=rows)


def power_count(max: int) -> int:
    """Number of non-squares in ``1..max``."""
    natural(max, "max")
    return max - floor_root(max, 2)
