"""Partitions and their (biased) Frobenius coordinates.

Rows and columns of a Young diagram are counted from 1. The diagonal with
bias `i` consists of the cells whose column exceeds their row by `i`.
"""

import typing as t
from dataclasses import dataclass, field

from sympy.utilities.iterables import partitions as _sympy_partitions


@dataclass(frozen=True, slots=True, order=True)
class Partition:
    """A weakly decreasing tuple of positive parts."""

    parts: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if any(p <= 0 for p in self.parts):
            msg = f"Partition parts must be positive: {self.parts}"
            raise ValueError(msg)
        if any(a < b for a, b in zip(self.parts, self.parts[1:])):
            msg = f"Partition parts must be weakly decreasing: {self.parts}"
            raise ValueError(msg)

    @property
    def weight(self) -> int:
        return sum(self.parts)

    def part(self, r: int) -> int:
        """Length of row `r`, zero beyond the last row."""
        return self.parts[r - 1] if 1 <= r <= len(self.parts) else 0

    def conjugate(self) -> "Partition":
        first = self.part(1)
        return Partition(
            tuple(sum(1 for p in self.parts if p >= c) for c in range(1, first + 1))
        )

    def diagonal_length(self, bias: int = 0) -> int:
        """Number of cells (r, r + bias) in the diagram."""
        start = max(1, 1 - bias)
        count = 0
        r = start
        while self.part(r) >= r + bias:
            count += 1
            r += 1
        return count

    def __str__(self) -> str:
        return "(" + ",".join(str(p) for p in self.parts) + ")"


@dataclass(frozen=True, slots=True)
class FrobeniusCoords:
    """Arm lengths `xi` and leg lengths `eta` measured from a biased diagonal."""

    xi: tuple[int, ...]
    eta: tuple[int, ...]
    bias: int = 0
    weight: int = field(default=0, compare=False)

    def __post_init__(self) -> None:
        if len(self.eta) != len(self.xi) + self.bias:
            msg = (
                f"Coordinates of bias {self.bias} need {len(self.xi) + self.bias} "
                f"leg entries, got {len(self.eta)}"
            )
            raise ValueError(msg)
        if any(x <= 0 for x in self.xi) or any(y < 0 for y in self.eta):
            msg = f"Invalid Frobenius coordinates: {self.xi} | {self.eta}"
            raise ValueError(msg)
        if any(a <= b for a, b in zip(self.xi, self.xi[1:])) or any(
            a <= b for a, b in zip(self.eta, self.eta[1:])
        ):
            msg = f"Frobenius coordinates must be strictly decreasing: {self}"
            raise ValueError(msg)

    def __str__(self) -> str:
        xi = ",".join(map(str, self.xi))
        eta = ",".join(map(str, self.eta))
        return f"<({xi})|({eta})>" + (f"_{self.bias}" if self.bias else "")


def partitions(m: int) -> list[Partition]:
    """All partitions of `m` in lexicographically descending order.

    Raises
    ------
    ValueError
        If `m` is negative
    """
    if m < 0:
        msg = f"Cannot partition a negative integer: {m}"
        raise ValueError(msg)

    found = [
        Partition(
            tuple(sorted((k for k, mult in p.items() for _ in range(mult)), reverse=True))
        )
        for p in _sympy_partitions(m)
    ]
    return sorted(found, reverse=True)


def biased_frobenius(kappa: Partition, bias: int) -> FrobeniusCoords:
    """Frobenius coordinates of `kappa` measured from the diagonal of bias `bias`.

    For a negative bias the diagonal starts below the first row; the rows
    above it still carry an arm, so the arms outnumber the legs by `-bias`.
    """
    cells = kappa.diagonal_length(bias)
    arms = cells + max(0, -bias)
    legs = arms + bias

    dual = kappa.conjugate()
    xi = tuple(kappa.part(j) - bias - j + 1 for j in range(1, arms + 1))
    eta = tuple(dual.part(j) + bias - j for j in range(1, legs + 1))
    return FrobeniusCoords(xi, eta, bias, kappa.weight)


def frobenius(kappa: Partition) -> FrobeniusCoords:
    return biased_frobenius(kappa, 0)


def unfrobenius(coords: FrobeniusCoords) -> Partition:
    """Rebuild the partition from coordinates of any bias.

    Raises
    ------
    ValueError
        If the coordinates do not describe a diagram
    """
    bias = coords.bias
    rows = {r: x + bias + r - 1 for r, x in enumerate(coords.xi, start=1)}
    cols = {c: y - bias + c for c, y in enumerate(coords.eta, start=1)}
    height = max([len(rows), *cols.values()], default=0)

    parts: list[int] = []
    for r in range(1, height + 1):
        in_rows = rows.get(r, 0)
        in_cols = max((c for c, depth in cols.items() if depth >= r), default=0)
        parts.append(max(in_rows, in_cols))

    try:
        return Partition(tuple(p for p in parts if p > 0))
    except ValueError as ex:
        msg = f"Coordinates {coords} do not describe a Young diagram"
        raise ValueError(msg) from ex


def frobenius_sum(coords: FrobeniusCoords) -> int:
    """Sum of all coordinates; equals weight + bias(bias - 1)/2."""
    return sum(coords.xi) + sum(coords.eta)


def all_partitions_upto(m: int) -> t.Iterator[Partition]:
    for weight in range(m + 1):
        yield from partitions(weight)
