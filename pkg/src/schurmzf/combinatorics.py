"""Partitions, Young diagrams and bounded semistandard tableaux.

Cells use matrix coordinates ``(i, j)`` with 1-based row ``i`` and column
``j``; the diagonal index of a cell is ``j - i``.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Iterator, Sequence

Cell = tuple[int, int]

REGION_KINDS = ("W", "WR", "WH", "WE")


def diagonal(cell: Cell) -> int:
    return cell[1] - cell[0]


class Partition(tuple):
    """A weakly decreasing tuple of positive integers.

    >>> Partition((4, 3, 1)).conjugate()
    Partition(3, 2, 2, 1)
    """

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(int(p) for p in parts)
        for p in parts:
            if p < 1:
                raise ValueError(f"partition parts must be positive: {parts}")
        for a, b in zip(parts, parts[1:]):
            if b > a:
                raise ValueError(f"partition parts must be weakly decreasing: {parts}")
        return super().__new__(cls, parts)

    def __repr__(self) -> str:
        return f"Partition({', '.join(map(str, self))})"

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Parse the comma separated text form, e.g. ``"3,2,1"``; ``""`` is empty."""
        text = text.strip()
        if not text:
            return cls(())
        return cls(int(p) for p in text.split(","))

    def __str__(self) -> str:
        return ",".join(map(str, self))

    @property
    def size(self) -> int:
        return sum(self)

    def part(self, i: int) -> int:
        """``λ_i`` with 1-based ``i``; zero beyond the last row."""
        return self[i - 1] if 1 <= i <= len(self) else 0

    def conjugate(self) -> "Partition":
        if not self:
            return Partition(())
        return Partition(sum(1 for p in self if p >= c) for c in range(1, self[0] + 1))

    def cells(self) -> list[Cell]:
        """Row-major list of the cells of D(λ)."""
        return [(i, j) for i, p in enumerate(self, 1) for j in range(1, p + 1)]

    def contains(self, cell: Cell) -> bool:
        i, j = cell
        return 1 <= i <= len(self) and 1 <= j <= self[i - 1]

    def corners(self) -> list[Cell]:
        """Removable boxes ``(i, λ_i)`` with ``λ_{i+1} < λ_i``."""
        return [(i, p) for i, p in enumerate(self, 1) if self.part(i + 1) < p]

    def row_ends(self) -> list[Cell]:
        return [(i, p) for i, p in enumerate(self, 1)]

    def diagonal_classes(self) -> dict[int, list[Cell]]:
        """Cells grouped by diagonal index, each class in increasing row order."""
        classes: dict[int, list[Cell]] = {}
        for cell in self.cells():
            classes.setdefault(diagonal(cell), []).append(cell)
        return dict(sorted(classes.items()))

    def hook_length(self, cell: Cell) -> int:
        i, j = cell
        return self[i - 1] - j + self.conjugate().part(j) - i + 1


def partitions_of(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """All partitions of ``n`` in reverse lexicographic order."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield Partition(())
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions_of(n - first, first):
            yield Partition((first,) + tuple(rest))


def region_cells(shape: Sequence[int], kind: str) -> set[Cell]:
    """Cells whose exponents need real part > 1 for the named convergence region.

    ``W``: corners; ``WR``: row ends; ``WH``: cells whose ``i - j`` lies in
    ``{i - λ_i}``; ``WE``: cells whose ``i - j`` lies in ``{i - λ'_i}``.
    """
    lam = Partition(shape)
    if kind == "W":
        return set(lam.corners())
    if kind == "WR":
        return set(lam.row_ends())
    if kind == "WH":
        keys = {i - p for i, p in enumerate(lam, 1)}
    elif kind == "WE":
        keys = {i - p for i, p in enumerate(lam.conjugate(), 1)}
    else:
        raise ValueError(f"unknown region kind {kind!r}; expected one of {REGION_KINDS}")
    return {(i, j) for i, j in lam.cells() if i - j in keys}


def is_ssyt(rows: Sequence[Sequence[int]], shape: Sequence[int] | None = None, N: int | None = None) -> bool:
    """Row-weak / column-strict check, optionally against a shape and a bound."""
    if shape is not None and tuple(len(r) for r in rows) != tuple(shape):
        return False
    for i, row in enumerate(rows):
        for j, v in enumerate(row):
            if v < 1 or (N is not None and v > N):
                return False
            if j > 0 and row[j - 1] > v:
                return False
            if i > 0 and rows[i - 1][j] >= v:
                return False
    return True


def enumerate_ssyt(shape: Sequence[int], N: int) -> Iterator[tuple[tuple[int, ...], ...]]:
    """Stream SSYT_N(shape) in lexicographic order of the row-major entries.

    Backtracking over cells in row-major order with a fixed-size working
    array, so memory stays constant in the number of tableaux.
    """
    lam = Partition(shape)
    if N < 0:
        raise ValueError("N must be non-negative")
    cells = lam.cells()
    if not cells:
        yield ()
        return
    heights = lam.conjugate()
    index = {c: k for k, c in enumerate(cells)}
    # Entry at (i, j) needs room for the strictly larger entries below it.
    upper = [N - (heights[j - 1] - i) for i, j in cells]
    left = [index.get((i, j - 1), -1) for i, j in cells]
    above = [index.get((i - 1, j), -1) for i, j in cells]
    n = len(cells)
    vals = [0] * n

    def lower(k: int) -> int:
        lo = 1
        if left[k] >= 0:
            lo = vals[left[k]]
        if above[k] >= 0:
            lo = max(lo, vals[above[k]] + 1)
        return lo

    k = 0
    vals[0] = lower(0) - 1
    while k >= 0:
        vals[k] += 1
        if vals[k] > upper[k]:
            k -= 1
            continue
        if k == n - 1:
            out = []
            pos = 0
            for p in lam:
                out.append(tuple(vals[pos:pos + p]))
                pos += p
            yield tuple(out)
            continue
        k += 1
        vals[k] = lower(k) - 1


def count_ssyt_oracle(shape: Sequence[int], N: int) -> int:
    """|SSYT_N(λ)| by the hook-content formula."""
    lam = Partition(shape)
    prod = Fraction(1)
    for i, j in lam.cells():
        prod *= Fraction(N + j - i, lam.hook_length((i, j)))
    assert prod.denominator == 1
    return max(int(prod), 0)
