"""Truncated multiple zeta (star) values and Schur multiple zeta functions.

Exponents are either exact (``int``) or approximate (``complex``; ``float``
is promoted).  One evaluation never mixes the two: exact inputs give a
``Fraction``, approximate inputs give a ``complex``.

Exact evaluation scales every term by ``L = lcm(1..N)`` so the inner loops
add plain integers; the single division happens at the end.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Mapping, Sequence, Union

from .combinatorics import Cell, Partition, region_cells

Exponent = Union[int, complex]
Value = Union[Fraction, complex]
Assignment = Mapping[str, Exponent]


class MixedModeError(ValueError):
    """Exact and approximate exponents were combined in one evaluation."""


class AssignmentError(KeyError):
    """A tableau symbol has no exponent in the assignment."""


def exponent_mode(values: Iterable[Exponent]) -> str:
    """Return ``"exact"`` or ``"float"``; raise on a mixture."""
    exact = approx = False
    for v in values:
        if isinstance(v, bool):
            raise TypeError("booleans are not exponents")
        if isinstance(v, int):
            exact = True
        elif isinstance(v, (float, complex)):
            approx = True
        else:
            raise TypeError(f"unsupported exponent {v!r}")
    if exact and approx:
        raise MixedModeError("exact and approximate exponents mixed in one evaluation")
    return "float" if approx else "exact"


def assignment_mode(a: Assignment) -> str:
    return exponent_mode(a.values())


@lru_cache(maxsize=None)
def _lcm_upto(N: int) -> int:
    return math.lcm(*range(1, N + 1)) if N >= 1 else 1


@lru_cache(maxsize=4096)
def _exact_weights(s: int, N: int) -> tuple[int, ...]:
    if s < 0:
        raise ValueError(f"exact exponents must be non-negative integers, got {s}")
    L = _lcm_upto(N)
    return tuple((L // n) ** s for n in range(1, N + 1))


@lru_cache(maxsize=4096)
def _float_weights(s: complex, N: int) -> tuple[complex, ...]:
    s = complex(s)
    return tuple(cmath.exp(-s * math.log(n)) for n in range(1, N + 1))


class _Kernel:
    """Per-evaluation weight tables ``w_s[n-1]`` (scaled by ``L**s`` in exact mode)."""

    def __init__(self, exponents: Sequence[Exponent], N: int):
        if N < 0:
            raise ValueError("truncation depth N must be non-negative")
        self.N = N
        self.mode = exponent_mode(exponents)
        if self.mode == "exact":
            self.tables = [_exact_weights(int(s), N) for s in exponents]
            self.scale_power = sum(int(s) for s in exponents)
            self.zero, self.one = 0, 1
        else:
            self.tables = [_float_weights(complex(s), N) for s in exponents]
            self.scale_power = 0
            self.zero, self.one = 0j, 1 + 0j

    def finish(self, total) -> Value:
        if self.mode == "exact":
            return Fraction(total, _lcm_upto(self.N) ** self.scale_power)
        return complex(total)


def _chain_sum(word: Sequence[Exponent], N: int, strict: bool) -> Value:
    k = _Kernel(word, N)
    if not word:
        return k.finish(k.one)
    if N == 0:
        return k.finish(k.zero)
    cur = list(k.tables[0])
    for table in k.tables[1:]:
        acc = k.zero
        nxt = []
        for n in range(N):
            if strict:
                nxt.append(table[n] * acc)
                acc += cur[n]
            else:
                acc += cur[n]
                nxt.append(table[n] * acc)
        cur = nxt
    total = k.zero
    for v in cur:
        total += v
    return k.finish(total)


def mzv_star_trunc(word: Sequence[Exponent], N: int) -> Value:
    """Σ over 1 ≤ n_1 ≤ … ≤ n_r ≤ N of ∏ n_i^{-s_i}, in O(rN) operations."""
    return _chain_sum(tuple(word), N, strict=False)


def mzv_trunc(word: Sequence[Exponent], N: int) -> Value:
    """Σ over 1 ≤ n_1 < … < n_r ≤ N of ∏ n_i^{-s_i}."""
    return _chain_sum(tuple(word), N, strict=True)


def _symbol_name(i: int, j: int, prefix: str) -> str:
    if i < 10 and j < 10:
        return f"{prefix}{i}{j}"
    return f"{prefix}{i}_{j}"


@dataclass(frozen=True)
class VarTableau:
    """A filling of D(shape) by opaque symbols (duplicates allowed)."""

    rows: tuple[tuple[str, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(str(x) for x in r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        Partition(len(r) for r in rows)

    @classmethod
    def standard(cls, shape: Sequence[int], prefix: str = "s") -> "VarTableau":
        """Symbols ``s11, s12, …`` named after their cells."""
        return cls(tuple(tuple(_symbol_name(i, j, prefix) for j in range(1, p + 1))
                         for i, p in enumerate(shape, 1)))

    @classmethod
    def from_cells(cls, shape: Sequence[int], symbol_of: Mapping[Cell, str]) -> "VarTableau":
        return cls(tuple(tuple(symbol_of[(i, j)] for j in range(1, p + 1))
                         for i, p in enumerate(shape, 1)))

    @property
    def shape(self) -> Partition:
        return Partition(len(r) for r in self.rows)

    def __getitem__(self, cell: Cell) -> str:
        i, j = cell
        if not self.shape.contains(cell):
            raise KeyError(f"cell {cell} outside shape {tuple(self.shape)}")
        return self.rows[i - 1][j - 1]

    def symbols(self) -> list[str]:
        """Distinct symbols in row-major order of first appearance."""
        seen: dict[str, None] = {}
        for r in self.rows:
            for x in r:
                seen.setdefault(x)
        return list(seen)

    def cell_map(self) -> dict[Cell, str]:
        return {(i, j): x for i, r in enumerate(self.rows, 1) for j, x in enumerate(r, 1)}

    def transpose(self) -> "VarTableau":
        lam = self.shape
        return VarTableau(tuple(tuple(self.rows[i][j] for i in range(len(lam)) if lam[i] > j)
                                for j in range(lam[0] if lam else 0)))

    def rename(self, mapping: Mapping[str, str]) -> "VarTableau":
        return VarTableau(tuple(tuple(mapping.get(x, x) for x in r) for r in self.rows))

    def to_json(self) -> dict:
        return {"shape": list(self.shape), "rows": [list(r) for r in self.rows]}

    @classmethod
    def from_json(cls, data: Mapping) -> "VarTableau":
        t = cls(tuple(tuple(r) for r in data["rows"]))
        if "shape" in data and list(t.shape) != list(data["shape"]):
            raise ValueError("tableau rows do not match the declared shape")
        return t

    def __str__(self) -> str:
        return " / ".join(" ".join(r) for r in self.rows)


def resolve(symbols: Iterable[str], a: Assignment) -> list[Exponent]:
    out = []
    for x in symbols:
        try:
            out.append(a[x])
        except KeyError:
            raise AssignmentError(f"no exponent assigned to symbol {x!r}") from None
    return out


def mzv_star_word(symbols: Sequence[str], a: Assignment, N: int) -> Value:
    return mzv_star_trunc(resolve(symbols, a), N)


def mzv_word(symbols: Sequence[str], a: Assignment, N: int) -> Value:
    return mzv_trunc(resolve(symbols, a), N)


def schur_zeta_trunc(t: VarTableau, a: Assignment, N: int) -> Value:
    """Σ over SSYT_N(shape) of ∏ m_ij^{-s_ij}.

    Column transfer: a state is a strictly increasing column, and
    consecutive columns must be weakly increasing along every row.
    """
    if N < 0:
        raise ValueError("truncation depth N must be non-negative")
    lam = t.shape
    exps = [resolve(r, a) for r in t.rows]
    flat = [s for r in exps for s in r]
    k = _Kernel(flat, N)
    if not lam:
        return k.finish(k.one)
    tables = {}
    pos = 0
    for i, r in enumerate(exps):
        for j in range(len(r)):
            tables[(i, j)] = k.tables[pos]
            pos += 1
    heights = lam.conjugate()
    prev: dict[tuple[int, ...], object] | None = None
    for j, h in enumerate(heights):
        col_tables = [tables[(i, j)] for i in range(h)]
        cur = {}
        for state in combinations(range(N), h):
            w = k.one
            for tab, v in zip(col_tables, state):
                w = w * tab[v]
            if prev is None:
                cur[state] = w
                continue
            acc = k.zero
            for pstate, pv in prev.items():
                if all(state[i] >= pstate[i] for i in range(h)):
                    acc += pv
            if acc:
                cur[state] = w * acc
        prev = cur
        if not prev:
            return k.finish(k.zero)
    total = k.zero
    for v in prev.values():
        total += v
    return k.finish(total)


def schur_zeta_brute(t: VarTableau, a: Assignment, N: int) -> Value:
    """Direct sum over the SSYT enumerator; slow reference path."""
    from .combinatorics import enumerate_ssyt

    exps = [resolve(r, a) for r in t.rows]
    mode = exponent_mode([s for r in exps for s in r])
    total: Value = Fraction(0) if mode == "exact" else 0j
    for M in enumerate_ssyt(t.shape, N):
        term: Value = Fraction(1) if mode == "exact" else 1 + 0j
        for row_m, row_s in zip(M, exps):
            for m, s in zip(row_m, row_s):
                term *= Fraction(1, m ** s) if mode == "exact" else cmath.exp(-complex(s) * math.log(m))
        total += term
    return total


def _det_gauss(mat: list[list[Value]]) -> Value:
    n = len(mat)
    m = [row[:] for row in mat]
    det: Value = 1
    for c in range(n):
        piv = max(range(c, n), key=lambda r: abs(m[r][c]))
        if m[piv][c] == 0:
            return 0 * det
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            det = -det
        det *= m[c][c]
        for r in range(c + 1, n):
            f = m[r][c] / m[c][c]
            if f:
                for cc in range(c, n):
                    m[r][cc] -= f * m[c][cc]
    return det


def schur_poly_oracle(shape: Sequence[int], s: Exponent, N: int) -> Value:
    """s_λ(1^{-s}, …, N^{-s}) via det[h_{λ_i - i + j}] with generating-function h_k."""
    lam = Partition(shape)
    mode = exponent_mode([s])
    one: Value = Fraction(1) if mode == "exact" else 1 + 0j
    if not lam:
        return one
    xs = [Fraction(1, n ** s) if mode == "exact" else cmath.exp(-complex(s) * math.log(n))
          for n in range(1, N + 1)]
    top = lam[0] + len(lam)
    h = [one] + [0 * one] * top
    for x in xs:
        for d in range(1, top + 1):
            h[d] = h[d] + x * h[d - 1]
    r = len(lam)
    mat = []
    for i in range(1, r + 1):
        row = []
        for j in range(1, r + 1):
            d = lam[i - 1] - i + j
            row.append(h[d] if d >= 0 else 0 * one)
        mat.append(row)
    return _det_gauss(mat)


def region_check(t: VarTableau, a: Assignment, kind: str) -> bool:
    """Re ≥ 1 on every cell and Re > 1 on ``region_cells(shape, kind)``."""
    strict = region_cells(t.shape, kind)
    for cell, x in t.cell_map().items():
        re = complex(resolve([x], a)[0]).real
        if re < 1 or (cell in strict and re <= 1):
            return False
    return True
