"""Rim decompositions, the alternating rim sum X^N_λ and the lattice-path check.

An H-rim decomposition tiles D(λ) by ribbons θ_1..θ_r where a nonempty θ_i
starts at (i, 1) and every prefix θ_1 ∪ … ∪ θ_k is a Young diagram.  The
type σ of a decomposition is read off the diagonal of each ribbon's last
cell: σ(i) is the row j with λ_j - j equal to it (an empty θ_i ends on
diagonal -i).  E-rim decompositions are the transposes of the H-rim
decompositions of the conjugate shape.
"""
from __future__ import annotations

import time
from collections import defaultdict
from dataclasses import dataclass
from itertools import combinations_with_replacement, product
from math import comb, prod
from typing import Callable, Sequence

from .combinatorics import Cell, Partition, diagonal
from .report import DEFAULT_TOLERANCE, BudgetExceeded, VerificationReport, compare_values
from .series import (Assignment, Value, VarTableau, _Kernel, assignment_mode,
                     mzv_star_word, mzv_word, resolve, schur_zeta_trunc)

Ribbon = tuple[Cell, ...]

DEFAULT_PATTERN_BUDGET = 10 ** 6


def permutation_sign(perm: Sequence[int]) -> int:
    sign = 1
    seen = [False] * len(perm)
    for start in range(len(perm)):
        if seen[start]:
            continue
        length = 0
        k = start
        while not seen[k]:
            seen[k] = True
            k = perm[k] - 1
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


@dataclass(frozen=True)
class RimDecomposition:
    flavor: str
    shape: Partition
    ribbons: tuple[Ribbon, ...]
    sigma: tuple[int, ...]
    sign: int

    def labels(self) -> dict[Cell, int]:
        return {c: k for k, rib in enumerate(self.ribbons, 1) for c in rib}

    def dump(self) -> str:
        """Label grid in the style ``"1 1 3 3 / 3 3 3 / 3 4 4 / 4 4"``."""
        lab = self.labels()
        return " / ".join(" ".join(str(lab[(i, j)]) for j in range(1, p + 1))
                          for i, p in enumerate(self.shape, 1))

    def transpose(self) -> "RimDecomposition":
        flavor = "E" if self.flavor == "H" else "H"
        ribbons = tuple(tuple((j, i) for i, j in rib) for rib in self.ribbons)
        return RimDecomposition(flavor, self.shape.conjugate(), ribbons, self.sigma, self.sign)


def _peel(mu: tuple[int, ...], k: int) -> list[list[Ribbon]]:
    """Ribbon lists (θ_1..θ_k) decomposing ``mu`` with H-rim labels 1..k."""
    if k == 0:
        return [[]] if not mu else []
    rows = len(mu)
    if rows > k:
        return []
    if rows < k:
        return [rest + [()] for rest in _peel(mu, k - 1)]
    out = []
    for top in range(k, 0, -1):
        new = list(mu)
        cells: list[Cell] = []
        for a in range(k, top - 1, -1):
            keep = mu[a] - 1 if a < k else 0  # 0-based mu[a] is λ_{a+1}
            cells.extend((a, j) for j in range(keep + 1, mu[a - 1] + 1))
            new[a - 1] = keep
        while new and new[-1] == 0:
            new.pop()
        ribbon = tuple(sorted(cells, key=diagonal))
        for rest in _peel(tuple(new), k - 1):
            out.append(rest + [ribbon])
    return out


def _h_type(lam: Partition, ribbons: Sequence[Ribbon]) -> tuple[int, ...]:
    by_end = {p - j: j for j, p in enumerate(lam, 1)}
    sigma = []
    for i, rib in enumerate(ribbons, 1):
        end = diagonal(rib[-1]) if rib else -i
        if end not in by_end:
            raise AssertionError(f"ribbon {rib} of {tuple(lam)} ends off a row-end diagonal")
        sigma.append(by_end[end])
    if sorted(sigma) != list(range(1, len(lam) + 1)):
        raise AssertionError(f"type {sigma} of {tuple(lam)} is not a permutation")
    return tuple(sigma)


def enumerate_h_rims(shape: Sequence[int]) -> list[RimDecomposition]:
    lam = Partition(shape)
    out = []
    for ribbons in _peel(tuple(lam), len(lam)):
        sigma = _h_type(lam, ribbons)
        out.append(RimDecomposition("H", lam, tuple(ribbons), sigma, permutation_sign(sigma)))
    return out


def enumerate_e_rims(shape: Sequence[int]) -> list[RimDecomposition]:
    lam = Partition(shape)
    return [d.transpose() for d in enumerate_h_rims(lam.conjugate())]


def enumerate_rims(shape: Sequence[int], flavor: str) -> list[RimDecomposition]:
    if flavor == "H":
        return enumerate_h_rims(shape)
    if flavor == "E":
        return enumerate_e_rims(shape)
    raise ValueError(f"flavor must be 'H' or 'E', got {flavor!r}")


def reading_word(ribbon: Ribbon, t: VarTableau, flavor: str) -> tuple[str, ...]:
    """Symbols of ``ribbon`` by increasing (H) or decreasing (E) diagonal."""
    if flavor not in ("H", "E"):
        raise ValueError(f"flavor must be 'H' or 'E', got {flavor!r}")
    cells = sorted(ribbon, key=diagonal, reverse=(flavor == "E"))
    return tuple(t[c] for c in cells)


def rim_terms(t: VarTableau, flavor: str) -> list[tuple[int, tuple[tuple[str, ...], ...]]]:
    """Signed products of reading words; empty ribbons contribute no factor."""
    out = []
    for d in enumerate_rims(t.shape, flavor):
        words = tuple(reading_word(rib, t, flavor) for rib in d.ribbons if rib)
        out.append((d.sign, words))
    return out


def rim_alt_sum(t: VarTableau, a: Assignment, N: int, flavor: str = "H") -> Value:
    """X^N_λ: Σ sign · ∏ ζ*^N (H) or ζ^N (E) of the ribbon reading words."""
    zeta = mzv_star_word if flavor == "H" else mzv_word
    total: Value = 0
    for sign, words in rim_terms(t, flavor):
        term: Value = sign
        for w in words:
            term *= zeta(w, a, N)
        total += term
    return _normalize(total, a)


def _normalize(v, a: Assignment) -> Value:
    from fractions import Fraction

    if assignment_mode(a) == "exact":
        return Fraction(v)
    return complex(v)


# -- lattice patterns ----------------------------------------------------------

def _path_points(x0: int, heights: Sequence[int], N: int) -> set[tuple[int, int]]:
    pts = set()
    lo = 1
    for c, h in enumerate(list(heights) + [N]):
        for y in range(lo, h + 1):
            pts.add((x0 + c, y))
        lo = h
    return pts


@dataclass(frozen=True)
class PatternCensus:
    """Signed cell-height maps of H-patterns, split by intersection."""

    cells: tuple[Cell, ...]
    non_intersecting: dict[tuple[int, ...], int]
    intersecting: dict[tuple[int, ...], int]
    n_patterns: int

    def evaluate(self, which: str, t: VarTableau, a: Assignment, N: int) -> Value:
        terms = self.non_intersecting if which == "non" else self.intersecting
        exps = resolve([t[c] for c in self.cells], a)
        k = _Kernel(exps, N)
        total = k.zero
        for heights, coeff in terms.items():
            w = k.one
            for tab, h in zip(k.tables, heights):
                w = w * tab[h - 1]
            total += coeff * w
        return k.finish(total)

    def symbolic(self, which: str, t: VarTableau) -> list[tuple[int, dict[str, int]]]:
        """Terms as (coefficient, {symbol: height}) for display."""
        terms = self.non_intersecting if which == "non" else self.intersecting
        out = []
        for heights, coeff in sorted(terms.items()):
            if coeff:
                out.append((coeff, {t[c]: h for c, h in zip(self.cells, heights)}))
        return out


def count_h_patterns(shape: Sequence[int], N: int) -> int:
    total = 0
    for d in enumerate_h_rims(shape):
        total += prod(comb(N + len(rib) - 1, len(rib)) for rib in d.ribbons)
    return total


def h_pattern_census(shape: Sequence[int], N: int, budget: int = DEFAULT_PATTERN_BUDGET) -> PatternCensus:
    """Enumerate every H-pattern of λ at depth N by brute force.

    Path ``l_i`` starts at ``(r+1-i, 1)``; its k-th horizontal edge at height
    ``h`` carries the k-th cell of θ_i.  Non-intersecting means no shared
    lattice vertex.
    """
    lam = Partition(shape)
    n = count_h_patterns(lam, N)
    if n > budget:
        raise BudgetExceeded(f"{n} H-patterns exceed the budget {budget}")
    r = len(lam)
    cells = tuple(lam.cells())
    index = {c: k for k, c in enumerate(cells)}
    non: dict[tuple[int, ...], int] = defaultdict(int)
    inter: dict[tuple[int, ...], int] = defaultdict(int)
    for d in enumerate_h_rims(lam):
        choices = [list(combinations_with_replacement(range(1, N + 1), len(rib))) for rib in d.ribbons]
        for hs in product(*choices):
            point_sets = [_path_points(r + 1 - i, h, N) for i, h in enumerate(hs, 1)]
            crossing = False
            seen: set[tuple[int, int]] = set()
            for pts in point_sets:
                if seen & pts:
                    crossing = True
                    break
                seen |= pts
            key = [0] * len(cells)
            for rib, h in zip(d.ribbons, hs):
                for c, hh in zip(rib, h):
                    key[index[c]] = hh
            (inter if crossing else non)[tuple(key)] += d.sign
    return PatternCensus(cells, dict(non), dict(inter), n)


def diag_permuted(t: VarTableau, restricted: bool = False) -> list[VarTableau]:
    """Every tableau obtained by permuting symbols within each diagonal."""
    from .jacobitrudi import diagonal_tableaux

    return diagonal_tableaux(t, restricted=restricted)


def verify_path_identity(t: VarTableau, a: Assignment, N: int, budget: int = DEFAULT_PATTERN_BUDGET,
                         tol: float = DEFAULT_TOLERANCE) -> VerificationReport:
    """Check ζ^N_λ = X^N_λ - X^N_{λ,1} and the vanishing of Σ_diag X^N_{λ,1}."""
    start = time.perf_counter()
    mode = assignment_mode(a)
    census = h_pattern_census(t.shape, N, budget)
    zeta = schur_zeta_trunc(t, a, N)
    x_main = rim_alt_sum(t, a, N, "H")
    x_err = census.evaluate("inter", t, a, N)
    non = census.evaluate("non", t, a, N)
    perms = diag_permuted(t)
    diag_err = sum((census.evaluate("inter", tp, a, N) for tp in perms), 0 * x_err)
    ok_non, _, _ = compare_values(non, zeta, mode, tol)
    # the error sum should vanish; in float mode judge it against ζ itself
    ok_diag = diag_err == 0 if mode == "exact" else abs(diag_err) <= tol * len(perms) * abs(zeta)
    rep = VerificationReport.build(
        identity="path_identity", shape=t.shape, N=N, mode=mode,
        lhs=zeta, rhs=x_main - x_err, tol=tol,
        term_counts={"patterns": census.n_patterns, "rim_decompositions": len(enumerate_h_rims(t.shape)),
                     "sum_diag": len(perms)},
        start=start,
        details={"non_intersecting_equals_zeta": ok_non, "sum_diag_error_vanishes": ok_diag,
                 "X": x_main, "X_1": x_err, "sum_diag_X_1": diag_err,
                 "X_1_terms": [[c, m] for c, m in census.symbolic("inter", t)]},
    )
    rep.passed = rep.passed and ok_non and ok_diag
    rep.status = "pass" if rep.passed else "fail"
    return rep
