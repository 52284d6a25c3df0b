"""The acceptance battery: eleven numbered checks with time limits."""
from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Callable

from .combinatorics import Partition, count_ssyt_oracle, enumerate_ssyt, partitions_of
from .jacobitrudi import (diagonal_constant_tableau, verify_extended_jt, verify_lemma_diag,
                          verify_star_nonstar, verify_truncated_jt)
from .pieri import error_specialization, pieri_error, push_e, push_h, verify_pieri
from .rims import h_pattern_census
from .series import VarTableau, mzv_star_trunc, mzv_trunc, schur_poly_oracle, schur_zeta_trunc

SEED = 20240607


@dataclass
class CriterionResult:
    number: int
    title: str
    passed: bool
    elapsed_s: float
    limit_s: float
    checks: int = 0
    notes: dict = field(default_factory=dict)

    def line(self) -> str:
        flag = "PASS" if self.passed else "FAIL"
        return (f"[{flag}] criterion {self.number:2d}: {self.title} "
                f"({self.checks} checks, {self.elapsed_s:.2f}s / {self.limit_s:.0f}s)")

    def to_dict(self) -> dict:
        return {"criterion": self.number, "title": self.title, "pass": self.passed,
                "elapsed_s": round(self.elapsed_s, 3), "limit_s": self.limit_s,
                "checks": self.checks, "notes": self.notes}


def _random_assignment(symbols, rng: random.Random, values=(1, 2, 3)) -> dict[str, int]:
    return {x: rng.choice(values) for x in symbols}


# -- the criteria ---------------------------------------------------------------

def truncated_jt() -> tuple[int, list]:
    rng = random.Random(SEED + 1)
    failures = []
    n = 0
    for shape in ((2, 2), (3, 2), (3, 2, 1), (2, 2, 1)):
        t = diagonal_constant_tableau(shape)
        for N in (2, 3, 4):
            for _ in range(3):
                a = _random_assignment(t.symbols(), rng)
                for flavor in ("H", "E"):
                    n += 1
                    if not verify_truncated_jt(t, a, N, flavor).passed:
                        failures.append((shape, N, flavor, a))
    return n, failures


def lemma_diag() -> tuple[int, list]:
    rng = random.Random(SEED + 2)
    failures = []
    n = 0
    for size in range(1, 8):
        for lam in partitions_of(size):
            t = VarTableau.standard(lam)
            a = _random_assignment(t.symbols(), rng)
            for flavor in ("H", "E"):
                n += 1
                if not verify_lemma_diag(t, a, 3, flavor).passed:
                    failures.append((tuple(lam), flavor, a))
    return n, failures


def path_error_example() -> tuple[int, list]:
    t = VarTableau((("a", "b"), ("c", "d")))
    census = h_pattern_census((2, 2), 2)
    failures = []
    n = 0
    for a in ({"a": 2, "b": 3, "c": 1, "d": 4}, {"a": 3, "b": 1, "c": 2, "d": 2},
              {"a": 2, "b": 1, "c": 3, "d": 2}):
        n += 1
        got = census.evaluate("inter", t, a, 2)
        want = Fraction(1, 2 ** a["d"]) - Fraction(1, 2 ** a["a"])
        if got != want or (a["a"] == a["d"]) != (got == 0):
            failures.append((a, got, want))
    return n, failures


def _display(a: int | complex, b, c, d, N: int):
    zs, z = mzv_star_trunc, mzv_trunc
    lhs = (zs((a, b), N) * zs((c, d), N) - zs((a,), N) * zs((c, d, b), N)
           + zs((d, b), N) * zs((c, a), N) - zs((d,), N) * zs((c, a, b), N))
    rhs = (z((a, c), N) * z((b, d), N) - z((a,), N) * z((b, d, c), N)
           + z((d, c), N) * z((b, a), N) - z((d,), N) * z((b, a, c), N))
    return lhs, rhs


def four_variable_identity() -> tuple[int, list]:
    failures = []
    n = 0
    t = VarTableau((("a", "b"), ("c", "d")))
    for vals in ((2, 3, 1, 4), (3, 2, 2, 5), (1, 1, 2, 3)):
        a = dict(zip("abcd", vals))
        for N in range(2, 7):
            n += 2
            lhs, rhs = _display(*vals, N)
            if lhs != rhs:
                failures.append(("display", vals, N))
            if not verify_star_nonstar(t, a, N).passed:
                failures.append(("determinants", vals, N))
    for vals in ((2, 3, 2, 4), (3, 2, 2, 5), (2.5, 2, 3, 2)):
        v = [complex(x) for x in vals]
        sides = {N: _display(*v, N) for N in (10, 20, 40)}
        n += 2
        for N, (lhs, rhs) in sides.items():
            if abs(lhs - rhs) > 1e-8 * max(abs(lhs), abs(rhs)):
                failures.append(("float", vals, N))
        steps = [abs(sides[20][0] - sides[10][0]), abs(sides[40][0] - sides[20][0])]
        if not steps[1] < steps[0]:
            failures.append(("trend", vals, steps))
    return n, failures


def extended_jt() -> tuple[int, list]:
    rng = random.Random(SEED + 4)
    cases = [("mn", (3, 2)), ("mn1x", (3, 2, 1)), ("mn2x", (3, 2, 2)),
             ("e_x2n1", (2, 2, 1)), ("e_x2n1", (3, 2, 1)), ("e_x22n1", (3, 3, 1))]
    failures = []
    for family, shape in cases:
        t = VarTableau.standard(shape)
        a = _random_assignment(t.symbols(), rng)
        rep = verify_extended_jt(family, t, a, 4)
        if not rep.passed:
            failures.append((family, shape, a))
    return len(cases), failures


U_H_321 = [
    [["z1", "z2", "s13"], ["s11", "s12"], ["s21", "s22"], ["s31"]],
    [["z1", "s12", "z2"], ["s11", "s22", "s13"], ["s21"], ["s31"]],
    [["z1", "s12", "s13", "z2"], ["s11", "s22"], ["s21"], ["s31"]],
    [["s11", "z1", "z2"], ["s21", "s12", "s13"], ["s31", "s22"]],
    [["s11", "z1", "s13", "z2"], ["s21", "s12"], ["s31", "s22"]],
    [["s11", "s12", "z1", "z2"], ["s21", "s22", "s13"], ["s31"]],
    [["s11", "s12", "s13", "z1", "z2"], ["s21", "s22"], ["s31"]],
]
U_E_321 = [
    [["z1", "s11", "s12", "s13"], ["z2", "s21", "s22"], ["s31"]],
    [["z1", "s11", "s12", "s13"], ["s21", "s22"], ["z2", "s31"]],
    [["z1", "s11", "s12", "s13"], ["s21", "s22"], ["s31"], ["z2"]],
    [["s11", "s12", "s13"], ["z1", "s21", "s22"], ["z2", "s31"]],
    [["s11", "s12", "s13"], ["z1", "s21", "s22"], ["s31"], ["z2"]],
    [["s11", "s12", "s13"], ["s21", "s22"], ["z1", "s31"], ["z2"]],
    [["s11", "s12", "s13"], ["s21", "s22"], ["s31"], ["z1"], ["z2"]],
]


def push_fidelity() -> tuple[int, list]:
    t = VarTableau.standard((3, 2, 1))
    failures = []
    for name, fn, want in (("U_H", push_h, U_H_321), ("U_E", push_e, U_E_321)):
        got = [o.to_json()["rows"] for o in fn(t, ["z1", "z2"])]
        if got != want:
            failures.append((name, got))
    return 2, failures


def hook_pieri() -> tuple[int, list]:
    cases = [("hook_h", {"ell": 2, "k": 1, "m": 1}), ("hook_h", {"ell": 2, "k": 2, "m": 2}),
             ("hook_e", {"ell": 1, "k": 2, "m": 1}), ("hook_e", {"ell": 2, "k": 2, "m": 2})]
    failures = []
    for kind, params in cases:
        rep = verify_pieri(kind, params, 4)
        if not rep.passed:
            failures.append((kind, params, rep.status))
    return len(cases), failures


def error_vanishing() -> tuple[int, list]:
    failures = []
    n = 0
    for k in (2, 3):
        for a_val in (2, 3):
            for free in ({"y1": 1, f"z{k}": 4}, {"y1": 3, f"z{k}": 2}):
                n += 1
                a = error_specialization("thm83", {"k": k}, a_val, free)
                if pieri_error("thm83", {"k": k}, a, 5) != 0:
                    failures.append(("thm83", k, a))
    for k, ell, m in ((2, 2, 3), (3, 1, 4), (2, 3, 2)):
        params = {"k": k, "ell": ell, "m": m}
        free = {f"y{j}": 1 + j % 3 for j in range(1, ell + 1)}
        free.update({f"z{j}": 2 + j % 3 for j in range(k, m + 1)})
        for a_val in (2, 3):
            n += 1
            a = error_specialization("cor216", params, a_val, free)
            if pieri_error("cor216", params, a, 5) != 0:
                failures.append(("cor216", params, a))
    generic = {"x1": 2, "x2": 3, "y1": 1, "z1": 4, "z2": 2}
    n += 1
    if pieri_error("thm83", {"k": 2}, generic, 5) == 0:
        failures.append(("generic thm83 unexpectedly zero", generic))
    return n, failures


def constant_pieri() -> tuple[int, list]:
    failures = []
    for flavor in ("H", "E"):
        rep = verify_pieri("constant_s", {"shape": (2, 1), "m": 2, "s": 2, "flavor": flavor}, 6)
        if not rep.passed:
            failures.append((flavor, rep.details))
    return 2, failures


def non_hook_pieri() -> tuple[int, list]:
    rep = verify_pieri("m2_hook_h", {"m": 3, "X": 3, "ell": 1}, 4)
    ok = rep.passed and rep.term_counts["sum_sym"] == 720
    return 1, [] if ok else [rep.status]


def oracle_battery() -> tuple[int, list]:
    failures = []
    pairs = [(lam, N) for lam in (p for n in range(1, 6) for p in partitions_of(n)) for N in (1, 2, 3)]
    pairs = pairs[:40]
    for lam, N in pairs:
        if sum(1 for _ in enumerate_ssyt(lam, N)) != count_ssyt_oracle(lam, N):
            failures.append(("ssyt", tuple(lam), N))
    n = len(pairs)
    for size in range(1, 7):
        for lam in partitions_of(size):
            t = VarTableau.standard(lam)
            for s in (2, 3):
                a = {x: s for x in t.symbols()}
                for N in range(1, 7):
                    n += 1
                    if schur_zeta_trunc(t, a, N) != schur_poly_oracle(lam, s, N):
                        failures.append(("identify", tuple(lam), s, N))
    return n, failures


CRITERIA: list[tuple[int, str, float, Callable[[], tuple[int, list]]]] = [
    (1, "truncated Jacobi-Trudi on diagonal-constant tableaux", 5, truncated_jt),
    (2, "diagonal symmetrization lemma, all |λ| <= 7", 30, lemma_diag),
    (3, "intersecting-pattern error for (2,2) at N=2", 1, path_error_example),
    (4, "extended Jacobi-Trudi families", 60, extended_jt),
    (5, "four-variable star/non-star identity", 30, four_variable_identity),
    (6, "pushing rule lists for (3,2,1), r=2", 1, push_fidelity),
    (7, "hook Pieri formulas", 60, hook_pieri),
    (8, "error terms vanish under specialization", 30, error_vanishing),
    (9, "constant-exponent Pieri", 10, constant_pieri),
    (10, "(3,2,1)·(1) with 720-term symmetrization", 120, non_hook_pieri),
    (11, "oracle battery", 30, oracle_battery),
]


def run_criterion(number: int) -> CriterionResult:
    for num, title, limit, fn in CRITERIA:
        if num == number:
            start = time.perf_counter()
            checks, failures = fn()
            elapsed = time.perf_counter() - start
            return CriterionResult(num, title, not failures and elapsed < limit, elapsed, limit,
                                   checks, {"failures": [repr(f) for f in failures[:10]]})
    raise ValueError(f"no criterion {number}")


def run_suite(numbers=None) -> list[CriterionResult]:
    return [run_criterion(num) for num, *_ in CRITERIA if numbers is None or num in numbers]
