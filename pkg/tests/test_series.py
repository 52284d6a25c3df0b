from fractions import Fraction
from itertools import combinations, combinations_with_replacement

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from schurmzf.series import (AssignmentError, MixedModeError, VarTableau, exponent_mode,
                             mzv_star_trunc, mzv_trunc, region_check, schur_poly_oracle,
                             schur_zeta_brute, schur_zeta_trunc)

from conftest import partitions

words = st.lists(st.integers(0, 3), min_size=0, max_size=4)


def chain_oracle(word, N, strict):
    chains = combinations(range(1, N + 1), len(word)) if strict else \
        combinations_with_replacement(range(1, N + 1), len(word))
    total = Fraction(0)
    for ns in chains:
        term = Fraction(1)
        for n, s in zip(ns, word):
            term /= n ** s
        total += term
    return total


def test_small_values():
    assert mzv_star_trunc((2,), 2) == Fraction(5, 4)
    assert mzv_trunc((1, 1), 2) == Fraction(1, 2)
    assert mzv_star_trunc((2, 2), 2) == Fraction(21, 16)
    assert mzv_trunc((2, 2), 2) == Fraction(1, 4)
    assert mzv_trunc((), 3) == 1
    assert mzv_trunc((1, 1, 1), 2) == 0


@given(words, st.integers(0, 6))
def test_chain_sums_match_brute_force(word, N):
    assert mzv_star_trunc(word, N) == chain_oracle(word, N, strict=False)
    assert mzv_trunc(word, N) == chain_oracle(word, N, strict=True)


def test_mode_rules():
    assert exponent_mode([1, 2]) == "exact"
    assert exponent_mode([1.5, 2j]) == "float"
    with pytest.raises(MixedModeError):
        exponent_mode([1, 2.0])
    with pytest.raises(TypeError):
        exponent_mode([True])
    with pytest.raises(ValueError):
        mzv_trunc((-1,), 3)
    assert isinstance(mzv_trunc((2,), 3), Fraction)
    assert isinstance(mzv_trunc((2.0,), 3), complex)


@given(st.lists(st.integers(1, 3), min_size=1, max_size=4), st.integers(1, 5))
def test_float_mode_agrees_with_exact(word, N):
    exact = mzv_star_trunc(word, N)
    approx = mzv_star_trunc([complex(s) for s in word], N)
    assert abs(approx - float(exact)) <= 1e-12 * max(1.0, float(exact))


@given(st.lists(st.integers(0, 3), min_size=1, max_size=4), st.integers(0, 5))
def test_row_and_column_shapes_are_mzv(word, N):
    row = VarTableau((tuple(f"x{i}" for i in range(len(word))),))
    a = {f"x{i}": s for i, s in enumerate(word)}
    assert schur_zeta_trunc(row, a, N) == mzv_star_trunc(word, N)
    assert schur_zeta_trunc(row.transpose(), a, N) == mzv_trunc(word, N)


@settings(max_examples=40, deadline=None)
@given(partitions(max_size=5), st.integers(0, 3), st.data())
def test_transfer_matches_enumeration(lam, N, data):
    t = VarTableau.standard(lam)
    a = {x: data.draw(st.integers(0, 3)) for x in t.symbols()}
    assert schur_zeta_trunc(t, a, N) == schur_zeta_brute(t, a, N)


@settings(max_examples=30, deadline=None)
@given(partitions(max_size=6), st.sampled_from([2, 3]), st.integers(1, 6))
def test_constant_exponents_give_schur_polynomial(lam, s, N):
    t = VarTableau.standard(lam)
    a = {x: s for x in t.symbols()}
    assert schur_zeta_trunc(t, a, N) == schur_poly_oracle(lam, s, N)


def test_complex_exponents():
    t = VarTableau.standard((2, 1))
    a = {x: complex(2, 0.5) for x in t.symbols()}
    v = schur_zeta_trunc(t, a, 5)
    assert abs(v - schur_zeta_brute(t, a, 5)) < 1e-13
    assert abs(v - schur_poly_oracle((2, 1), complex(2, 0.5), 5)) < 1e-13


def test_empty_shape_is_one():
    assert schur_zeta_trunc(VarTableau(()), {}, 4) == 1


def test_tableau_helpers():
    t = VarTableau.standard((3, 1))
    assert t.rows == (("s11", "s12", "s13"), ("s21",))
    assert str(t) == "s11 s12 s13 / s21"
    assert t.transpose().rows == (("s11", "s21"), ("s12",), ("s13",))
    assert t.transpose().transpose() == t
    assert VarTableau.from_json(t.to_json()) == t
    assert VarTableau.standard((10,))[(1, 10)] == "s1_10"
    with pytest.raises(KeyError):
        t[(2, 2)]
    with pytest.raises(ValueError):
        VarTableau.from_json({"shape": [2], "rows": [["a"]]})
    with pytest.raises(ValueError):
        VarTableau((("a",), ("b", "c")))


def test_missing_symbol():
    t = VarTableau.standard((2,))
    with pytest.raises(AssignmentError):
        schur_zeta_trunc(t, {"s11": 2}, 3)


def test_region_check():
    t = VarTableau.standard((2, 1))
    assert region_check(t, {"s11": 1, "s12": 2, "s21": 2}, "W")
    assert not region_check(t, {"s11": 1, "s12": 1, "s21": 2}, "W")
    assert not region_check(t, {"s11": 0.5, "s12": 2.0, "s21": 2.0}, "W")
