import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from schurmzf.jacobitrudi import (diagonal_constant_tableau, diagonal_tableaux, family_of, jt,
                                  jt_matrix, jts, jts_matrix, jte_recursive, jtse_def,
                                  jtse_recursive, sum_diag, sum_diag_count, verify_extended_jt,
                                  verify_star_nonstar, verify_truncated_jt)
from schurmzf.series import VarTableau, schur_zeta_trunc

from conftest import partitions


def _random_assignment(t, seed, values=(1, 2, 3)):
    rng = random.Random(seed)
    return {x: rng.choice(values) for x in t.symbols()}


def test_star_matrix_of_431():
    t = VarTableau.standard((4, 3, 1))
    assert jts_matrix(t).dump().splitlines() == [
        "s11,s12,s13,s14 | s21,s22,s23,s13,s14 | s31,s21,s22,s23,s13,s14",
        "s11,s12 | s21,s22,s23 | s31,s21,s22,s23",
        "0 | 1 | s31",
    ]


def test_plain_matrix_of_431():
    t = VarTableau.standard((4, 3, 1))
    assert jt_matrix(t).dump().splitlines() == [
        "s11,s21,s31 | s12,s22,s21,s31 | s13,s23,s22,s21,s31 | s14,s13,s23,s22,s21,s31",
        "s11 | s12,s22 | s13,s23,s22 | s14,s13,s23,s22",
        "1 | s12 | s13,s23 | s14,s13,s23",
        "0 | 0 | 1 | s14",
    ]


def test_lower_entries_follow_row_lengths():
    d = jts_matrix(VarTableau.standard((3, 3, 3)))
    assert d.entries[1][0] == ("s11", "s12")
    assert d.entries[2][0] == ("s11",)
    assert d.entries[2][1] == ("s21", "s22")


@settings(max_examples=40, deadline=None)
@given(partitions(max_size=6), st.integers(1, 4), st.sampled_from(["H", "E"]), st.randoms())
def test_truncated_jt_on_diagonal_constant_tableaux(lam, N, flavor, rnd):
    t = diagonal_constant_tableau(lam)
    a = {x: rnd.choice((1, 2, 3)) for x in t.symbols()}
    assert verify_truncated_jt(t, a, N, flavor).passed


def test_generic_tableau_is_not_a_determinant():
    t = VarTableau.standard((3, 2, 1))
    a = _random_assignment(t, 3)
    assert schur_zeta_trunc(t, a, 4) != jts(t, a, 4)


def test_diagonal_tableaux():
    t = VarTableau.standard((3, 2, 2))
    perms = diagonal_tableaux(t)
    assert perms[0] == t
    assert len(perms) == sum_diag_count((3, 2, 2)) == 2 * 2
    assert len(set(perms)) == len(perms)
    assert len(diagonal_tableaux(VarTableau.standard((3, 3, 3)))) == 2 * 6 * 2
    assert len(diagonal_tableaux(VarTableau.standard((3, 3, 3)), restricted=True)) == 2 ** 3


def test_families():
    assert family_of((3, 2)) == ["mn", "mn1x", "mn2x", "e_x2n1"]
    assert "mn2x" in family_of((3, 2, 2))
    assert "e_x22n1" in family_of((3, 3, 1))
    with pytest.raises(ValueError):
        verify_extended_jt("mn", VarTableau.standard((3, 2, 1)), {}, 3)
    with pytest.raises(ValueError):
        verify_extended_jt("bogus", VarTableau.standard((3, 2)), {}, 3)


@pytest.mark.parametrize("family,shape", [
    ("mn", (2, 2)), ("mn", (3, 2)), ("mn", (4, 1)),
    ("mn1x", (3, 2, 1)), ("mn1x", (2, 2, 1, 1)),
    ("mn2x", (2, 2, 2)), ("mn2x", (3, 2, 2)), ("mn2x", (3, 3, 2, 2)),
    ("e_x2n1", (2, 2, 1)), ("e_x2n1", (3, 2, 1)),
    ("e_x22n1", (3, 3)), ("e_x22n1", (3, 3, 1)),
])
def test_extended_families_exact(family, shape):
    t = VarTableau.standard(shape)
    rep = verify_extended_jt(family, t, _random_assignment(t, hash(shape) % 97), 4)
    assert rep.passed, rep.summary()


def test_extended_family_float_mode():
    t = VarTableau.standard((3, 2, 2))
    a = {x: complex(v + 0.5, 0.1) for x, v in _random_assignment(t, 5).items()}
    assert verify_extended_jt("mn2x", t, a, 6, tol=1e-10).passed


@pytest.mark.parametrize("shape", [(2, 2, 2), (3, 2, 2), (3, 3, 2), (2, 2, 2, 2), (4, 3, 2, 2)])
def test_error_recursion_matches_definition(shape):
    t = VarTableau.standard(shape)
    a = _random_assignment(t, 11)
    assert jtse_recursive(t, a, 3) == jtse_def(t, a, 3, "H")
    u = t.transpose()
    assert jte_recursive(u, a, 3) == jtse_def(u, a, 3, "E")


def test_error_vanishes_on_two_rows_and_hooks():
    for shape in ((3, 2), (4, 1), (3, 2, 1), (2, 2, 1, 1)):
        t = VarTableau.standard(shape)
        assert jtse_def(t, _random_assignment(t, 2), 4) == 0


def test_error_needs_diagonal_sum():
    t = VarTableau.standard((2, 2, 2))
    a = _random_assignment(t, 13)
    err = jtse_def(t, a, 4)
    assert err != 0
    assert sum_diag(t, lambda u: schur_zeta_trunc(u, a, 4)) == \
        sum_diag(t, lambda u: jts(u, a, 4) + jtse_def(u, a, 4))


@pytest.mark.parametrize("shape", [(2, 2), (3, 2), (3, 2, 1), (4, 2, 1, 1)])
def test_star_and_plain_determinants_agree(shape):
    t = VarTableau.standard(shape)
    assert verify_star_nonstar(t, _random_assignment(t, 17), 4).passed


def test_star_nonstar_rejects_other_shapes():
    with pytest.raises(ValueError):
        verify_star_nonstar(VarTableau.standard((3, 3)), {}, 3)


def test_plain_determinant_is_column_analogue():
    d = diagonal_constant_tableau((3, 1))
    b = {x: 2 for x in d.symbols()}
    assert jt(d, b, 5) == schur_zeta_trunc(d, b, 5) == jts(d, b, 5)
