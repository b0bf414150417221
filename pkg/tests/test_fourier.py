"""Tests for the pairing set M(G), its matrix, and triple counts."""

from fractions import Fraction

import pytest

from lietype.errors import InvalidPair, NotAClass
from lietype.fourier import (
    MPair,
    brute_force_triple_count,
    burnside_triple_count,
    f2n_tensor_check,
    fourier_checks,
    m_set,
    matrix_is_hermitian,
    matrix_is_involutive,
    matrix_is_unitary,
    pairing_entry,
    pairing_matrix,
)
from lietype.groups import FiniteGroup


def test_m_set_sizes():
    assert len(m_set(FiniteGroup.trivial())) == 1
    assert len(m_set(FiniteGroup.cyclic(2))) == 4
    assert len(m_set(FiniteGroup.symmetric(3))) == 8
    assert len(m_set(FiniteGroup.symmetric(4))) == 21


def test_trivial_group_matrix():
    M = pairing_matrix(FiniteGroup.trivial())
    assert len(M) == 1
    assert M[0][0] == 1


def test_z2_matrix_frozen():
    # order: (e,sign), (e,triv), (g,sign), (g,triv);
    # abelian case: entry((x,s),(y,t)) = s(y) t(x) / |G|
    M = pairing_matrix(FiniteGroup.cyclic(2))
    expected = [
        [1, 1, -1, -1],
        [1, 1, 1, 1],
        [-1, 1, 1, -1],
        [-1, 1, -1, 1],
    ]
    for i in range(4):
        for j in range(4):
            assert M[i][j] == Fraction(expected[i][j], 2)


def test_s3_identity_trivial_entry():
    G = FiniteGroup.symmetric(3)
    pairs = m_set(G)
    # locate (identity class, trivial character of Z(e)=S3)
    from lietype.chartable import character_table

    table = character_table(G)
    triv = next(i for i, row in enumerate(table.rows) if all(v == 1 for v in row))
    m = next(p for p in pairs if p.class_idx == 0 and p.char_idx == triv)
    assert pairing_entry(G, m, m) == Fraction(1, 6)


def test_invalid_pair_rejected():
    G = FiniteGroup.symmetric(3)
    with pytest.raises(InvalidPair):
        pairing_entry(G, MPair(99, 0, 0), MPair(0, 0, 0))
    with pytest.raises(InvalidPair):
        pairing_entry(G, MPair(0, 0, 99), MPair(0, 0, 0))
    with pytest.raises(InvalidPair):
        pairing_entry(G, MPair(0, 3, 0), MPair(0, 0, 0))


@pytest.mark.parametrize(
    "maker",
    [
        FiniteGroup.trivial,
        lambda: FiniteGroup.cyclic(2),
        lambda: FiniteGroup.elementary_abelian_2(2),
        lambda: FiniteGroup.symmetric(3),
        lambda: FiniteGroup.symmetric(4),
    ],
)
def test_matrix_involutive_unitary_hermitian(maker):
    checks = fourier_checks(maker())
    assert checks["involutive"]
    assert checks["unitary"]
    assert checks["hermitian"]


def test_f2n_tensor_structure():
    assert f2n_tensor_check(1)
    assert f2n_tensor_check(2)


def test_z3_matrix_is_complex_but_unitary():
    M = pairing_matrix(FiniteGroup.cyclic(3))
    assert len(M) == 9
    assert any(not v.is_rational() for row in M for v in row)
    assert matrix_is_involutive(M)
    assert matrix_is_unitary(M)
    assert matrix_is_hermitian(M)


def test_burnside_z2_example():
    G = FiniteGroup.cyclic(2)
    g_class = G.class_of(1)
    e_class = G.class_of(0)
    assert burnside_triple_count(G, g_class, g_class, e_class) == 1
    assert brute_force_triple_count(G, g_class, g_class, e_class) == 1


def test_burnside_s3_transpositions_make_three_cycles():
    G = FiniteGroup.symmetric(3)
    classes = G.conjugacy_classes()
    by_order = {G.order_of(c[0]): i for i, c in enumerate(classes)}
    n = burnside_triple_count(G, by_order[2], by_order[2], by_order[3])
    assert n == 6
    assert brute_force_triple_count(G, by_order[2], by_order[2], by_order[3]) == 6


@pytest.mark.parametrize(
    "maker", [lambda: FiniteGroup.symmetric(3), lambda: FiniteGroup.alternating(4)]
)
def test_burnside_matches_brute_force_everywhere(maker):
    G = maker()
    r = len(G.conjugacy_classes())
    for a in range(r):
        for b in range(r):
            for c in range(r):
                assert burnside_triple_count(G, a, b, c) == brute_force_triple_count(
                    G, a, b, c
                )


def test_burnside_a5_orders_2_3_5():
    G = FiniteGroup.alternating(5)
    classes = G.conjugacy_classes()
    c2 = next(i for i, c in enumerate(classes) if G.order_of(c[0]) == 2)
    c3 = next(i for i, c in enumerate(classes) if G.order_of(c[0]) == 3)
    c5 = next(i for i, c in enumerate(classes) if G.order_of(c[0]) == 5)
    value = burnside_triple_count(G, c2, c3, c5)
    assert value == brute_force_triple_count(G, c2, c3, c5)
    assert value == 60


def test_not_a_class_raises():
    G = FiniteGroup.symmetric(3)
    with pytest.raises(NotAClass):
        burnside_triple_count(G, 0, 1, 33)
