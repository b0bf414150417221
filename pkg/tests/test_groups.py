"""Tests for permutation-group construction and class structure."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lietype.errors import NotAClass, NotPermutation, TooLarge
from lietype.groups import (
    FiniteGroup,
    build_group,
    class_index,
    cycle_string,
    parse_cycles,
)


def test_s5_from_standard_generators():
    G = build_group(["(1,2)", "(1,2,3,4,5)"])
    assert G.size == 120


def test_centralizer_of_double_transposition_in_s5():
    G = FiniteGroup.symmetric(5)
    x = G._index[parse_cycles("(1,2)(3,4)", degree=5)]
    Z = G.centralizer(x)
    assert Z.size == 8
    assert G.size // len(G.conjugacy_classes()[G.class_of(x)]) == 8


def test_trivial_group():
    G = build_group([])
    assert G.size == 1
    assert G.mult(0, 0) == 0
    assert len(G.conjugacy_classes()) == 1


def test_not_permutation_errors():
    with pytest.raises(NotPermutation):
        build_group([(0, 0, 1)])
    with pytest.raises(NotPermutation):
        FiniteGroup.from_generators([(1, 0), (0, 2, 1)])
    with pytest.raises(NotPermutation):
        parse_cycles("(1,1)")
    with pytest.raises(NotPermutation):
        parse_cycles("nonsense")


def test_too_large():
    with pytest.raises(TooLarge):
        FiniteGroup.from_generators([(1, 0, 2, 3, 4), (1, 2, 3, 4, 0)], max_size=50)


def test_mixed_degree_generators_padded():
    G = build_group(["(1,2)", "(1,2,3)"])
    assert G.size == 6


def test_builtin_orders():
    assert FiniteGroup.symmetric(3).size == 6
    assert FiniteGroup.symmetric(4).size == 24
    assert FiniteGroup.alternating(4).size == 12
    assert FiniteGroup.alternating(5).size == 60
    assert FiniteGroup.cyclic(7).size == 7
    assert FiniteGroup.elementary_abelian_2(3).size == 8


def test_class_sizes_s4():
    G = FiniteGroup.symmetric(4)
    sizes = sorted(len(c) for c in G.conjugacy_classes())
    assert sizes == [1, 3, 6, 6, 8]


def test_class_sizes_a5():
    G = FiniteGroup.alternating(5)
    sizes = sorted(len(c) for c in G.conjugacy_classes())
    assert sizes == [1, 12, 12, 15, 20]


def test_class_order_deterministic():
    G = FiniteGroup.symmetric(4)
    classes = G.conjugacy_classes()
    assert classes[0] == (0,)
    assert [len(c) for c in classes] == sorted(
        (len(c) for c in classes),
    ) or all(
        (len(a), a[0]) <= (len(b), b[0]) for a, b in zip(classes, classes[1:])
    )


def test_class_size_times_centralizer_order():
    for G in (FiniteGroup.symmetric(4), FiniteGroup.alternating(5)):
        for c in G.conjugacy_classes():
            Z = G.centralizer(c[0])
            assert len(c) * Z.size == G.size


def test_centralizer_parent_ids_are_the_commuting_elements():
    G = FiniteGroup.symmetric(4)
    x = G._index[parse_cycles("(1,2,3,4)", degree=4)]
    Z = G.centralizer(x)
    assert Z.size == 4
    assert Z.parent is G
    assert all(G.commutes(g, x) for g in Z.parent_ids)
    # subgroup multiplication mirrors the parent's
    for a in range(Z.size):
        for b in range(Z.size):
            big = G.mult(Z.parent_ids[a], Z.parent_ids[b])
            assert Z.parent_ids[Z.mult(a, b)] == big


def test_orders_and_exponent():
    G = FiniteGroup.symmetric(5)
    assert G.exponent() == 60
    assert FiniteGroup.alternating(5).exponent() == 30
    assert FiniteGroup.symmetric(4).exponent() == 12
    assert FiniteGroup.elementary_abelian_2(3).exponent() == 2
    assert G.order_of(0) == 1


def test_inverse_and_identity():
    G = FiniteGroup.symmetric(4)
    for a in range(G.size):
        assert G.mult(a, G.inv(a)) == 0
        assert G.mult(0, a) == a
        assert G.mult(a, 0) == a


def test_cycle_notation_roundtrip():
    for text in ("e", "(1,2)", "(1,2)(3,4)", "(1,2,3,4,5)", "(2,4)(3,5,6)"):
        perm = parse_cycles(text)
        assert cycle_string(perm) == text or parse_cycles(cycle_string(perm)) == perm


def test_from_table_cyclic_and_relabeled_identity():
    n = 4
    shift = [[(a + b) % n for b in range(n)] for a in range(n)]
    G = FiniteGroup.from_table(shift)
    assert G.size == 4
    assert G.order_of(1) in (2, 4)
    # same table with elements relabeled so the identity is at position 2
    relab = [2, 1, 0, 3]
    inv = {v: k for k, v in enumerate(relab)}
    table = [[inv[(relab[a] + relab[b]) % n] for b in range(n)] for a in range(n)]
    H = FiniteGroup.from_table(table)
    assert H.size == 4
    assert sorted(H.order_of(a) for a in range(4)) == sorted(G.order_of(a) for a in range(4))


def test_from_table_rejects_non_groups():
    with pytest.raises(ValueError):
        FiniteGroup.from_table([[0, 1], [1, 1]])  # row not a bijection
    # binary operation with identity but not associative:
    # 0 is identity; on {1,2}: 1*1=0, 1*2=1, 2*1=2, 2*2=0 fails associativity
    bad = [[0, 1, 2], [1, 0, 1], [2, 2, 0]]
    with pytest.raises(ValueError):
        FiniteGroup.from_table(bad)


def test_regular_representation_matches_perm_group():
    S3 = FiniteGroup.symmetric(3)
    table = [[S3.mult(a, b) for b in range(6)] for a in range(6)]
    R = FiniteGroup.from_table(table)
    assert R.size == 6
    assert sorted(len(c) for c in R.conjugacy_classes()) == sorted(
        len(c) for c in S3.conjugacy_classes()
    )
    assert R.exponent() == S3.exponent()


def test_class_index_validation():
    G = FiniteGroup.symmetric(3)
    assert class_index(G, 0) == 0
    with pytest.raises(NotAClass):
        class_index(G, 17)
    with pytest.raises(NotAClass):
        class_index(G, "transpositions")


@settings(max_examples=25, deadline=None)
@given(st.sets(st.integers(0, 23), min_size=1, max_size=3))
def test_generated_subgroup_order_divides_group_order(ids):
    S4 = FiniteGroup.symmetric(4)
    H = FiniteGroup.from_generators([S4.perms[i] for i in ids])
    assert S4.size % H.size == 0
