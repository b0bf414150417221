"""Weyl group tests.

Oracles here avoid the library's own code paths where it matters: group
orders come from closing permutation generators, ellipticity from the
parabolic-subgroup definition, Bruhat order from literal subword
enumeration.
"""

import random
from itertools import combinations

import pytest

from lietype.errors import MixedGroups, TooLarge, UnsupportedFamily, UnsupportedSpec
from lietype.polys import poly_eval
from lietype.weyl import BigPermutation, CoxeterSpec, WeylGroup, weyl_group


def perm_closure(gens):
    """Independent order oracle: close tuples under composition."""
    idn = tuple(range(len(gens[0])))
    seen = {idn}
    frontier = [idn]
    while frontier:
        nxt = []
        for p in frontier:
            for g in gens:
                q = tuple(p[x] for x in g)
                if q not in seen:
                    seen.add(q)
                    nxt.append(q)
        frontier = nxt
    return seen


SMALL_TYPES = ["A1", "A2", "A3", "B2", "B3", "D4", "G2"]


@pytest.mark.parametrize("name", SMALL_TYPES)
def test_order_matches_generated_permutation_group(name):
    g = weyl_group(name)
    gens = [tuple(p) for p in g.gen_perms]
    assert g.order == len(perm_closure(gens))
    assert len(g.enumerate()) == g.order


@pytest.mark.parametrize(
    "name,n_roots",
    [("A1", 2), ("A4", 20), ("B4", 32), ("C3", 18), ("D4", 24), ("G2", 12), ("F4", 48)],
)
def test_root_counts(name, n_roots):
    g = weyl_group(name)
    assert len(g.roots) == n_roots
    # positive roots come first and index + n_pos is the negative
    for i in range(g.n_pos):
        plus, minus = g.roots[i], g.roots[i + g.n_pos]
        assert all(c >= 0 for c in plus)
        assert tuple(-c for c in plus) == minus


def test_bc_same_internal_group():
    assert weyl_group("B3") is weyl_group("C3")
    assert CoxeterSpec("C", 4).internal_family == "B"


@pytest.mark.parametrize(
    "family,rank",
    [("A", 0), ("B", 1), ("D", 3), ("E", 5), ("E", 9), ("F", 3), ("G", 4), ("H", 3)],
)
def test_unsupported_specs_rejected(family, rank):
    with pytest.raises(UnsupportedSpec):
        CoxeterSpec(family, rank)


@pytest.mark.parametrize("name", SMALL_TYPES)
def test_length_is_inversion_count_and_word_reduced(name):
    g = weyl_group(name)
    for w in g.enumerate():
        word = w.word
        assert len(word) == w.length
        assert g.element_from_word(word) == w
        # length counts positive roots sent negative
        sent_negative = sum(
            1 for i in range(g.n_pos) if w.perm[i] >= g.n_pos
        )
        assert sent_negative == w.length


def test_shortlex_word_is_lex_minimal_among_reduced_words():
    g = weyl_group("B2")

    def all_reduced_words(w):
        if w.is_identity:
            return [()]
        out = []
        for j in w.descents("left"):
            rest = g.simple_reflections[j - 1] * w
            out.extend((j,) + t for t in all_reduced_words(rest))
        return out

    for w in g.enumerate():
        assert w.word == min(all_reduced_words(w))


@pytest.mark.parametrize("name", SMALL_TYPES)
def test_descents_match_length_drop(name):
    g = weyl_group(name)
    for w in g.enumerate():
        for j, s in enumerate(g.simple_reflections, start=1):
            assert (j in w.descents("right")) == ((w * s).length < w.length)
            assert (j in w.descents("left")) == ((s * w).length < w.length)


@pytest.mark.parametrize("name", SMALL_TYPES)
def test_group_axioms_sampled(name):
    g = weyl_group(name)
    els = g.enumerate()
    rng = random.Random(7)
    for _ in range(200):
        a, b = rng.choice(els), rng.choice(els)
        assert (a * b).inverse() == b.inverse() * a.inverse()
    for w in els:
        assert w * w.inverse() == g.identity


def test_mixed_groups_rejected():
    a = weyl_group("A2").identity
    b = weyl_group("B2").identity
    with pytest.raises(MixedGroups):
        a * b


def test_too_large_enumeration():
    with pytest.raises(TooLarge):
        weyl_group("E7").enumerate(bound=1000)


# -- characteristic polynomials ------------------------------------------


@pytest.mark.parametrize("name", SMALL_TYPES)
def test_charpoly_basics(name):
    g = weyl_group(name)
    for w in g.enumerate():
        cp = w.char_poly()
        assert len(cp) == g.rank + 1 and cp[-1] == 1
        assert cp[0] in (1, -1)  # det(-w) = +-1
        factored = w.char_poly_factored()
        from lietype.polys import cyclotomic, poly_mul

        prod = [1]
        for d, mult in factored.items():
            for _ in range(mult):
                prod = poly_mul(prod, list(cyclotomic(d)))
        assert prod == cp


@pytest.mark.parametrize("name", ["A3", "B3", "G2"])
def test_charpoly_constant_on_classes(name):
    g = weyl_group(name)
    for cls in g.conjugacy_classes():
        polys = {tuple(w.char_poly()) for w in cls}
        assert len(polys) == 1


def test_longest_element_b2_is_minus_one():
    w0 = weyl_group("B2").longest_element
    assert w0.matrix() == [[-1, 0], [0, -1]]
    assert w0.char_poly_factored() == {2: 2}


@pytest.mark.parametrize(
    "name,n_classes", [("A3", 5), ("B2", 5), ("B3", 10), ("G2", 6), ("D4", 13)]
)
def test_class_counts(name, n_classes):
    assert len(weyl_group(name).conjugacy_classes()) == n_classes


# -- ellipticity ----------------------------------------------------------


@pytest.mark.parametrize("name", ["A3", "B3", "G2"])
def test_elliptic_matches_parabolic_definition(name):
    g = weyl_group(name)
    # oracle: w is elliptic iff its class avoids every proper parabolic W_J
    parabolic: set = set()
    n = g.rank
    for size in range(n):
        for J in combinations(range(n), size):
            seen = {g.identity.perm}
            frontier = [g.identity]
            while frontier:
                nxt = []
                for u in frontier:
                    for j in J:
                        v = u * g.simple_reflections[j]
                        if v.perm not in seen:
                            seen.add(v.perm)
                            nxt.append(v)
                frontier = nxt
            parabolic |= seen
    for cls in g.conjugacy_classes():
        meets = any(w.perm in parabolic for w in cls)
        for w in cls:
            assert w.is_elliptic() == (not meets)


def test_elliptic_iff_det_w_minus_one_nonzero():
    g = weyl_group("B3")
    for w in g.enumerate():
        assert w.is_elliptic() == (poly_eval(w.char_poly(), 1) != 0)


# -- Bruhat order ----------------------------------------------------------


def subword_elements(g, w):
    """Oracle: elements representable by subwords of one reduced word."""
    reached = {g.identity}
    for i in w.word:
        s = g.simple_reflections[i - 1]
        reached |= {u * s for u in reached}
    return reached


@pytest.mark.parametrize("name", ["A2", "A3", "B2", "G2"])
def test_bruhat_leq_matches_subword_oracle(name):
    g = weyl_group(name)
    els = g.enumerate()
    for w in els:
        below = subword_elements(g, w)
        for y in els:
            assert g.bruhat_leq(y, w) == (y in below)
        assert set(g.bruhat_interval(w)) == below


def test_bruhat_properties_b3_sampled():
    g = weyl_group("B3")
    els = g.enumerate()
    rng = random.Random(11)
    w0 = g.longest_element
    for _ in range(300):
        y, w = rng.choice(els), rng.choice(els)
        leq = g.bruhat_leq(y, w)
        if leq:
            assert y.length <= w.length
        assert g.bruhat_leq(y, w0)
        assert g.bruhat_leq(g.identity, w)
        # antisymmetry
        if leq and g.bruhat_leq(w, y):
            assert y == w


# -- big permutation models -------------------------------------------------


@pytest.mark.parametrize("name,degree", [("A3", 4), ("B3", 6), ("D4", 8)])
def test_big_permutation_is_injective_homomorphism(name, degree):
    g = weyl_group(name)
    els = g.enumerate()
    images = {w.to_big_permutation() for w in els}
    assert len(images) == g.order
    assert all(b.degree == degree for b in images)
    rng = random.Random(3)
    for _ in range(100):
        a, b = rng.choice(els), rng.choice(els)
        assert (a * b).to_big_permutation() == a.to_big_permutation() * b.to_big_permutation()


@pytest.mark.parametrize("name", ["B2", "B3", "D4"])
def test_bcd_images_commute_with_iota(name):
    g = weyl_group(name)
    for w in g.enumerate():
        assert w.to_big_permutation().commutes_with_iota()


def test_type_a_length_is_permutation_inversions():
    g = weyl_group("A3")
    for w in g.enumerate():
        assert w.length == w.to_big_permutation().inversions()


def test_big_permutation_unsupported_family():
    with pytest.raises(UnsupportedFamily):
        weyl_group("G2").identity.to_big_permutation()


def test_cycle_type_examples():
    assert BigPermutation((2, 4, 1, 3)).cycle_type() == (4,)
    assert BigPermutation((1, 2, 3)).cycle_type() == (1, 1, 1)
    b3 = weyl_group("B3")
    assert b3.longest_element.to_big_permutation().cycle_type() == (2, 2, 2)
    b2cox = weyl_group("B2").element_from_word([1, 2])
    assert b2cox.to_big_permutation().cycle_type() == (4,)


def test_element_text_roundtrip():
    g = weyl_group("B3")
    w = g.parse_element("s1 s2 s3 s2")
    assert w == g.element_from_word([1, 2, 3, 2])
    assert g.parse_element("e") == g.identity
    assert w.to_json() == {"word": list(w.word)}
