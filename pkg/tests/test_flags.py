"""Tests for complete flags, symplectic flags, and relative position."""

import itertools
import random

import pytest

from lietype.errors import DimensionMismatch, NotSymplectic, TooLarge
from lietype.flags import (
    Flag,
    SymplecticForm,
    enumerate_flags,
    flag_apply,
    flag_frobenius,
    gl_flag_count,
    make_flag,
    relative_position,
    sp_flag_count,
    span_contains,
    split_prime_power,
)
from lietype.gf import make_field
from lietype.linalg import rank

F2 = make_field(2, 1)
F3 = make_field(3, 1)
F4 = make_field(2, 2)
F9 = make_field(3, 2)


def nonzero_vectors(field, n):
    q = field.size
    out = []
    for code in range(1, q**n):
        v, rest = [], code
        for _ in range(n):
            rest, d = divmod(rest, q)
            v.append(d)
        out.append(tuple(v))
    return out


def adapted_bases(field, flag):
    """All ordered bases v_1..v_n with span(v_1..v_j) = V_j."""
    n = flag.ambient
    bases = [[]]
    for j in range(1, n + 1):
        step = flag.step(j)
        prev = flag.step(j - 1)
        fresh = [
            v
            for v in nonzero_vectors(field, n)
            if span_contains(field, step, v) and not span_contains(field, prev, v)
        ]
        bases = [b + [v] for b in bases for v in fresh]
    return bases


def rows_of(field, vectors):
    from lietype.flags import _rref_rows

    return _rref_rows(field, vectors)


def common_basis_witness(field, f1, f2, w):
    """Whether some basis adapted to f1 realizes f2 through the pattern w."""
    n = f1.ambient
    for basis in adapted_bases(field, f1):
        if all(
            rows_of(field, [basis[w(k) - 1] for k in range(1, i + 1)]) == f2.step(i)
            for i in range(1, n)
        ):
            return True
    return False


def test_flag_counts_match_hand_enumeration():
    assert len(enumerate_flags(2, F2)) == 3
    assert len(enumerate_flags(2, F4)) == 5
    lines = {rows_of(F2, [v]) for v in nonzero_vectors(F2, 2)}
    assert len(lines) == 3


def test_count_formulas():
    assert gl_flag_count(2, 2) == 3
    assert gl_flag_count(2, 4) == 5
    assert gl_flag_count(3, 2) == 21
    assert gl_flag_count(3, 3) == 52
    assert sp_flag_count(4, 2) == 45
    assert sp_flag_count(4, 4) == 425
    for n, field in [(2, F3), (3, F2), (3, F3)]:
        assert len(enumerate_flags(n, field)) == gl_flag_count(n, field.size)


def test_make_flag_canonicalizes():
    f = make_flag(F2, [[(1, 1)]])
    g = make_flag(F2, [[(1, 1), (0, 0)]])
    assert f == g
    assert f.steps == (((1, 1),),)


def test_make_flag_rejects_bad_chains():
    with pytest.raises(DimensionMismatch):
        make_flag(F2, [[(1, 0), (0, 1)]])
    with pytest.raises(DimensionMismatch):
        make_flag(F2, [[(1, 0, 0)], [(0, 1, 0), (0, 0, 1)]])


def test_step_boundaries():
    f = make_flag(F2, [[(1, 0)]])
    assert f.step(0) == ()
    assert f.step(2) == ((1, 0), (0, 1))


def test_symplectic_form_validation():
    with pytest.raises(NotSymplectic):
        SymplecticForm(3)
    form = SymplecticForm(4)
    gram = form.gram(F3)
    for i in range(4):
        for j in range(4):
            assert gram[i][j] == F3.neg(gram[j][i])
    assert rank(gram, F3) == 4


def test_symplectic_pair_matches_gram():
    form = SymplecticForm(4)
    gram = form.gram(F3)
    rng = random.Random(1)
    for _ in range(20):
        x = [rng.randrange(3) for _ in range(4)]
        y = [rng.randrange(3) for _ in range(4)]
        direct = form.pair(F3, x, y)
        via_gram = F3.zero
        for i in range(4):
            for j in range(4):
                via_gram = F3.add(via_gram, F3.mul(x[i], F3.mul(gram[i][j], y[j])))
        assert direct == via_gram


def test_perp_dimensions_and_involution():
    form = SymplecticForm(4)
    for f in enumerate_flags(4, F2, form=form):
        for i in range(1, 4):
            perp = form.perp(F2, f.step(i))
            assert len(perp) == 4 - i
            assert form.perp(F2, perp) == f.step(i)


def test_symplectic_flags_satisfy_perp_condition():
    form = SymplecticForm(4)
    flags = enumerate_flags(4, F2, form=form)
    assert len(flags) == 45
    for f in flags:
        assert f.step(1) != f.step(3)
        assert all(span_contains(F2, f.step(3), v) for v in f.step(1))
        assert f.step(3) == form.perp(F2, f.step(1))
        assert form.is_compatible(f)


def test_sp4_count_over_gf4():
    form = SymplecticForm(4)
    assert len(enumerate_flags(4, F4, form=form)) == 425


def test_enumeration_too_large():
    with pytest.raises(TooLarge):
        enumerate_flags(2, F2, max_count=2)


def test_relative_position_identity_and_swap():
    flags = enumerate_flags(3, F2)
    rng = random.Random(5)
    for f in flags:
        assert relative_position(f, f).images == (1, 2, 3)
    for f1, f2 in [(rng.choice(flags), rng.choice(flags)) for _ in range(30)]:
        w = relative_position(f1, f2)
        assert relative_position(f2, f1) == w.inverse()


def test_two_distinct_lines_are_transposed():
    flags = enumerate_flags(2, F3)
    for f1, f2 in itertools.combinations(flags, 2):
        assert relative_position(f1, f2).images == (2, 1)


def test_relative_position_mismatch_errors():
    f1 = enumerate_flags(2, F2)[0]
    f2 = enumerate_flags(3, F2)[0]
    with pytest.raises(DimensionMismatch):
        relative_position(f1, f2)
    form = SymplecticForm(4)
    bad = next(f for f in enumerate_flags(4, F2) if not form.is_compatible(f))
    good = enumerate_flags(4, F2, form=form)[0]
    with pytest.raises(NotSymplectic):
        relative_position(bad, good, form)


def test_common_basis_equivalence_exhaustive_n2():
    """The dimension-jump output matches the common-basis definition."""
    for field in (F2, F3):
        flags = enumerate_flags(2, field)
        for f1, f2 in itertools.product(flags, flags):
            w = relative_position(f1, f2)
            assert common_basis_witness(field, f1, f2, w)
            other = next(
                u for u in ((1, 2), (2, 1)) if u != w.images
            )
            from lietype.weyl import BigPermutation

            assert not common_basis_witness(field, f1, f2, BigPermutation(other))


def test_common_basis_equivalence_n3():
    from lietype.weyl import BigPermutation

    flags2 = enumerate_flags(3, F2)
    for f1, f2 in itertools.product(flags2[:7], flags2):
        w = relative_position(f1, f2)
        assert common_basis_witness(F2, f1, f2, w)
    rng = random.Random(11)
    flags3 = enumerate_flags(3, F3)
    for _ in range(25):
        f1, f2 = rng.choice(flags3), rng.choice(flags3)
        w = relative_position(f1, f2)
        assert common_basis_witness(F3, f1, f2, w)
        wrong = list(itertools.permutations((1, 2, 3)))
        wrong.remove(w.images)
        u = BigPermutation(rng.choice(wrong))
        assert not common_basis_witness(F3, f1, f2, u)


def test_schubert_cell_sizes():
    for n, field in [(2, F2), (2, F3), (3, F2), (3, F3)]:
        q = field.size
        flags = enumerate_flags(n, field)
        base = flags[0]
        tally = {}
        for f in flags:
            w = relative_position(base, f)
            tally[w] = tally.get(w, 0) + 1
        for w, count in tally.items():
            assert count == q ** w.inversions()


def test_gl_equivariance():
    rng = random.Random(3)
    flags = enumerate_flags(3, F3)
    for _ in range(5):
        while True:
            g = [[rng.randrange(3) for _ in range(3)] for _ in range(3)]
            if rank(g, F3) == 3:
                break
        for _ in range(10):
            f1, f2 = rng.choice(flags), rng.choice(flags)
            assert relative_position(flag_apply(g, f1), flag_apply(g, f2)) == (
                relative_position(f1, f2)
            )


def test_symplectic_relpos_commutes_with_iota():
    form = SymplecticForm(4)
    flags = enumerate_flags(4, F2, form=form)
    rng = random.Random(9)
    for _ in range(60):
        f1, f2 = rng.choice(flags), rng.choice(flags)
        assert relative_position(f1, f2, form).commutes_with_iota()


def test_frobenius_fixes_exactly_rational_flags():
    flags = enumerate_flags(2, F4)
    fixed = [f for f in flags if flag_frobenius(f, 2) == f]
    assert len(fixed) == 3
    for f in flags:
        assert flag_frobenius(flag_frobenius(f, 2), 2) == f


def test_frobenius_output_stays_reduced():
    for f in enumerate_flags(3, F4):
        g = flag_frobenius(f, 2)
        assert make_flag(F4, [list(step) for step in g.steps]) == g


def test_split_prime_power():
    assert split_prime_power(4) == (2, 2)
    assert split_prime_power(9) == (3, 2)
    assert split_prime_power(13) == (13, 1)
    with pytest.raises(ValueError):
        split_prime_power(12)
    with pytest.raises(ValueError):
        split_prime_power(1)
