"""The pairing set M(G), its Fourier matrix, and triple counting.

M(G) is the set of pairs (x, sigma) with x a conjugacy-class
representative and sigma an irreducible character of the centralizer
Z(x).  The matrix entry at ((x, sigma), (y, tau)) is

    sum over g with x(gyg^{-1}) = (gyg^{-1})x of
        tau(g^{-1} x^{-1} g) sigma(g y g^{-1}) / (|Z(x)| |Z(y)|)

computed in exact cyclotomic arithmetic.  The index order is
deterministic: classes by (size, least representative), characters in
their table's (degree, lexicographic values) order.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .chartable import CharacterTable, character_table
from .cyclotomic import Cyclotomic
from .errors import InvalidPair, NotAClass
from .groups import FiniteGroup, class_index


@dataclass(frozen=True)
class MPair:
    """One element of M(G): a class (by index and representative) and a
    character index into the centralizer's table."""

    class_idx: int
    rep: int
    char_idx: int


class _Local:
    """Per-class data: centralizer, its table, and parent-element lookup."""

    def __init__(self, group: FiniteGroup, rep: int):
        self.rep = rep
        self.centralizer = group.centralizer(rep)
        self.table = character_table(self.centralizer)
        to_local = {pid: i for i, pid in enumerate(self.centralizer.parent_ids)}
        self.parent_class = {
            pid: self.centralizer.class_of(local) for pid, local in to_local.items()
        }

    def char_value(self, char_idx: int, parent_element: int) -> Cyclotomic:
        return self.table.rows[char_idx][self.parent_class[parent_element]]


_LOCALS: dict[int, list[_Local]] = {}


def _locals_for(group: FiniteGroup) -> list[_Local]:
    found = _LOCALS.get(id(group))
    if found is not None and found and found[0].centralizer.parent is group:
        return found
    classes = group.conjugacy_classes()
    built = [_Local(group, c[0]) for c in classes]
    _LOCALS[id(group)] = built
    return built


def m_set(group: FiniteGroup) -> list[MPair]:
    pairs = []
    for ci, loc in enumerate(_locals_for(group)):
        for chi in range(loc.table.n_classes):
            pairs.append(MPair(ci, loc.rep, chi))
    return pairs


def pairing_entry(group: FiniteGroup, m1: MPair, m2: MPair) -> Cyclotomic:
    locals_ = _locals_for(group)
    for m in (m1, m2):
        if not (0 <= m.class_idx < len(locals_)):
            raise InvalidPair(f"{m} refers to no conjugacy class")
        if not (0 <= m.char_idx < locals_[m.class_idx].table.n_classes):
            raise InvalidPair(f"{m} refers to no centralizer character")
        if locals_[m.class_idx].rep != m.rep:
            raise InvalidPair(f"{m} representative mismatch")
    lx, ly = locals_[m1.class_idx], locals_[m2.class_idx]
    tally = _class_pair_tally(group, m1.class_idx, m2.class_idx)
    acc = Cyclotomic.zero()
    for (cx, cy), count in tally.items():
        acc = acc + lx.table.rows[m1.char_idx][cx] * ly.table.rows[m2.char_idx][cy] * count
    return acc / (lx.centralizer.size * ly.centralizer.size)


_TALLIES: dict[tuple[int, int, int], dict] = {}


def _class_pair_tally(group: FiniteGroup, ci: int, cj: int) -> dict:
    """For classes x-rep=ci, y-rep=cj: counts of (class of gyg^-1 in Z(x),
    class of g^-1 x^-1 g in Z(y)) over all g making x and gyg^-1 commute."""
    key = (id(group), ci, cj)
    cached = _TALLIES.get(key)
    if cached is not None:
        return cached
    locals_ = _locals_for(group)
    lx, ly = locals_[ci], locals_[cj]
    x, y = lx.rep, ly.rep
    x_inv = group.inv(x)
    tally: dict[tuple[int, int], int] = {}
    for g in range(group.size):
        g_inv = group.inv(g)
        h = group.mult(g, group.mult(y, g_inv))
        if group.mult(x, h) != group.mult(h, x):
            continue
        u = group.mult(g_inv, group.mult(x_inv, g))
        k = (lx.parent_class[h], ly.parent_class[u])
        tally[k] = tally.get(k, 0) + 1
    _TALLIES[key] = tally
    return tally


def pairing_matrix(group: FiniteGroup) -> list[list[Cyclotomic]]:
    pairs = m_set(group)
    return [[pairing_entry(group, a, b) for b in pairs] for a in pairs]


def matrix_is_involutive(matrix) -> bool:
    """M @ M equals the identity, exactly."""
    n = len(matrix)
    cols = list(zip(*matrix))
    for i in range(n):
        for j in range(n):
            acc = Cyclotomic.zero()
            for a, b in zip(matrix[i], cols[j]):
                acc = acc + a * b
            if acc != (1 if i == j else 0):
                return False
    return True


def matrix_is_unitary(matrix) -> bool:
    """M @ conj(M)^T equals the identity, exactly."""
    n = len(matrix)
    for i in range(n):
        for j in range(n):
            acc = Cyclotomic.zero()
            for a, b in zip(matrix[i], matrix[j]):
                acc = acc + a * b.conjugate()
            if acc != (1 if i == j else 0):
                return False
    return True


def matrix_is_hermitian(matrix) -> bool:
    n = len(matrix)
    return all(
        matrix[i][j] == matrix[j][i].conjugate() for i in range(n) for j in range(n)
    )


def fourier_checks(group: FiniteGroup) -> dict:
    matrix = pairing_matrix(group)
    return {
        "size": len(matrix),
        "involutive": matrix_is_involutive(matrix),
        "unitary": matrix_is_unitary(matrix),
        "hermitian": matrix_is_hermitian(matrix),
    }


# ---------------------------------------------------------------------------
# tensor structure for (Z/2)^n


def _f2n_coordinates(group: FiniteGroup, pair: MPair, gens: list[int]) -> list[int]:
    """Map an M((Z/2)^n) pair to per-factor M(Z/2) indices.

    Element side: x = product of generators g_i over i in S.
    Character side: sigma(g_i) = -1 exactly for i in T.
    Factor i maps to the M(Z/2) index of (x_i, sigma_i) where
    x_i = g if i in S else e, sigma_i = sign if i in T else trivial;
    M(Z/2) is ordered (e, sign), (e, triv), (g, sign), (g, triv).
    """
    loc = _locals_for(group)[pair.class_idx]
    x_perm = group.perms[loc.rep]
    coords = []
    for i, gid in enumerate(gens):
        g_perm = group.perms[gid]
        moved = next(pt for pt in range(len(g_perm)) if g_perm[pt] != pt)
        in_s = x_perm[moved] != moved
        sigma_at_gi = loc.char_value(pair.char_idx, gid)
        in_t = sigma_at_gi == -1
        coords.append(2 * int(in_s) + int(not in_t))
    return coords


def f2n_tensor_check(n: int) -> bool:
    """Whether M((Z/2)^n) factors entrywise through the Z/2 matrix."""
    z2 = FiniteGroup.cyclic(2)
    base = pairing_matrix(z2)
    big = FiniteGroup.elementary_abelian_2(n)
    matrix = pairing_matrix(big)
    pairs = m_set(big)
    gens = list(big.generator_ids)
    coords = [_f2n_coordinates(big, p, gens) for p in pairs]
    # sanity: Z/2 m_set order is (e,sign),(e,triv),(g,sign),(g,triv)
    z2_pairs = m_set(z2)
    assert [p.class_idx for p in z2_pairs] == [0, 0, 1, 1]
    for a in range(len(pairs)):
        for b in range(len(pairs)):
            expected = Cyclotomic.one()
            for i in range(n):
                expected = expected * base[coords[a][i]][coords[b][i]]
            if matrix[a][b] != expected:
                return False
    return True


# ---------------------------------------------------------------------------
# triple counting


def burnside_triple_count(group: FiniteGroup, ca: int, cb: int, cc: int) -> int:
    """#{(a,b,c) in Ca x Cb x Cc : abc = 1} via the character-sum formula."""
    ca, cb, cc = (class_index(group, c) for c in (ca, cb, cc))
    classes = group.conjugacy_classes()
    table = character_table(group)
    acc = Cyclotomic.zero()
    for degree, row in zip(table.degrees, table.rows):
        acc = acc + row[ca] * row[cb] * row[cc] / degree
    total = acc * Fraction(
        len(classes[ca]) * len(classes[cb]) * len(classes[cc]), group.size
    )
    if not total.is_rational():
        raise AssertionError("triple count came out irrational")
    value = total.as_fraction()
    if value.denominator != 1 or value < 0:
        raise AssertionError(f"triple count {value} is not a nonnegative integer")
    return int(value)


def brute_force_triple_count(group: FiniteGroup, ca: int, cb: int, cc: int) -> int:
    ca, cb, cc = (class_index(group, c) for c in (ca, cb, cc))
    classes = group.conjugacy_classes()
    count = 0
    for a in classes[ca]:
        for b in classes[cb]:
            c = group.inv(group.mult(a, b))
            if group.class_of(c) == cc:
                count += 1
    return count
