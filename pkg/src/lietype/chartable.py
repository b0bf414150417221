"""Exact character tables of finite groups.

The table is found by simultaneous eigen-analysis of the class-sum
matrices.  The splitting runs over GF(p) for a prime p chosen with
p = 1 mod exponent(G) and p^2 > 4|G|, which makes the modular table a
faithful image of the complex one; eigenvalue multiplicities of each
representation are then below p, so the character values lift uniquely
to exact cyclotomic integers.  Row and column orthogonality of the
lifted table are verified exactly before it is returned.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt, lcm

from .cyclotomic import Cyclotomic
from .errors import TooLarge
from .gf import PrimeField, is_prime, smallest_primitive_root
from .groups import FiniteGroup
from .linalg import charpoly, kernel_basis, poly_eval, rref

MAX_TABLE_GROUP = 10**4


@dataclass(frozen=True)
class CharacterTable:
    group: FiniteGroup
    class_reps: tuple[int, ...]
    class_sizes: tuple[int, ...]
    degrees: tuple[int, ...]
    rows: tuple[tuple[Cyclotomic, ...], ...]

    @property
    def n_classes(self) -> int:
        return len(self.class_reps)

    def value(self, char_index: int, cls: int) -> Cyclotomic:
        return self.rows[char_index][cls]

    def to_json(self) -> dict:
        return {
            "classes": [
                {"representative": r, "size": s}
                for r, s in zip(self.class_reps, self.class_sizes)
            ],
            "degrees": list(self.degrees),
            "rows": [[v.to_json() for v in row] for row in self.rows],
        }


def _choose_prime(exponent: int, order: int) -> int:
    p = exponent + 1
    while True:
        if is_prime(p) and p * p > 4 * order and order % p:
            return p
        p += exponent


def _class_constants(group: FiniteGroup) -> list[list[list[int]]]:
    """a[i][j][k] = #{(u,v) in C_i x C_j : uv = rep_k}."""
    classes = group.conjugacy_classes()
    r = len(classes)
    a = [[[0] * r for _ in range(r)] for _ in range(r)]
    for k in range(r):
        z = classes[k][0]
        for u in range(group.size):
            i = group.class_of(u)
            j = group.class_of(group.mult(group.inv(u), z))
            a[i][j][k] += 1
    return a


def _coords_in_rref(vec, basis, pivots, F):
    coeffs = [vec[c] for c in pivots]
    residual = list(vec)
    for coef, row in zip(coeffs, basis):
        if coef:
            residual = [F.sub(x, F.mul(coef, y)) for x, y in zip(residual, row)]
    assert all(x == 0 for x in residual), "vector left the invariant subspace"
    return coeffs


def _split_joint_eigenvectors(mats, r, F):
    """Common eigenvectors of commuting semisimple matrices over GF(p)."""
    full = [[F.one if i == j else F.zero for j in range(r)] for i in range(r)]
    if r == 1:
        return [full[0]]
    spaces = [(full, list(range(r)))]  # (rref basis, pivot columns)
    finished = []
    for mat in mats:
        if not spaces:
            break
        next_spaces = []
        for basis, pivots in spaces:
            d = len(basis)
            images = [[F.zero] * d for _ in range(d)]
            for col, b in enumerate(basis):
                w = [F.zero] * r
                for row_i in range(r):
                    acc = F.zero
                    for t, x in zip(mat[row_i], b):
                        if t and x:
                            acc = F.add(acc, F.mul(t, x))
                    w[row_i] = acc
                # column col of the restricted matrix
                for row_j, c in enumerate(_coords_in_rref(w, basis, pivots, F)):
                    images[row_j][col] = c
            cp = charpoly(images, F)
            total = 0
            for lam in range(F.p):
                if poly_eval(cp, lam, F):
                    continue
                shifted = [
                    [F.sub(images[i][j], lam if i == j else 0) for j in range(d)]
                    for i in range(d)
                ]
                chunk = []
                for coord_vec in kernel_basis(shifted, F):
                    glob = [F.zero] * r
                    for c, b in zip(coord_vec, basis):
                        if c:
                            glob = [F.add(x, F.mul(c, y)) for x, y in zip(glob, b)]
                    chunk.append(glob)
                if not chunk:
                    continue
                total += len(chunk)
                reduced, piv = rref(chunk, F)
                reduced = reduced[: len(piv)]
                if len(reduced) == 1:
                    finished.append(reduced[0])
                else:
                    next_spaces.append((reduced, piv))
            assert total == d, "class-sum matrix failed to act semisimply"
        spaces = next_spaces
    assert not spaces, "splitting did not separate all characters"
    return finished


def _power_classes(group: FiniteGroup, rep: int, order: int) -> list[int]:
    """out[t] = conjugacy class of rep**t, for t = 0..order-1."""
    out = [group.class_of(group.identity)]
    cur = group.identity
    for _ in range(order - 1):
        cur = group.mult(cur, rep)
        out.append(group.class_of(cur))
    return out


_TABLES: dict[int, CharacterTable] = {}


def character_table(group: FiniteGroup) -> CharacterTable:
    cached = _TABLES.get(id(group))
    if cached is not None and cached.group is group:
        return cached

    if group.size > MAX_TABLE_GROUP:
        raise TooLarge(f"character tables are capped at groups of order {MAX_TABLE_GROUP}")

    classes = group.conjugacy_classes()
    r = len(classes)
    reps = [c[0] for c in classes]
    sizes = [len(c) for c in classes]
    orders = [group.order_of(g) for g in reps]
    exponent = lcm(*orders)
    p = _choose_prime(exponent, group.size)
    F = PrimeField(p)

    constants = _class_constants(group)
    mats = []
    for i in range(1, r):
        mats.append([[constants[i][j][k] % p for k in range(r)] for j in range(r)])

    raw = _split_joint_eigenvectors(mats, r, F)
    assert len(raw) == r
    omegas = []
    for v in raw:
        assert v[0] != 0
        scale = F.inv(v[0])
        omegas.append([F.mul(scale, x) for x in v])

    inv_class = [group.class_of(group.inv(g)) for g in reps]
    inv_sizes = [F.inv(s % p) for s in sizes]
    order_mod = group.size % p

    degrees = []
    modular_rows = []
    for omega in omegas:
        t = 0
        for j in range(r):
            t = (t + omega[j] * omega[inv_class[j]] * inv_sizes[j]) % p
        target = order_mod * F.inv(t) % p
        degree = next(d for d in range(1, isqrt(group.size) + 1) if d * d % p == target)
        degrees.append(degree)
        modular_rows.append([degree * omega[j] % p * inv_sizes[j] % p for j in range(r)])

    # exact lift: recover eigenvalue multiplicities of each rep element
    gamma = smallest_primitive_root(p)
    zeta_mod = pow(gamma, (p - 1) // exponent, p)
    power_maps = [_power_classes(group, reps[j], orders[j]) for j in range(r)]

    rows = []
    for degree, chi_mod in zip(degrees, modular_rows):
        row = []
        for j in range(r):
            o = orders[j]
            theta = pow(zeta_mod, exponent // o, p)
            inv_o = F.inv(o % p)
            value = Cyclotomic.zero()
            total = 0
            for k in range(o):
                m_k = 0
                for t in range(o):
                    m_k = (m_k + chi_mod[power_maps[j][t]] * pow(theta, (-t * k) % (p - 1), p)) % p
                m_k = m_k * inv_o % p
                assert m_k <= degree, "eigenvalue multiplicity exceeds the degree"
                total += m_k
                if m_k:
                    value = value + Cyclotomic.root_of_unity(o, k) * m_k
            assert total == degree, "eigenvalue multiplicities do not sum to the degree"
            row.append(value)
        rows.append(row)

    order_keys = sorted(
        range(r), key=lambda l: (degrees[l], tuple(v.sort_key() for v in rows[l]))
    )
    degrees = tuple(degrees[l] for l in order_keys)
    rows = tuple(tuple(rows[l]) for l in order_keys)

    table = CharacterTable(group, tuple(reps), tuple(sizes), degrees, rows)
    _verify_table(table)
    _TABLES[id(group)] = table
    return table


def _verify_table(table: CharacterTable) -> None:
    group = table.group
    n = table.n_classes
    assert sum(d * d for d in table.degrees) == group.size
    assert all(group.size % d == 0 for d in table.degrees)
    zero = Cyclotomic.zero()
    conj_rows = [[v.conjugate() for v in row] for row in table.rows]
    for a in range(n):
        for b in range(a, n):
            acc = zero
            for j in range(n):
                acc = acc + table.rows[a][j] * conj_rows[b][j] * table.class_sizes[j]
            expected = Cyclotomic.from_rational(group.size) if a == b else zero
            assert acc == expected, f"row orthogonality fails at ({a},{b})"
    for i in range(n):
        for j in range(i, n):
            acc = zero
            for a in range(n):
                acc = acc + table.rows[a][i] * conj_rows[a][j]
            if i == j:
                expected = Cyclotomic.from_rational(group.size // table.class_sizes[i])
            else:
                expected = zero
            assert acc == expected, f"column orthogonality fails at ({i},{j})"
