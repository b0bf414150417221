"""Complete flags over finite fields and relative position.

A flag stores the proper subspaces V_1 c ... c V_{n-1} of K^n, each as
a reduced-row-echelon basis matrix, so equal subspaces are syntactically
equal tuples.  The symplectic variant carries the alternating form with
Gram matrix antidiagonal (+1 above the middle, -1 below), and a complete
symplectic flag satisfies V_i = perp(V_{2n-i}).

The relative position of two flags is the permutation w with

    w(i) = min{ j : dim(V_j n V'_i) > dim(V_j n V'_{i-1}) }

equivalently: some basis v_1..v_n has V_j = <v_1..v_j> and
V'_i = <v_{w(1)}..v_{w(i)}>.  The equivalence with that common-basis
description is covered by a brute-force search in the tests.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import DimensionMismatch, NotPrime, NotSymplectic, TooLarge
from .gf import Field
from .linalg import kernel_basis, mat_vec, rref
from .weyl import BigPermutation

MAX_FLAGS = 10**6


def _rref_rows(field: Field, vectors) -> tuple[tuple[int, ...], ...]:
    rows, pivots = rref([list(v) for v in vectors], field)
    return tuple(tuple(r) for r in rows[: len(pivots)])


def span_contains(field: Field, rows, vector) -> bool:
    """Whether vector lies in the row space of RREF rows."""
    v = list(vector)
    for row in rows:
        pivot = next(i for i, x in enumerate(row) if x != field.zero)
        c = v[pivot]
        if c:
            v = [field.sub(x, field.mul(c, y)) for x, y in zip(v, row)]
    return all(x == field.zero for x in v)


@dataclass(frozen=True)
class Flag:
    """Proper steps of a complete flag; steps[k] spans V_{k+1}."""

    field: Field
    ambient: int
    steps: tuple[tuple[tuple[int, ...], ...], ...]

    def step(self, i: int) -> tuple[tuple[int, ...], ...]:
        """Basis rows of V_i, with V_0 empty and V_ambient the full space."""
        if i == 0:
            return ()
        if i == self.ambient:
            return tuple(
                tuple(self.field.one if a == b else self.field.zero for b in range(self.ambient))
                for a in range(self.ambient)
            )
        return self.steps[i - 1]

    def __repr__(self) -> str:
        return f"Flag(n={self.ambient}, q={self.field.size})"


def make_flag(field: Field, subspaces) -> Flag:
    """Canonicalize and validate a chain of spanning sets."""
    subspaces = list(subspaces)
    steps = []
    prev: tuple = ()
    for k, span in enumerate(subspaces, start=1):
        rows = _rref_rows(field, span)
        if len(rows) != k or (rows and len(rows[0]) != len(subspaces) + 1):
            raise DimensionMismatch(
                f"step {k} has dimension {len(rows)}, expected {k} in ambient {len(subspaces) + 1}"
            )
        if prev and not all(span_contains(field, rows, v) for v in prev):
            raise DimensionMismatch(f"step {k - 1} is not contained in step {k}")
        prev = rows
        steps.append(rows)
    return Flag(field, len(subspaces) + 1, tuple(steps))


@dataclass(frozen=True)
class SymplecticForm:
    """The alternating form x_1 y_{2n} - x_{2n} y_1 + x_2 y_{2n-1} - ..."""

    dimension: int

    def __post_init__(self):
        if self.dimension % 2 or self.dimension < 2:
            raise NotSymplectic(f"symplectic forms need even dimension, got {self.dimension}")

    def gram(self, field: Field) -> list[list[int]]:
        d = self.dimension
        g = [[field.zero] * d for _ in range(d)]
        for i in range(d // 2):
            g[i][d - 1 - i] = field.one
            g[d - 1 - i][i] = field.neg(field.one)
        return g

    def pair(self, field: Field, x, y) -> int:
        d = self.dimension
        acc = field.zero
        for i in range(d // 2):
            acc = field.add(acc, field.mul(x[i], y[d - 1 - i]))
            acc = field.sub(acc, field.mul(x[d - 1 - i], y[i]))
        return acc

    def perp(self, field: Field, rows) -> tuple[tuple[int, ...], ...]:
        """Orthogonal complement of the row space, as RREF rows."""
        if not rows:
            return _rref_rows(
                field,
                [
                    [field.one if a == b else field.zero for b in range(self.dimension)]
                    for a in range(self.dimension)
                ],
            )
        gram = self.gram(field)
        system = [mat_vec(gram, list(r), field) for r in rows]
        return _rref_rows(field, kernel_basis(system, field))

    def is_compatible(self, flag: Flag) -> bool:
        if flag.ambient != self.dimension:
            return False
        for i in range(1, self.dimension):
            if flag.step(i) != self.perp(flag.field, flag.step(self.dimension - i)):
                return False
        return True


def gl_flag_count(n: int, q: int) -> int:
    count = 1
    for i in range(1, n + 1):
        count *= (q**i - 1) // (q - 1)
    return count


def sp_flag_count(two_n: int, q: int) -> int:
    count = 1
    for i in range(1, two_n // 2 + 1):
        count *= (q ** (2 * i) - 1) // (q - 1)
    return count


def _all_vectors(field: Field, n: int):
    q = field.size
    for code in range(q**n):
        v, rest = [], code
        for _ in range(n):
            rest, d = divmod(rest, q)
            v.append(d)
        yield tuple(v)


def enumerate_flags(
    n: int, field: Field, form: SymplecticForm | None = None, max_count: int = MAX_FLAGS
) -> list[Flag]:
    """All complete flags of field^n, symplectic-complete if form is given."""
    q = field.size
    if form is not None:
        if form.dimension != n:
            raise NotSymplectic(f"form has dimension {form.dimension}, ambient is {n}")
        expected = sp_flag_count(n, q)
    else:
        expected = gl_flag_count(n, q)
    if expected > max_count:
        raise TooLarge(f"{expected} flags exceed the bound {max_count}")

    vectors = [v for v in _all_vectors(field, n) if any(v)]
    half = n // 2

    def extend(chain: list) -> list[list]:
        depth = len(chain)
        if form is None and depth == n - 1:
            return [chain]
        if form is not None and depth == half:
            full = list(chain)
            for i in range(half - 1, 0, -1):
                full.append(form.perp(field, chain[i - 1]))
            return [full]
        current = chain[-1] if chain else ()
        if form is not None:
            pool = form.perp(field, current) if current else None
        seen = set()
        out = []
        for v in vectors:
            if current and span_contains(field, current, v):
                continue
            if form is not None and current:
                if not span_contains(field, pool, v):
                    continue
            rows = _rref_rows(field, list(current) + [v])
            if rows in seen:
                continue
            seen.add(rows)
            out.extend(extend(list(chain) + [rows]))
        return out

    chains = extend([])
    flags = [Flag(field, n, tuple(c)) for c in sorted(chains)]
    assert len(flags) == expected, f"enumerated {len(flags)} flags, expected {expected}"
    if form is not None:
        assert all(form.is_compatible(f) for f in flags)
    return flags


def _stack_rank(field: Field, rows_a, rows_b) -> int:
    stacked = [list(r) for r in rows_a] + [list(r) for r in rows_b]
    if not stacked:
        return 0
    _, pivots = rref(stacked, field)
    return len(pivots)


def relative_position(
    f1: Flag, f2: Flag, form: SymplecticForm | None = None
) -> BigPermutation:
    """The permutation w with dim(V_j n V'_i) jumping at j = w(i)."""
    if f1.field is not f2.field or f1.ambient != f2.ambient:
        raise DimensionMismatch("flags live in different spaces")
    if form is not None:
        for f in (f1, f2):
            if not form.is_compatible(f):
                raise NotSymplectic("flag is not compatible with the form")
    n = f1.ambient
    field = f1.field
    # inter[j][i] = dim(V_j n V'_i) = j + i - rank(V_j + V'_i)
    inter = [[0] * (n + 1) for _ in range(n + 1)]
    for j in range(n + 1):
        for i in range(n + 1):
            inter[j][i] = j + i - _stack_rank(field, f1.step(j), f2.step(i))
    images = []
    for i in range(1, n + 1):
        images.append(next(j for j in range(1, n + 1) if inter[j][i] > inter[j][i - 1]))
    return BigPermutation(tuple(images))


def flag_frobenius(flag: Flag, q: int) -> Flag:
    """Entrywise x -> x^q; preserves reduced echelon form."""
    field = flag.field
    steps = tuple(
        tuple(tuple(field.pow(x, q) for x in row) for row in step) for step in flag.steps
    )
    return Flag(field, flag.ambient, steps)


def flag_apply(matrix, flag: Flag) -> Flag:
    """Image flag under the invertible matrix (columns convention)."""
    field = flag.field
    steps = tuple(
        _rref_rows(field, [mat_vec(matrix, list(row), field) for row in step])
        for step in flag.steps
    )
    return Flag(field, flag.ambient, steps)


@lru_cache(maxsize=None)
def split_prime_power(q: int) -> tuple[int, int]:
    """q = p^s with p prime; raises NotPrime otherwise."""
    if q < 2:
        raise NotPrime(f"{q} is not a prime power")
    p = next(d for d in range(2, q + 1) if q % d == 0)
    s = 0
    rest = q
    while rest % p == 0:
        rest //= p
        s += 1
    if rest != 1:
        raise NotPrime(f"{q} is not a prime power")
    return p, s
