"""Point counts for the Frobenius-twisted pieces of the flag variety.

Over GF(q^m) every complete flag B is fixed by F^m, and the pieces are
indexed by the relative position w = relpos(B, F(B)) where F raises
matrix entries to the q-th power.  The report maps every Weyl group
element to its count, zero included, and the counts always sum to the
number of flags.

The Drinfeld curve x^q y - x y^q = 1 lives here too: closed-form point
counts over GF(q^m) via the substitution y = tx, the full point list
for small fields, and the mu_{q+1} and SL_2(F_q) symmetry checks.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass

from .errors import LieTypeError, TooLarge, UnsupportedFamily
from .flags import (
    MAX_FLAGS,
    SymplecticForm,
    enumerate_flags,
    flag_frobenius,
    gl_flag_count,
    relative_position,
    sp_flag_count,
    span_contains,
    split_prime_power,
)
from .gf import Field, make_field
from .weyl import BigPermutation, weyl_group

MAX_CURVE_POINTS = 10**6


@dataclass(frozen=True)
class DLCountReport:
    """Counts of flags B with relpos(B, F(B)) = w, for every w."""

    group_type: str
    n: int
    q: int
    m: int
    counts: dict[BigPermutation, int]

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    def to_json(self) -> dict:
        items = sorted(self.counts.items(), key=lambda kv: kv[0].images)
        return {
            "group_type": self.group_type,
            "n": self.n,
            "q": self.q,
            "m": self.m,
            "counts": [{"images": list(w.images), "count": c} for w, c in items],
        }


def _field_tower(q: int, m: int) -> tuple[Field, int]:
    p, s = split_prime_power(q)
    return make_field(p, s * m), s


def dl_piece_counts(
    group_type: str, n: int, q: int, m: int, max_flags: int = MAX_FLAGS
) -> DLCountReport:
    """Partition of the flags of GF(q^m)^n by relative position with F."""
    if group_type == "GL":
        if n < 2:
            raise UnsupportedFamily("GL pieces need ambient dimension at least 2")
        expected = gl_flag_count(n, q**m)
        weyl = weyl_group(f"A{n - 1}")
        form = None
    elif group_type == "Sp":
        if n < 4 or n % 2:
            raise UnsupportedFamily("Sp pieces need even ambient dimension at least 4")
        expected = sp_flag_count(n, q**m)
        weyl = weyl_group(f"C{n // 2}")
        form = SymplecticForm(n)
    else:
        raise UnsupportedFamily(f"unknown group type {group_type!r}")
    if expected > max_flags:
        raise TooLarge(f"{expected} flags exceed the bound {max_flags}")

    field, _ = _field_tower(q, m)
    counts = {w.to_big_permutation(): 0 for w in weyl.enumerate()}
    for flag in enumerate_flags(n, field, form=form, max_count=max_flags):
        w = relative_position(flag, flag_frobenius(flag, q), form)
        counts[w] += 1
    report = DLCountReport(group_type, n, q, m, counts)
    assert report.total == expected
    return report


def coxeter_condition_check(n: int, q: int, m: int) -> bool:
    """The chain condition V_i != F(V_i), F(V_i) in V_{i+1} cuts out
    exactly the flags in relative position (2, 3, ..., n, 1) with their
    Frobenius image."""
    field, _ = _field_tower(q, m)
    coxeter = tuple(range(2, n + 1)) + (1,)
    chain_set = set()
    relpos_set = set()
    for flag in enumerate_flags(n, field):
        image = flag_frobenius(flag, q)
        if all(
            flag.step(i) != image.step(i)
            and all(span_contains(field, flag.step(i + 1), v) for v in image.step(i))
            for i in range(1, n)
        ):
            chain_set.add(flag)
        if relative_position(flag, image).images == coxeter:
            relpos_set.add(flag)
    return chain_set == relpos_set


def drinfeld_count(q: int, m: int) -> int:
    """Number of solutions of x^q y - x y^q = 1 in GF(q^m)^2.

    Every solution has x != 0, so y = tx for a unique t, and the curve
    becomes (t - t^q) x^(q+1) = 1.  For each t outside F_q the equation
    x^(q+1) = 1/(t - t^q) has gcd(q+1, q^m - 1) solutions when the right
    side is a (q+1)-th power and none otherwise.
    """
    field, _ = _field_tower(q, m)
    size = field.size
    g = math.gcd(q + 1, size - 1)
    cosets = (size - 1) // g
    total = 0
    for t in field.elements():
        d = field.sub(t, field.pow(t, q))
        if d == field.zero:
            continue
        c = field.inv(d)
        if field.pow(c, cosets) == field.one:
            total += g
    return total


def drinfeld_points(q: int, m: int) -> list[tuple[int, int]]:
    """Brute-force solution list; guarded by a size cap."""
    field, _ = _field_tower(q, m)
    if field.size**2 > MAX_CURVE_POINTS:
        raise TooLarge(f"{field.size}^2 pairs exceed the bound {MAX_CURVE_POINTS}")
    points = []
    for x in field.elements():
        xq = field.pow(x, q)
        for y in field.elements():
            lhs = field.sub(field.mul(xq, y), field.mul(x, field.pow(y, q)))
            if lhs == field.one:
                points.append((x, y))
    return points


def mu_orbit_check(q: int, m: int) -> bool:
    """When mu_{q+1} lies in GF(q^m), homotheties act freely on the curve."""
    field, _ = _field_tower(q, m)
    if (field.size - 1) % (q + 1):
        raise LieTypeError(f"mu_{q + 1} does not embed in a field of size {field.size}")
    roots = [z for z in field.elements() if z and field.pow(z, q + 1) == field.one]
    if len(roots) != q + 1:
        return False
    points = set(drinfeld_points(q, m))
    seen = set()
    for pt in points:
        if pt in seen:
            continue
        orbit = {(field.mul(z, pt[0]), field.mul(z, pt[1])) for z in roots}
        if len(orbit) != q + 1 or not orbit <= points:
            return False
        seen |= orbit
    return seen == points


def sl2_invariance_check(q: int, m: int, samples: int = 10, seed: int = 0) -> bool:
    """Random determinant-one substitutions over F_q permute the curve."""
    field, s = _field_tower(q, m)
    rng = random.Random(seed)
    subfield = field.subfield_elements(s)
    points = set(drinfeld_points(q, m))
    for _ in range(samples):
        while True:
            a, b, c, d = (rng.choice(subfield) for _ in range(4))
            det = field.sub(field.mul(a, d), field.mul(b, c))
            if det == field.one:
                break
        moved = {
            (
                field.add(field.mul(a, x), field.mul(b, y)),
                field.add(field.mul(c, x), field.mul(d, y)),
            )
            for x, y in points
        }
        if moved != points:
            return False
    return True
