"""The flag-function space of GL_n(F_p) and Brauer characters.

The modular space consists of functions f assigning to each complete
flag of F_p^n a vector f(F) in the line V_1(F), such that for every
almost-complete flag (one step removed) the sum of f over its p+1
completions vanishes.  Writing f(F) = c_F b_F with b_F the canonical
echelon generator of V_1(F) turns the conditions into a linear system
in the scalars c_F.  The rational variant uses scalar-valued functions
with the same vanishing sums.

Brauer characters lift eigenvalues of a matrix over GF(q) to complex
roots of unity: the eigenvalues live in a splitting extension GF(q^d),
each is a power of the canonical generator, and the same power of
exp(2 pi i/(q^d - 1)) is its lift.
"""

from __future__ import annotations

import math
import random

from .cyclotomic import Cyclotomic
from .errors import LieTypeError, SplittingFieldTooLarge, TooLarge
from .flags import Flag, enumerate_flags, flag_apply
from .gf import Field, make_field
from .linalg import QQ, charpoly, kernel_basis, mat_vec, poly_eval, rank


def _almost_flag_groups(flags: list[Flag], n: int) -> list[list[int]]:
    """Indices of flags grouped by the almost-flag left when V_i is removed."""
    groups: dict[tuple, list[int]] = {}
    for idx, flag in enumerate(flags):
        for i in range(1, n):
            key = (i,) + tuple(flag.steps[:i - 1]) + tuple(flag.steps[i:])
            groups.setdefault(key, []).append(idx)
    return [groups[k] for k in sorted(groups)]


def _constraint_system(n: int, p: int, mode: str):
    """Returns (flags, rows, field) for the chosen value encoding."""
    field = make_field(p, 1)
    flags = enumerate_flags(n, field)
    groups = _almost_flag_groups(flags, n)
    assert all(len(g) == p + 1 for g in groups)
    rows = []
    if mode == "modular":
        for group in groups:
            for t in range(n):
                row = [field.zero] * len(flags)
                for idx in group:
                    row[idx] = flags[idx].step(1)[0][t]
                rows.append(row)
        return flags, rows, field
    if mode == "rational":
        for group in groups:
            row = [QQ.zero] * len(flags)
            for idx in group:
                row[idx] = QQ.one
            rows.append(row)
        return flags, rows, QQ
    raise LieTypeError(f"unknown mode {mode!r}")


def _check_brauer_size(n: int, p: int) -> None:
    if not ((n <= 3 and p <= 3) or (n <= 2 and p <= 13)):
        raise TooLarge(f"flag functions for n={n}, p={p} are out of range")


def brauer_space_dim(n: int, p: int, mode: str) -> int:
    """Dimension of the space of flag functions with vanishing sums."""
    _check_brauer_size(n, p)
    flags, rows, field = _constraint_system(n, p, mode)
    return len(flags) - rank(rows, field)


def _random_invertible(n: int, field: Field, rng: random.Random):
    while True:
        g = [[rng.randrange(field.size) for _ in range(n)] for _ in range(n)]
        if rank(g, field) == n:
            return g


def _transport(flags, index, field, g, coeffs, mode):
    """Image of the coefficient vector under the flag-moving action."""
    moved = [field.zero if mode == "modular" else QQ.zero] * len(flags)
    for idx, flag in enumerate(flags):
        target = flag_apply(g, flag)
        tgt = index[target]
        if mode == "rational":
            moved[tgt] = coeffs[idx]
            continue
        image = mat_vec(g, list(flag.step(1)[0]), field)
        basis = target.step(1)[0]
        pivot = next(i for i, x in enumerate(basis) if x != field.zero)
        mu = image[pivot]
        assert image == [field.mul(mu, x) for x in basis]
        moved[tgt] = field.mul(mu, coeffs[idx])
    return moved


def brauer_stability_check(
    n: int, p: int, mode: str = "modular", vectors: int = 5, samples: int = 20, seed: int = 0
) -> bool:
    """Sampled invariance of the solution space under basis changes."""
    _check_brauer_size(n, p)
    flags, rows, field = _constraint_system(n, p, mode)
    index = {flag: i for i, flag in enumerate(flags)}
    kernel = kernel_basis(rows, field)
    rng = random.Random(seed)

    def random_kernel_vector():
        weights = [rng.randrange(p) for _ in kernel]
        out = []
        for i in range(len(flags)):
            acc = field.zero
            for w, v in zip(weights, kernel):
                acc = field.add(acc, field.mul(_scale(field, w), v[i]))
            out.append(acc)
        return out

    prime_field = make_field(p, 1)
    for _ in range(samples):
        g = _random_invertible(n, prime_field, rng)
        for _ in range(vectors):
            moved = _transport(flags, index, field, g, random_kernel_vector(), mode)
            if any(x != field.zero for x in mat_vec(rows, moved, field)):
                return False
    return True


def _scale(field, w: int):
    """The integer w as an element of the field (GF(p) or the rationals)."""
    if field is QQ:
        from fractions import Fraction

        return Fraction(w)
    return w % field.p


def _ptrim(coeffs, field):
    out = list(coeffs)
    while out and out[-1] == field.zero:
        out.pop()
    return out


def _pmonic(coeffs, field):
    lead = coeffs[-1]
    if lead == field.one:
        return list(coeffs)
    scale = field.inv(lead)
    return [field.mul(scale, c) for c in coeffs]


def _pdivmod(a, b, field):
    """Polynomial division with ascending coefficients."""
    b = _ptrim(b, field)
    rem = list(a)
    quot = [field.zero] * max(len(rem) - len(b) + 1, 0)
    inv_lead = field.inv(b[-1])
    while len(rem) >= len(b) and _ptrim(rem, field):
        rem = _ptrim(rem, field)
        if len(rem) < len(b):
            break
        shift = len(rem) - len(b)
        factor = field.mul(rem[-1], inv_lead)
        quot[shift] = factor
        for i, c in enumerate(b):
            rem[shift + i] = field.sub(rem[shift + i], field.mul(factor, c))
    return quot, _ptrim(rem, field)


def _pgcd_field(a, b, field):
    a, b = _ptrim(a, field), _ptrim(b, field)
    while b:
        a, b = b, _pdivmod(a, b, field)[1]
    return _pmonic(a, field) if a else a


def _pmul(a, b, field):
    prod = [field.zero] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == field.zero:
            continue
        for j, y in enumerate(b):
            if y != field.zero:
                prod[i + j] = field.add(prod[i + j], field.mul(x, y))
    return prod


def _pmulmod(a, b, m, field):
    return _pdivmod(_pmul(a, b, field), m, field)[1]


def _ppowmod(base, e, m, field):
    result = [field.one]
    acc = _pdivmod(base, m, field)[1]
    while e:
        if e & 1:
            result = _pmulmod(result, acc, m, field)
        acc = _pmulmod(acc, acc, m, field)
        e >>= 1
    return result


def _pderiv(coeffs, field):
    out = []
    for i, c in enumerate(coeffs[1:], start=1):
        out.append(field.mul(_scalar_in(field, i), c))
    return _ptrim(out, field)


def _psub(a, b, field):
    out = [field.zero] * max(len(a), len(b))
    for i, c in enumerate(a):
        out[i] = c
    for i, c in enumerate(b):
        out[i] = field.sub(out[i], c)
    return _ptrim(out, field)


def _proot(coeffs, field: Field):
    """Inverse of t -> t^p on coefficients of a polynomial in x^p."""
    inv_frob = field.s - 1
    return [field.frobenius(c, inv_frob) for c in coeffs[:: field.p]]


def _radical(f, field: Field):
    """Monic squarefree polynomial with exactly the roots of f.

    Factors whose multiplicity is divisible by p vanish from the usual
    f / gcd(f, f') quotient, so the p-power part is split off and
    handled by taking a p-th root of its coefficients.
    """
    f = _pmonic(_ptrim(f, field), field)
    if len(f) <= 1:
        return [field.one]
    deriv = _pderiv(f, field)
    if not deriv:
        return _radical(_proot(f, field), field)
    g = _pgcd_field(f, deriv, field)
    if len(g) <= 1:
        return f
    w = _pdivmod(f, g, field)[0]
    c = g
    h = _pgcd_field(c, w, field)
    while len(h) > 1:
        c = _pdivmod(c, h, field)[0]
        h = _pgcd_field(c, w, field)
    w = _pmonic(_ptrim(w, field), field)
    if len(_ptrim(c, field)) > 1:
        rest = _radical(_proot(c, field), field)
        return _pmonic(_ptrim(_pmul(w, rest, field), field), field)
    return w


def _splitting_degree(monic, field: Field) -> int:
    """Least common multiple of the degrees of the irreducible factors:
    the degree of the extension holding every eigenvalue."""
    work = _radical(monic, field)
    x = [field.zero, field.one]
    h = _pdivmod(x, work, field)[1]
    degrees = []
    i = 0
    while len(work) > 1:
        i += 1
        if 2 * i > len(work) - 1:
            degrees.append(len(work) - 1)
            break
        h = _ppowmod(h, field.size, work, field)
        g = _pgcd_field(_psub(h, x, field), work, field)
        if len(g) > 1:
            degrees.append(i)
            work = _pmonic(_ptrim(_pdivmod(work, g, field)[0], field), field)
            h = _pdivmod(h, work, field)[1]
    return math.lcm(*degrees) if degrees else 1


def _embedding(small: Field, big: Field) -> list[int]:
    """Image of each element of small under the lowest root of its
    defining polynomial in big; a genuine field embedding."""
    if big is small:
        return list(small.elements())
    coeffs = [c % small.p for c in small.defining_poly]
    beta = next(
        b
        for b in big.elements()
        if _eval_in(big, coeffs, b) == big.zero
    )
    images = [big.zero] * small.size
    for a in range(small.size):
        digits = []
        rest = a
        for _ in range(small.s):
            rest, d = divmod(rest, small.p)
            digits.append(d)
        acc = big.zero
        for d in reversed(digits):
            acc = big.add(big.mul(acc, beta), _scalar_in(big, d))
        images[a] = acc
    return images


def _eval_in(field: Field, coeffs, point):
    acc = field.zero
    for c in reversed(coeffs):
        acc = field.add(field.mul(acc, point), _scalar_in(field, c))
    return acc


def _scalar_in(field: Field, c: int):
    acc = field.zero
    for _ in range(c % field.p):
        acc = field.add(acc, field.one)
    return acc


def _deflate(coeffs, root, field: Field):
    """Divide the ascending polynomial by (x - root) by synthetic
    division; returns (quotient ascending, remainder)."""
    descending = list(reversed(coeffs))
    row = [descending[0]]
    for c in descending[1:]:
        row.append(field.add(c, field.mul(root, row[-1])))
    return list(reversed(row[:-1])), row[-1]


def brauer_character(field: Field, rep: list, g: int) -> Cyclotomic:
    """Sum of the lifted eigenvalues of rep[g], an invertible matrix
    over the field.

    The eigenvalues lie in the splitting extension GF(q^d) of the
    characteristic polynomial; each one is gamma^k for the canonical
    generator gamma, and lifts to exp(2 pi i k/(q^d - 1)).
    """
    matrix = [list(row) for row in rep[g]]
    n = len(matrix)
    monic = _pmonic(charpoly(matrix, field), field)
    if monic[0] == field.zero:
        raise LieTypeError("representation matrix is not invertible")
    d = _splitting_degree(monic, field)
    if field.p ** (field.s * d) > 1 << 16:
        raise SplittingFieldTooLarge(f"eigenvalues need GF({field.p}^{field.s * d})")
    big = make_field(field.p, field.s * d)
    embed = _embedding(field, big)
    poly = [embed[c] for c in monic]
    total = Cyclotomic.zero()
    found = 0
    for candidate in big.elements():
        if found == n:
            break
        multiplicity = 0
        while poly_eval(poly, candidate, big) == big.zero:
            poly, rem = _deflate(poly, candidate, big)
            assert rem == big.zero
            multiplicity += 1
        if multiplicity:
            found += multiplicity
            lift = Cyclotomic.root_of_unity(big.size - 1, big.log(candidate))
            total = total + lift * multiplicity
    assert found == n, "characteristic polynomial did not split as expected"
    return total
