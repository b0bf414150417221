"""Exact integer polynomial helpers.

Polynomials are dense lists of Python ints, index = degree, no trailing
zeros (the zero polynomial is the empty list).  Everything here is exact;
there is no floating point anywhere in this module.
"""

from __future__ import annotations

from functools import cache

__all__ = [
    "poly_trim",
    "poly_add",
    "poly_sub",
    "poly_mul",
    "poly_divmod",
    "poly_eval",
    "euler_phi",
    "cyclotomic",
    "factor_cyclotomic",
    "charpoly_int",
    "int_det",
]


def poly_trim(p: list[int]) -> list[int]:
    while p and p[-1] == 0:
        p.pop()
    return p


def poly_add(a: list[int], b: list[int]) -> list[int]:
    n = max(len(a), len(b))
    out = [0] * n
    for i, c in enumerate(a):
        out[i] += c
    for i, c in enumerate(b):
        out[i] += c
    return poly_trim(out)


def poly_sub(a: list[int], b: list[int]) -> list[int]:
    return poly_add(a, [-c for c in b])


def poly_mul(a: list[int], b: list[int]) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
    return poly_trim(out)


def poly_divmod(a: list[int], b: list[int]) -> tuple[list[int], list[int]]:
    """Divide a by b.  b must be monic; quotient and remainder stay integral."""
    if not b or b[-1] != 1:
        raise ValueError("divisor must be monic")
    rem = list(a)
    deg_b = len(b) - 1
    quo = [0] * max(0, len(a) - deg_b)
    for i in range(len(rem) - 1, deg_b - 1, -1):
        c = rem[i]
        if c:
            quo[i - deg_b] = c
            for j in range(deg_b + 1):
                rem[i - deg_b + j] -= c * b[j]
    return poly_trim(quo), poly_trim(rem)


def poly_eval(p: list[int], x: int) -> int:
    acc = 0
    for c in reversed(p):
        acc = acc * x + c
    return acc


@cache
def euler_phi(n: int) -> int:
    result, m, d = n, n, 2
    while d * d <= m:
        if m % d == 0:
            while m % d == 0:
                m //= d
            result -= result // d
        d += 1
    if m > 1:
        result -= result // m
    return result


@cache
def cyclotomic(n: int) -> tuple[int, ...]:
    """Coefficients of the n-th cyclotomic polynomial.

    >>> cyclotomic(1)
    (-1, 1)
    >>> cyclotomic(6)
    (1, -1, 1)
    >>> cyclotomic(12)
    (1, 0, -1, 0, 1)
    """
    num = [0] * n + [1]
    num[0] = -1  # x^n - 1
    for d in range(1, n):
        if n % d == 0:
            num, rem = poly_divmod(num, list(cyclotomic(d)))
            assert not rem
    return tuple(num)


def factor_cyclotomic(p: list[int]) -> dict[int, int] | None:
    """Factor a monic integer polynomial into cyclotomics.

    Returns {d: multiplicity} with p = prod Phi_d^mult, or None when some
    factor is not cyclotomic.  phi(d) >= sqrt(d/2) bounds the search.
    """
    if not p or p[-1] != 1:
        return None
    deg = len(p) - 1
    rem = list(p)
    out: dict[int, int] = {}
    for d in range(1, 2 * deg * deg + 2):
        if euler_phi(d) > deg:
            continue
        phi_d = list(cyclotomic(d))
        while len(rem) >= len(phi_d):
            quo, r = poly_divmod(rem, phi_d)
            if r:
                break
            out[d] = out.get(d, 0) + 1
            rem = quo
        if len(rem) == 1:
            break
    if rem != [1]:
        return None
    return out


def charpoly_int(mat: list[list[int]]) -> list[int]:
    """Characteristic polynomial det(x*I - M) of an integer matrix.

    Faddeev-LeVerrier; the divisions by k are exact over the integers.
    """
    n = len(mat)
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    aux = [[0] * n for _ in range(n)]
    for k in range(1, n + 1):
        # aux <- M @ aux + c_{n-k+1} * I
        nxt = [
            [sum(mat[i][t] * aux[t][j] for t in range(n)) for j in range(n)]
            for i in range(n)
        ]
        for i in range(n):
            nxt[i][i] += coeffs[n - k + 1]
        prod = [
            [sum(mat[i][t] * nxt[t][j] for t in range(n)) for j in range(n)]
            for i in range(n)
        ]
        tr = sum(prod[i][i] for i in range(n))
        assert tr % k == 0
        coeffs[n - k] = -(tr // k)
        aux = nxt
    return coeffs


def int_det(mat: list[list[int]]) -> int:
    """Exact determinant of an integer matrix (Bareiss elimination)."""
    n = len(mat)
    if n == 0:
        return 1
    a = [row[:] for row in mat]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]
