"""Exact linear algebra over a field object.

Every function takes the field as an explicit argument; a field exposes
zero, one, add, sub, neg, mul, inv, with elements treated as opaque
hashable values.  Works for the finite fields in gf and for the
rationals via RationalField.
"""

from __future__ import annotations

from fractions import Fraction


class RationalField:
    """Field interface over Fraction, for exact rational kernels."""

    zero = Fraction(0)
    one = Fraction(1)

    @staticmethod
    def add(a, b):
        return a + b

    @staticmethod
    def sub(a, b):
        return a - b

    @staticmethod
    def neg(a):
        return -a

    @staticmethod
    def mul(a, b):
        return a * b

    @staticmethod
    def inv(a):
        if not a:
            raise ZeroDivisionError("inverse of zero")
        return 1 / Fraction(a)

    def __repr__(self):
        return "QQ"


QQ = RationalField()


def identity_matrix(n, field):
    return [[field.one if i == j else field.zero for j in range(n)] for i in range(n)]


def mat_vec(matrix, vec, field):
    out = []
    for row in matrix:
        acc = field.zero
        for a, b in zip(row, vec):
            if a != field.zero and b != field.zero:
                acc = field.add(acc, field.mul(a, b))
        out.append(acc)
    return out


def mat_mul(a, b, field):
    cols = list(zip(*b))
    out = []
    for row in a:
        out_row = []
        for col in cols:
            acc = field.zero
            for x, y in zip(row, col):
                if x != field.zero and y != field.zero:
                    acc = field.add(acc, field.mul(x, y))
            out_row.append(acc)
        out.append(out_row)
    return out


def dot(u, v, field):
    acc = field.zero
    for a, b in zip(u, v):
        if a != field.zero and b != field.zero:
            acc = field.add(acc, field.mul(a, b))
    return acc


def rref(matrix, field):
    """Reduced row echelon form.  Returns (rows, pivot_columns)."""
    rows = [list(r) for r in matrix]
    if not rows:
        return rows, []
    ncols = len(rows[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(rows)) if rows[i][c] != field.zero), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        scale = field.inv(rows[r][c])
        rows[r] = [field.mul(scale, x) for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != field.zero:
                factor = rows[i][c]
                rows[i] = [field.sub(x, field.mul(factor, y)) for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows, pivots


def rank(matrix, field):
    return len(rref(matrix, field)[1])


def kernel_basis(matrix, field):
    """Basis of {v : matrix @ v = 0}, one vector per free column, ascending."""
    if not matrix:
        return []
    ncols = len(matrix[0])
    rows, pivots = rref(matrix, field)
    pivot_set = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        v = [field.zero] * ncols
        v[free] = field.one
        for i, pc in enumerate(pivots):
            v[pc] = field.neg(rows[i][free])
        basis.append(v)
    return basis


def poly_eval(coeffs, x, field):
    """Evaluate a polynomial given by ascending coefficients."""
    acc = field.zero
    for c in reversed(coeffs):
        acc = field.add(field.mul(acc, x), c)
    return acc


def charpoly(matrix, field):
    """Characteristic polynomial det(xI - A), ascending coefficients.

    Berkowitz's division-free algorithm, so it is valid over any
    commutative coefficient ring the field object models.
    """
    n = len(matrix)
    poly = [field.one]  # descending coefficients, starts as charpoly of []
    for k in range(1, n + 1):
        a = matrix[k - 1][k - 1]
        row = matrix[k - 1][: k - 1]
        col = [matrix[i][k - 1] for i in range(k - 1)]
        principal = [r[: k - 1] for r in matrix[: k - 1]]
        # entries of the Toeplitz column: 1, -a, -row @ principal^m @ col
        tcol = [field.one, field.neg(a)]
        v = col
        for m in range(k - 1):
            tcol.append(field.neg(dot(row, v, field)))
            if m < k - 2:
                v = mat_vec(principal, v, field)
        new = []
        for i in range(k + 1):
            acc = field.zero
            for j in range(max(0, i - len(tcol) + 1), min(i, k - 1) + 1):
                acc = field.add(acc, field.mul(tcol[i - j], poly[j]))
            new.append(acc)
        poly = new
    return list(reversed(poly))
