"""Exact arithmetic in cyclotomic fields Q(zeta_N).

A value is stored as a vector of rational coordinates in the power basis
1, z, ..., z^{phi(N)-1} of Q(zeta_N), kept as an integer vector plus one
shared positive denominator in lowest terms.  Mixed-conductor arithmetic
widens to the lcm via zeta_N = zeta_M^{M/N}.  No floating point anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from functools import cache
from math import gcd, lcm

from .polys import cyclotomic as cyclotomic_poly
from .polys import euler_phi

__all__ = ["Cyclotomic"]


@cache
def _phi_poly(n: int) -> tuple[int, ...]:
    return cyclotomic_poly(n)


def _reduce_mod_phi(coeffs: list[int], n: int) -> list[int]:
    """Reduce an integer polynomial in z modulo Phi_n; length phi(n) output."""
    deg = euler_phi(n)
    phi = _phi_poly(n)
    rem = list(coeffs)
    for i in range(len(rem) - 1, deg - 1, -1):
        c = rem[i]
        if c:
            rem[i] = 0
            for j in range(len(phi) - 1):
                rem[i - (len(phi) - 1) + j] -= c * phi[j]
    rem = rem[:deg]
    rem += [0] * (deg - len(rem))
    return rem


class Cyclotomic:
    __slots__ = ("n", "num", "den")

    def __init__(self, n: int, num: tuple[int, ...], den: int):
        # assumes num already has length phi(n) and gcd(content, den) == 1
        self.n = n
        self.num = num
        self.den = den

    # -- constructors -----------------------------------------------------------

    @staticmethod
    def _make(n: int, num: list[int], den: int, collapse: bool = True) -> "Cyclotomic":
        if den < 0:
            den = -den
            num = [-c for c in num]
        g = gcd(den, *num) if num else den
        if g > 1:
            den //= g
            num = [c // g for c in num]
        if collapse and n > 1 and all(c == 0 for c in num[1:]):
            return Cyclotomic(1, (num[0],), den)  # collapse rationals
        return Cyclotomic(n, tuple(num), den)

    @staticmethod
    def from_rational(x: Fraction | int) -> "Cyclotomic":
        x = Fraction(x)
        return Cyclotomic(1, (x.numerator,), x.denominator)

    @staticmethod
    def zero() -> "Cyclotomic":
        return Cyclotomic(1, (0,), 1)

    @staticmethod
    def one() -> "Cyclotomic":
        return Cyclotomic(1, (1,), 1)

    @staticmethod
    def root_of_unity(order: int, exp: int = 1) -> "Cyclotomic":
        """zeta_order^exp, normalized to the exact order of the value."""
        if order <= 0:
            raise ValueError("order must be positive")
        exp %= order
        g = gcd(exp, order) if exp else order
        order, exp = order // g, exp // g
        if order == 1:
            return Cyclotomic.one()
        if order == 2:
            return Cyclotomic.from_rational(-1)
        coeffs = [0] * (exp + 1)
        coeffs[exp] = 1
        return Cyclotomic._make(order, _reduce_mod_phi(coeffs, order), 1)

    # -- conductor handling --------------------------------------------------------

    def with_conductor(self, m: int) -> "Cyclotomic":
        """Rewrite in Q(zeta_m); m must be a multiple of the current conductor."""
        if m == self.n:
            return self
        if m % self.n:
            raise ValueError(f"{m} is not a multiple of conductor {self.n}")
        step = m // self.n
        coeffs = [0] * ((len(self.num) - 1) * step + 1 or 1)
        for i, c in enumerate(self.num):
            if c:
                coeffs[i * step] += c
        # Keep the literal conductor m: _common relies on both operands
        # sharing coordinate length, so no rational collapse here.
        return Cyclotomic._make(m, _reduce_mod_phi(coeffs, m), self.den, collapse=False)

    def _common(self, other: "Cyclotomic") -> tuple["Cyclotomic", "Cyclotomic"]:
        if self.n == other.n:
            return self, other
        m = lcm(self.n, other.n)
        return self.with_conductor(m), other.with_conductor(m)

    # -- ring operations --------------------------------------------------------------

    def __add__(self, other: "Cyclotomic | int | Fraction") -> "Cyclotomic":
        other = _coerce(other)
        a, b = self._common(other)
        num = [
            ca * b.den + cb * a.den for ca, cb in zip(a.num, b.num)
        ]
        return Cyclotomic._make(a.n, num, a.den * b.den)

    __radd__ = __add__

    def __neg__(self) -> "Cyclotomic":
        return Cyclotomic(self.n, tuple(-c for c in self.num), self.den)

    def __sub__(self, other: "Cyclotomic | int | Fraction") -> "Cyclotomic":
        return self + (-_coerce(other))

    def __rsub__(self, other: "int | Fraction") -> "Cyclotomic":
        return _coerce(other) - self

    def __mul__(self, other: "Cyclotomic | int | Fraction") -> "Cyclotomic":
        other = _coerce(other)
        a, b = self._common(other)
        conv = [0] * (len(a.num) + len(b.num) - 1)
        for i, ca in enumerate(a.num):
            if ca:
                for j, cb in enumerate(b.num):
                    if cb:
                        conv[i + j] += ca * cb
        return Cyclotomic._make(a.n, _reduce_mod_phi(conv, a.n), a.den * b.den)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Cyclotomic":
        if n < 0:
            raise ValueError("negative powers are not supported")
        result = Cyclotomic.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __truediv__(self, other: "int | Fraction") -> "Cyclotomic":
        other = Fraction(other)
        if other == 0:
            raise ZeroDivisionError
        return self * Fraction(other.denominator, other.numerator)

    def conjugate(self) -> "Cyclotomic":
        """Complex conjugation, i.e. zeta -> zeta^{-1}."""
        coeffs = [0] * self.n
        for i, c in enumerate(self.num):
            coeffs[(-i) % self.n] += c
        return Cyclotomic._make(self.n, _reduce_mod_phi(coeffs, self.n), self.den)

    # -- inspection ----------------------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return all(c == 0 for c in self.num)

    def is_rational(self) -> bool:
        return all(c == 0 for c in self.num[1:])

    def as_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return Fraction(self.num[0], self.den)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Cyclotomic.from_rational(other)
        if not isinstance(other, Cyclotomic):
            return NotImplemented
        a, b = self._common(other)
        return a.num == b.num and a.den == b.den

    # equal values can be stored at different conductors, so no __hash__;
    # use sort_key for deterministic ordering at a shared conductor
    __hash__ = None  # type: ignore[assignment]

    def sort_key(self) -> tuple:
        """Deterministic total order for values sharing a conductor."""
        return (self.n, self.den, self.num)

    def to_json(self) -> dict:
        return {
            "conductor": self.n,
            "coords": [[c, self.den] for c in self.num],
        }

    def __repr__(self) -> str:
        if self.is_rational():
            return str(Fraction(self.num[0], self.den))
        parts = []
        for i, c in enumerate(self.num):
            if not c:
                continue
            base = "1" if i == 0 else (f"z{self.n}" if i == 1 else f"z{self.n}^{i}")
            parts.append(base if c == 1 and i else str(c) if i == 0 else f"{c}*{base}")
        s = " + ".join(parts).replace("+ -", "- ")
        return s if self.den == 1 else f"({s})/{self.den}"


def _coerce(x: "Cyclotomic | int | Fraction") -> Cyclotomic:
    if isinstance(x, Cyclotomic):
        return x
    return Cyclotomic.from_rational(x)
