"""Finite fields GF(p^s) with exact table-based arithmetic.

Elements of GF(p^s) are encoded as integers in range(p**s): the integer
sum(c_i * p**i) stands for the coefficient vector (c_0, ..., c_{s-1}) in
the power basis 1, x, ..., x^{s-1} of GF(p)[x] modulo the defining
polynomial.  The defining polynomial is chosen deterministically: it is
the monic irreducible polynomial of degree s whose class of x is a
generator of the multiplicative group, minimizing the integer encoding
of its non-leading coefficient vector.  That makes x itself a primitive
element, so multiplication runs on exp/log tables.
"""

from __future__ import annotations

from functools import lru_cache
from math import gcd

from .errors import NotPrime, TooLarge

MAX_FIELD_SIZE = 1 << 16
MAX_CHARACTERISTIC = 13


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors of n, ascending."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out.append(n)
    return out


def smallest_primitive_root(p: int) -> int:
    """Least generator of (Z/p)^* for prime p."""
    if p == 2:
        return 1
    factors = prime_factors(p - 1)
    for g in range(2, p):
        if all(pow(g, (p - 1) // r, p) != 1 for r in factors):
            return g
    raise AssertionError(f"no primitive root mod {p}")


# ---------------------------------------------------------------------------
# polynomial helpers over GF(p), little-endian coefficient lists


def _ptrim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _pmod(a: list[int], f: list[int], p: int) -> list[int]:
    """Remainder of a modulo monic f, coefficients mod p."""
    a = [c % p for c in a]
    d = len(f) - 1
    for i in range(len(a) - 1, d - 1, -1):
        c = a[i]
        if c:
            for j in range(d + 1):
                a[i - d + j] = (a[i - d + j] - c * f[j]) % p
    del a[d:]
    while len(a) < d:
        a.append(0)
    return a


def _pmulmod(a: list[int], b: list[int], f: list[int], p: int) -> list[int]:
    out = [0] * (len(a) + len(b) - 1) if a and b else [0]
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                if cb:
                    out[i + j] = (out[i + j] + ca * cb) % p
    return _pmod(out, f, p)


def _ppowmod(a: list[int], n: int, f: list[int], p: int) -> list[int]:
    result = _pmod([1], f, p)
    base = _pmod(list(a), f, p)
    while n:
        if n & 1:
            result = _pmulmod(result, base, f, p)
        base = _pmulmod(base, base, f, p)
        n >>= 1
    return result


def _pgcd(a: list[int], b: list[int], p: int) -> list[int]:
    a = _ptrim([c % p for c in a])
    b = _ptrim([c % p for c in b])
    while b:
        lead = pow(b[-1], p - 2, p)
        monic = [c * lead % p for c in b]
        r = [c % p for c in a]
        d = len(monic) - 1
        for i in range(len(r) - 1, d - 1, -1):
            c = r[i]
            if c:
                for j in range(d + 1):
                    r[i - d + j] = (r[i - d + j] - c * monic[j]) % p
        del r[d:]
        a, b = monic, _ptrim(r)
    return a


def _is_irreducible(f: list[int], p: int) -> bool:
    """Rabin's test for monic f of degree s over GF(p)."""
    s = len(f) - 1
    x = [0, 1]
    xq = _ppowmod(x, p**s, f, p)
    probe = list(xq)
    probe[1] = (probe[1] - 1) % p
    if _ptrim(probe):
        return False
    for r in prime_factors(s):
        xr = _ppowmod(x, p ** (s // r), f, p)
        probe = list(xr)
        probe[1] = (probe[1] - 1) % p
        if len(_pgcd(probe, f, p)) > 1:
            return False
    return True


def _is_primitive(f: list[int], p: int) -> bool:
    """Whether the class of x generates the units of GF(p)[x]/(f)."""
    s = len(f) - 1
    order = p**s - 1
    x = [0, 1]
    for r in prime_factors(order):
        if _ptrim(_ppowmod(x, order // r, f, p))[:] == [1]:
            return False
    return True


def _find_defining_poly(p: int, s: int) -> list[int]:
    if s == 1:
        g = smallest_primitive_root(p)
        return [(-g) % p, 1]
    for k in range(p**s):
        if k % p == 0:
            continue  # constant term 0: divisible by x
        low, rest = [], k
        for _ in range(s):
            rest, digit = divmod(rest, p)
            low.append(digit)
        f = low + [1]
        if _is_irreducible(f, p) and _is_primitive(f, p):
            return f
    raise AssertionError(f"no primitive polynomial for GF({p}^{s})")


# ---------------------------------------------------------------------------


class PrimeField:
    """Arithmetic mod a prime, with no size cap or tables.

    Used internally for modular linear algebra where the modulus can
    exceed the characteristic bound of the public fields.
    """

    __slots__ = ("p",)

    def __init__(self, p: int):
        if not is_prime(p):
            raise NotPrime(f"{p} is not prime")
        self.p = p

    zero = 0
    one = 1

    @property
    def size(self) -> int:
        return self.p

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.p

    def sub(self, a: int, b: int) -> int:
        return (a - b) % self.p

    def neg(self, a: int) -> int:
        return (-a) % self.p

    def mul(self, a: int, b: int) -> int:
        return (a * b) % self.p

    def inv(self, a: int) -> int:
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, self.p - 2, self.p)

    def pow(self, a: int, n: int) -> int:
        return pow(a, n, self.p)

    def elements(self) -> range:
        return range(self.p)

    def __repr__(self) -> str:
        return f"PrimeField({self.p})"


class Field:
    """The finite field GF(p^s); elements are ints in range(p**s)."""

    def __init__(self, p: int, s: int):
        if not is_prime(p):
            raise NotPrime(f"characteristic {p} is not prime")
        if p > MAX_CHARACTERISTIC:
            raise TooLarge(f"characteristic {p} exceeds {MAX_CHARACTERISTIC}")
        if s < 1:
            raise ValueError("extension degree must be positive")
        if p**s > MAX_FIELD_SIZE:
            raise TooLarge(f"field size {p**s} exceeds {MAX_FIELD_SIZE}")
        self.p = p
        self.s = s
        self.size = p**s
        self.defining_poly = tuple(_find_defining_poly(p, s))
        self._build_tables()

    def _build_tables(self) -> None:
        p, s, q = self.p, self.s, self.size
        f = list(self.defining_poly)
        exp = [0] * (q - 1)
        log = [0] * q  # log[0] unused
        cur = [1] + [0] * (s - 1)
        for i in range(q - 1):
            e = self._encode(cur)
            exp[i] = e
            log[e] = i
            # multiply by x
            cur = _pmod([0] + cur, f, p)
        self._exp = exp
        self._log = log

    def _encode(self, digits: list[int]) -> int:
        out = 0
        for c in reversed(digits):
            out = out * self.p + c
        return out

    def _decode(self, a: int) -> list[int]:
        out = []
        for _ in range(self.s):
            a, d = divmod(a, self.p)
            out.append(d)
        return out

    zero = 0
    one = 1

    @property
    def generator(self) -> int:
        """A fixed multiplicative generator (the class of x)."""
        return self._exp[1] if self.size > 2 else 1

    def elements(self) -> range:
        return range(self.size)

    def add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        if self.s == 1:
            return (a + b) % self.p
        da, db = self._decode(a), self._decode(b)
        return self._encode([(x + y) % self.p for x, y in zip(da, db)])

    def neg(self, a: int) -> int:
        if self.p == 2:
            return a
        if self.s == 1:
            return (-a) % self.p
        return self._encode([(-x) % self.p for x in self._decode(a)])

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self._exp[(self._log[a] + self._log[b]) % (self.size - 1)]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return self._exp[(-self._log[a]) % (self.size - 1)]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, n: int) -> int:
        if a == 0:
            if n == 0:
                return 1
            if n < 0:
                raise ZeroDivisionError("inverse of zero")
            return 0
        return self._exp[(self._log[a] * n) % (self.size - 1)]

    def frobenius(self, a: int, times: int = 1) -> int:
        """a ** (p ** times); times may be any nonnegative integer."""
        if times < 0:
            raise ValueError("times must be nonnegative")
        return self.pow(a, self.p ** (times % self.s))

    def element_order(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("order of zero")
        n = self.size - 1
        return n // gcd(n, self._log[a] % n or n)

    def log(self, a: int) -> int:
        """Discrete logarithm base the canonical generator."""
        if a == 0:
            raise ZeroDivisionError("log of zero")
        return self._log[a]

    def subfield_elements(self, t: int) -> list[int]:
        """Sorted elements of the subfield GF(p^t), for t dividing s."""
        if self.s % t:
            raise ValueError(f"GF({self.p}^{t}) is not a subfield of GF({self.p}^{self.s})")
        sub_order = self.p**t - 1
        step = (self.size - 1) // sub_order
        return sorted([0] + [self._exp[i * step] for i in range(sub_order)])

    def element_str(self, a: int) -> str:
        """Render an element as a polynomial in x."""
        if self.s == 1:
            return str(a)
        digits = self._decode(a)
        terms = []
        for i in range(self.s - 1, -1, -1):
            c = digits[i]
            if not c:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                xs = "x" if i == 1 else f"x^{i}"
                terms.append(xs if c == 1 else f"{c}{xs}")
        return "+".join(terms) if terms else "0"

    def __repr__(self) -> str:
        return f"GF({self.p}^{self.s})" if self.s > 1 else f"GF({self.p})"


@lru_cache(maxsize=None)
def make_field(p: int, s: int = 1) -> Field:
    """The field GF(p^s), cached so repeated calls share tables."""
    return Field(p, s)


def frobenius(field: Field, a: int, times: int = 1) -> int:
    return field.frobenius(a, times)
