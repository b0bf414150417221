"""Laurent polynomials in one variable v with integer coefficients.

Used as the scalar ring of the Hecke algebra; exponents may be negative.
Instances are immutable.  ``bar`` is the ring involution v -> v^{-1}.
"""

from __future__ import annotations

from typing import Iterator, Mapping

__all__ = ["LaurentPoly", "V", "ONE", "ZERO"]


class LaurentPoly:
    __slots__ = ("_c", "_hash")

    def __init__(self, coeffs: Mapping[int, int] | None = None):
        c = {e: v for e, v in (coeffs or {}).items() if v}
        self._c: dict[int, int] = c
        self._hash: int | None = None

    # -- constructors -------------------------------------------------------

    @staticmethod
    def monomial(exp: int, coeff: int = 1) -> "LaurentPoly":
        return LaurentPoly({exp: coeff})

    @staticmethod
    def from_int(n: int) -> "LaurentPoly":
        return LaurentPoly({0: n})

    # -- ring structure -------------------------------------------------------

    def __add__(self, other: "LaurentPoly | int") -> "LaurentPoly":
        other = _coerce(other)
        out = dict(self._c)
        for e, v in other._c.items():
            out[e] = out.get(e, 0) + v
        return LaurentPoly(out)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly({e: -v for e, v in self._c.items()})

    def __sub__(self, other: "LaurentPoly | int") -> "LaurentPoly":
        return self + (-_coerce(other))

    def __rsub__(self, other: int) -> "LaurentPoly":
        return _coerce(other) - self

    def __mul__(self, other: "LaurentPoly | int") -> "LaurentPoly":
        other = _coerce(other)
        out: dict[int, int] = {}
        for e1, v1 in self._c.items():
            for e2, v2 in other._c.items():
                e = e1 + e2
                out[e] = out.get(e, 0) + v1 * v2
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentPoly":
        if n < 0:
            if len(self._c) != 1:
                raise ValueError("only monomials are invertible")
            ((e, v),) = self._c.items()
            if v not in (1, -1):
                raise ValueError("coefficient not invertible")
            return LaurentPoly({e * n: 1 if (v == 1 or n % 2 == 0) else -1})
        out = ONE
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def bar(self) -> "LaurentPoly":
        """The involution v -> v^{-1}."""
        return LaurentPoly({-e: v for e, v in self._c.items()})

    # -- inspection -----------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self._c

    def coeff(self, exp: int) -> int:
        return self._c.get(exp, 0)

    def items(self) -> Iterator[tuple[int, int]]:
        return iter(sorted(self._c.items()))

    @property
    def min_exp(self) -> int:
        return min(self._c) if self._c else 0

    @property
    def max_exp(self) -> int:
        return max(self._c) if self._c else 0

    def evaluate_at_one(self) -> int:
        return sum(self._c.values())

    def as_int(self) -> int:
        """The constant value, when the polynomial is constant."""
        if not self._c:
            return 0
        if set(self._c) != {0}:
            raise ValueError(f"{self} is not constant")
        return self._c[0]

    # -- conversions ------------------------------------------------------------

    def to_json(self) -> dict[str, int]:
        return {str(e): v for e, v in sorted(self._c.items())}

    @staticmethod
    def from_json(data: Mapping[str, int]) -> "LaurentPoly":
        return LaurentPoly({int(e): v for e, v in data.items()})

    def q_coefficients(self) -> list[int]:
        """Coefficients as a polynomial in q = v^2, index = q-degree.

        Requires all exponents even and nonnegative.
        """
        if any(e < 0 or e % 2 for e in self._c):
            raise ValueError(f"{self} is not a polynomial in q = v^2")
        out = [0] * (self.max_exp // 2 + 1) if self._c else []
        for e, v in self._c.items():
            out[e // 2] = v
        return out

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = LaurentPoly.from_int(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._c == other._c

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._c.items()))
        return self._hash

    def __repr__(self) -> str:
        if not self._c:
            return "0"
        parts = []
        for e, v in sorted(self._c.items()):
            if e == 0:
                parts.append(f"{v}")
            else:
                mono = "v" if e == 1 else f"v^{e}"
                if v == 1:
                    parts.append(mono)
                elif v == -1:
                    parts.append(f"-{mono}")
                else:
                    parts.append(f"{v}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")


def _coerce(x: "LaurentPoly | int") -> LaurentPoly:
    return LaurentPoly.from_int(x) if isinstance(x, int) else x


V = LaurentPoly.monomial(1)
ONE = LaurentPoly.from_int(1)
ZERO = LaurentPoly()
