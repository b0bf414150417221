"""Hecke algebra over Z[v, v^-1], bar involution, KL basis, cells.

Conventions: T_w T_{w'} = T_{ww'} when lengths add, and the quadratic
relation (T_s + 1)(T_s - v^2) = 0.  The Kazhdan-Lusztig element is

    C'_w = v^{-l(w)} sum_{y <= w} P_{y,w}(v^2) T_y,

computed by induction on length: pick s with sw < w and subtract the
mu-correction terms from C'_s * C'_{sw}.  Bar-invariance and the degree
bound are asserted for every computed C'_w when ``validate`` is set.
"""

from __future__ import annotations

from .errors import MixedGroups
from .laurent import ONE, V, LaurentPoly
from .weyl import WeylElement, WeylGroup

__all__ = ["HeckeElement", "HeckeAlgebra", "hecke_algebra"]

_V_INV = LaurentPoly.monomial(-1)
_V2 = LaurentPoly.monomial(2)
_V2_INV = LaurentPoly.monomial(-2)


class HeckeElement:
    """Finite Z[v,v^-1]-combination of T_w basis elements."""

    __slots__ = ("algebra", "coeffs")

    def __init__(self, algebra: "HeckeAlgebra", coeffs: dict[WeylElement, LaurentPoly]):
        self.algebra = algebra
        self.coeffs = {w: c for w, c in coeffs.items() if not c.is_zero}

    def coeff(self, w: WeylElement) -> LaurentPoly:
        return self.coeffs.get(w, LaurentPoly())

    def support(self) -> list[WeylElement]:
        return sorted(self.coeffs, key=lambda w: (w.length, w.word))

    def _check(self, other: "HeckeElement") -> None:
        if self.algebra is not other.algebra:
            raise MixedGroups("Hecke elements from different algebras")

    def __add__(self, other: "HeckeElement") -> "HeckeElement":
        self._check(other)
        out = dict(self.coeffs)
        for w, c in other.coeffs.items():
            out[w] = out.get(w, LaurentPoly()) + c
        return HeckeElement(self.algebra, out)

    def __sub__(self, other: "HeckeElement") -> "HeckeElement":
        return self + other.scale(LaurentPoly.from_int(-1))

    def scale(self, factor: LaurentPoly | int) -> "HeckeElement":
        if isinstance(factor, int):
            factor = LaurentPoly.from_int(factor)
        return HeckeElement(self.algebra, {w: c * factor for w, c in self.coeffs.items()})

    def __mul__(self, other: "HeckeElement") -> "HeckeElement":
        self._check(other)
        return self.algebra.multiply(self, other)

    def bar(self) -> "HeckeElement":
        return self.algebra.bar(self)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, HeckeElement)
            and self.algebra is other.algebra
            and self.coeffs == other.coeffs
        )

    def __hash__(self) -> int:
        return hash(frozenset((w, c) for w, c in self.coeffs.items()))

    def __repr__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = [f"({c})*T[{w}]" for w, c in sorted(self.coeffs.items(), key=lambda p: (p[0].length, p[0].word))]
        return " + ".join(parts)


class HeckeAlgebra:
    """Hecke algebra of a Weyl group with memoized KL data.

    All caches are append-only and every cached value is a pure function
    of its key, so concurrent readers and repeated fills are harmless.
    """

    def __init__(self, group: WeylGroup, validate: bool = False):
        self.group = group
        self.validate = validate
        self._t_inv: dict[WeylElement, HeckeElement] = {}
        self._cprime: dict[WeylElement, HeckeElement] = {}

    # -- basis ----------------------------------------------------------------

    def t(self, w: WeylElement, coeff: LaurentPoly | int = 1) -> HeckeElement:
        self.group._check(w)
        if isinstance(coeff, int):
            coeff = LaurentPoly.from_int(coeff)
        return HeckeElement(self, {w: coeff})

    @property
    def one(self) -> HeckeElement:
        return self.t(self.group.identity)

    def zero(self) -> HeckeElement:
        return HeckeElement(self, {})

    # -- multiplication ----------------------------------------------------------

    def _mul_gen_right(self, h: HeckeElement, j: int) -> HeckeElement:
        """h * T_{s_j} (j is 0-based)."""
        s = self.group.simple_reflections[j]
        out: dict[WeylElement, LaurentPoly] = {}

        def bump(w: WeylElement, c: LaurentPoly) -> None:
            out[w] = out.get(w, LaurentPoly()) + c

        for w, c in h.coeffs.items():
            ws = w * s
            if ws.length > w.length:
                bump(ws, c)
            else:
                bump(w, c * (_V2 - 1))
                bump(ws, c * _V2)
        return HeckeElement(self, out)

    def _mul_gen_left(self, j: int, h: HeckeElement) -> HeckeElement:
        """T_{s_j} * h."""
        s = self.group.simple_reflections[j]
        out: dict[WeylElement, LaurentPoly] = {}

        def bump(w: WeylElement, c: LaurentPoly) -> None:
            out[w] = out.get(w, LaurentPoly()) + c

        for w, c in h.coeffs.items():
            sw = s * w
            if sw.length > w.length:
                bump(sw, c)
            else:
                bump(w, c * (_V2 - 1))
                bump(sw, c * _V2)
        return HeckeElement(self, out)

    def multiply(self, a: HeckeElement, b: HeckeElement) -> HeckeElement:
        """a * b, expanding b along reduced words."""
        total = self.zero()
        for w, c in b.coeffs.items():
            term = a.scale(c)
            for j in w.word:
                term = self._mul_gen_right(term, j - 1)
            total = total + term
        return total

    # -- bar involution ---------------------------------------------------------

    def t_inverse(self, w: WeylElement) -> HeckeElement:
        """(T_w)^{-1}, by peeling generators: T_s^{-1} = v^{-2} T_s + (v^{-2}-1) T_1."""
        got = self._t_inv.get(w)
        if got is not None:
            return got
        if w.is_identity:
            result = self.one
        else:
            j = w.descents("right")[0] - 1
            s = self.group.simple_reflections[j]
            u = w * s  # shorter, T_w = T_u T_s
            inner = self.t_inverse(u)
            result = self._mul_gen_left(j, inner).scale(_V2_INV) + inner.scale(
                _V2_INV - 1
            )
        self._t_inv[w] = result
        return result

    def bar(self, a: HeckeElement) -> HeckeElement:
        """v^n T_w -> v^{-n} (T_{w^{-1}})^{-1}, extended additively."""
        total = self.zero()
        for w, c in a.coeffs.items():
            total = total + self.t_inverse(w.inverse()).scale(c.bar())
        return total

    # -- Kazhdan-Lusztig basis -----------------------------------------------------

    def cprime(self, w: WeylElement) -> HeckeElement:
        got = self._cprime.get(w)
        if got is not None:
            return got
        self.group._check(w)
        if w.is_identity:
            result = self.one
        elif w.length == 1:
            result = (self.one + self.t(w)).scale(_V_INV)
        else:
            j = w.descents("left")[0] - 1
            s = self.group.simple_reflections[j]
            u = s * w  # sw < w
            cu = self.cprime(u)
            result = self._mul_gen_left(j, cu).scale(_V_INV) + cu.scale(_V_INV)
            for z in list(cu.coeffs):
                if z == u:
                    continue
                if (s * z).length < z.length:
                    m = self.mu(z, u)
                    if m:
                        result = result - self.cprime(z).scale(m)
        if self.validate:
            assert self.bar(result) == result, f"C'_{w} not bar-invariant"
            self._assert_kl_shape(w, result)
        self._cprime[w] = result
        return result

    def _assert_kl_shape(self, w: WeylElement, cw: HeckeElement) -> None:
        lw = w.length
        for y, c in cw.coeffs.items():
            poly = c * LaurentPoly.monomial(lw)
            coeffs = poly.q_coefficients()  # also checks: in q, nonneg exponents
            if y == w:
                assert coeffs == [1], "P_{w,w} must be 1"
            else:
                assert 2 * (len(coeffs) - 1) <= lw - y.length - 1, (
                    f"degree bound violated at ({y}, {w})"
                )
                assert self.group.bruhat_leq(y, w)

    def kl_polynomial(self, y: WeylElement, w: WeylElement) -> list[int]:
        """Coefficients of P_{y,w} as a polynomial in q; [] when y is not <= w."""
        self.group._check(y)
        self.group._check(w)
        c = self.cprime(w).coeff(y)
        if c.is_zero:
            return []
        return (c * LaurentPoly.monomial(w.length)).q_coefficients()

    def mu(self, y: WeylElement, w: WeylElement) -> int:
        """Top-degree-allowed q-coefficient of P_{y,w} (0 on even length gap)."""
        gap = w.length - y.length
        if gap <= 0 or gap % 2 == 0:
            return 0
        coeffs = self.kl_polynomial(y, w)
        deg = (gap - 1) // 2
        return coeffs[deg] if deg < len(coeffs) else 0

    def kl_table(self) -> dict[tuple[WeylElement, WeylElement], list[int]]:
        """P_{y,w} for every Bruhat-comparable pair of the (small) group."""
        out = {}
        for w in sorted(self.group.enumerate(), key=lambda e: (e.length, e.word)):
            cw = self.cprime(w)
            for y in cw.support():
                out[(y, w)] = self.kl_polynomial(y, w)
        return out

    def kl_table_json(self) -> list[dict]:
        return [
            {"y": list(y.word), "w": list(w.word), "coeffs": coeffs}
            for (y, w), coeffs in sorted(
                self.kl_table().items(),
                key=lambda p: (p[0][1].length, p[0][1].word, p[0][0].length, p[0][0].word),
            )
        ]

    # -- cells -------------------------------------------------------------------

    def _cell_edges(self, side: str) -> dict[WeylElement, set[WeylElement]]:
        """Edges w -> x for x appearing in C'_s C'_w (left) or C'_w C'_s (right)."""
        group = self.group
        edges: dict[WeylElement, set[WeylElement]] = {}
        for w in group.enumerate():
            cw = self.cprime(w)
            targets: set[WeylElement] = set()
            for j in range(group.rank):
                s = group.simple_reflections[j]
                longer = (s * w if side == "left" else w * s).length > w.length
                if not longer:
                    continue
                targets.add(s * w if side == "left" else w * s)
                for z in cw.coeffs:
                    if z == w:
                        continue
                    zs = s * z if side == "left" else z * s
                    if zs.length < z.length and self.mu(z, w):
                        targets.add(z)
            edges[w] = targets
        return edges

    def cells(self, kind: str) -> list[list[WeylElement]]:
        """Cell partition as strongly connected components of the preorder."""
        if kind not in ("left", "right", "two-sided"):
            raise ValueError(f"unknown cell kind {kind!r}")
        if kind == "two-sided":
            left = self._cell_edges("left")
            right = self._cell_edges("right")
            edges = {w: left[w] | right[w] for w in left}
        else:
            edges = self._cell_edges(kind)
        comps = _scc(edges)
        blocks = [
            sorted(comp, key=lambda e: (e.length, e.word)) for comp in comps
        ]
        blocks.sort(key=lambda b: (b[0].length, b[0].word))
        return blocks

    def cells_json(self, kind: str) -> list[list[list[int]]]:
        return [[list(w.word) for w in block] for block in self.cells(kind)]

    # -- palindromicity ------------------------------------------------------------

    def palindrome_check(self, w: WeylElement) -> tuple[bool, list[int]]:
        """Check X^{l(w)} Pi(X^{-1}) = Pi(X) for Pi = sum_y X^{l(y)} P_{y,w}(X).

        Returns (palindromic?, coefficients of Pi).
        """
        cw = self.cprime(w)
        coeffs = [0] * (w.length + 1)
        for y in cw.coeffs:
            for i, c in enumerate(self.kl_polynomial(y, w)):
                coeffs[y.length + i] += c
        return coeffs == coeffs[::-1], coeffs


def _scc(edges: dict) -> list[list]:
    """Tarjan strongly connected components, iterative."""
    index: dict = {}
    low: dict = {}
    on_stack: set = set()
    stack: list = []
    comps: list[list] = []
    counter = [0]

    for root in edges:
        if root in index:
            continue
        work = [(root, iter(edges[root]))]
        index[root] = low[root] = counter[0]
        counter[0] += 1
        stack.append(root)
        on_stack.add(root)
        while work:
            node, it = work[-1]
            advanced = False
            for nxt in it:
                if nxt not in index:
                    index[nxt] = low[nxt] = counter[0]
                    counter[0] += 1
                    stack.append(nxt)
                    on_stack.add(nxt)
                    work.append((nxt, iter(edges[nxt])))
                    advanced = True
                    break
                if nxt in on_stack:
                    low[node] = min(low[node], index[nxt])
            if advanced:
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[node])
            if low[node] == index[node]:
                comp = []
                while True:
                    x = stack.pop()
                    on_stack.discard(x)
                    comp.append(x)
                    if x == node:
                        break
                comps.append(comp)
    return comps


_algebras: dict[int, HeckeAlgebra] = {}


def hecke_algebra(group: WeylGroup, validate: bool = False) -> HeckeAlgebra:
    """Memoized per-group algebra; `validate` only upgrades, never downgrades."""
    alg = _algebras.get(id(group))
    if alg is None:
        alg = _algebras[id(group)] = HeckeAlgebra(group, validate)
    if validate:
        alg.validate = True
    return alg
