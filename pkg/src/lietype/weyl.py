"""Finite Weyl groups acting on their root systems.

A group element is stored as the permutation it induces on the full list
of roots; roots live in simple-root coordinates (integer vectors), so the
whole construction is exact.  The root list puts all positive roots first,
and the negative of ``roots[i]`` sits at ``i + n_pos``, which makes length
counting (inversions) a single scan.

Families B and C carry the same Weyl group; both labels are accepted and
map to one internal representation.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .errors import MixedGroups, TooLarge, UnsupportedFamily, UnsupportedSpec
from .polys import charpoly_int, factor_cyclotomic, poly_eval

__all__ = [
    "CoxeterSpec",
    "WeylGroup",
    "WeylElement",
    "BigPermutation",
    "weyl_group",
]

DEFAULT_GROUP_BOUND = 10**7

_FAMILIES = "ABCDEFG"

_DEGREES_EXC = {
    ("E", 6): (2, 5, 6, 8, 9, 12),
    ("E", 7): (2, 6, 8, 10, 12, 14, 18),
    ("E", 8): (2, 8, 12, 14, 18, 20, 24, 30),
    ("F", 4): (2, 6, 8, 12),
    ("G", 2): (2, 6),
}

_ROOT_COUNTS = {
    "A": lambda n: n * (n + 1),
    "B": lambda n: 2 * n * n,
    "D": lambda n: 2 * n * (n - 1),
    "E": lambda n: {6: 72, 7: 126, 8: 240}[n],
    "F": lambda n: 48,
    "G": lambda n: 12,
}


@dataclass(frozen=True)
class CoxeterSpec:
    """Family letter plus rank, validated against the supported table."""

    family: str
    rank: int

    def __post_init__(self) -> None:
        if self.family not in _FAMILIES:
            raise UnsupportedSpec(f"unknown family {self.family!r}")
        n = self.rank
        ok = {
            "A": n >= 1,
            "B": n >= 2,
            "C": n >= 2,
            "D": n >= 4,
            "E": n in (6, 7, 8),
            "F": n == 4,
            "G": n == 2,
        }[self.family]
        if not ok:
            raise UnsupportedSpec(f"rank {n} not supported for family {self.family}")

    @property
    def internal_family(self) -> str:
        """C is represented as B; the Weyl groups coincide."""
        return "B" if self.family == "C" else self.family

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"

    @staticmethod
    def parse(text: str) -> "CoxeterSpec":
        text = text.strip()
        if not text or text[0].upper() not in _FAMILIES:
            raise UnsupportedSpec(f"cannot parse Coxeter type {text!r}")
        return CoxeterSpec(text[0].upper(), int(text[1:]))


def _cartan_matrix(family: str, n: int) -> list[list[int]]:
    a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def edge(i: int, j: int, aij: int = -1, aji: int = -1) -> None:
        a[i][j] = aij
        a[j][i] = aji

    if family in ("A", "B"):
        for i in range(n - 1):
            edge(i, i + 1)
        if family == "B" and n >= 2:
            # last simple root short: <alpha_{n-1}, alpha_n^vee> = -2
            a[n - 1][n - 2] = -2
    elif family == "D":
        for i in range(n - 2):
            edge(i, i + 1)
        edge(n - 3, n - 1)
    elif family == "E":
        for i, j in [(0, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7)][: n - 2]:
            edge(i, j)
        edge(1, 3)
    elif family == "F":
        edge(0, 1)
        edge(1, 2, -1, -2)
        edge(2, 3)
    elif family == "G":
        edge(0, 1, -1, -3)
    return a


class WeylGroup:
    """Weyl group of a Coxeter spec, with roots in simple-root coordinates."""

    def __init__(self, spec: CoxeterSpec):
        self.spec = spec
        self.rank = spec.rank
        self.cartan = _cartan_matrix(spec.internal_family, spec.rank)
        self._build_roots()
        self._elements: list[WeylElement] | None = None
        self._index: dict[bytes, int] | None = None
        self._classes: list[list[WeylElement]] | None = None
        self._bruhat_memo: dict[tuple[bytes, bytes], bool] = {}

    # -- construction -----------------------------------------------------

    def _reflect(self, i: int, root: tuple[int, ...]) -> tuple[int, ...]:
        # s_i(b) = b - <b, alpha_i^vee> alpha_i, pairing read off the Cartan row
        c = sum(self.cartan[i][j] * root[j] for j in range(self.rank))
        out = list(root)
        out[i] -= c
        return tuple(out)

    def _build_roots(self) -> None:
        n = self.rank
        simples = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
        seen = set(simples)
        frontier = list(simples)
        while frontier:
            nxt = []
            for r in frontier:
                for i in range(n):
                    img = self._reflect(i, r)
                    if img not in seen:
                        seen.add(img)
                        nxt.append(img)
            frontier = nxt
        pos = sorted(
            (r for r in seen if all(c >= 0 for c in r)),
            key=lambda r: (sum(r), r),
        )
        expected = _ROOT_COUNTS[self.spec.internal_family](n)
        assert len(seen) == expected and 2 * len(pos) == expected
        self.n_pos = len(pos)
        self.roots: list[tuple[int, ...]] = pos + [
            tuple(-c for c in r) for r in pos
        ]
        self.root_index = {r: k for k, r in enumerate(self.roots)}
        self.simple_index = [self.root_index[s] for s in simples]
        self.gen_perms = [
            bytes(self.root_index[self._reflect(i, r)] for r in self.roots)
            for i in range(n)
        ]
        self._id_perm = bytes(range(len(self.roots)))

    # -- elements ---------------------------------------------------------

    @cached_property
    def identity(self) -> "WeylElement":
        return WeylElement(self, self._id_perm)

    @cached_property
    def simple_reflections(self) -> list["WeylElement"]:
        return [WeylElement(self, p) for p in self.gen_perms]

    @cached_property
    def order(self) -> int:
        fam, n = self.spec.internal_family, self.rank
        if fam == "A":
            degrees = range(2, n + 2)
        elif fam == "B":
            degrees = range(2, 2 * n + 1, 2)
        elif fam == "D":
            degrees = list(range(2, 2 * n - 1, 2)) + [n]
        else:
            degrees = _DEGREES_EXC[(fam, n)]
        out = 1
        for d in degrees:
            out *= d
        return out

    def element_from_word(self, word: list[int] | tuple[int, ...]) -> "WeylElement":
        """Product of simple reflections; word entries are 1-based."""
        perm = self._id_perm
        for i in word:
            if not 1 <= i <= self.rank:
                raise UnsupportedSpec(f"generator index {i} out of range")
            perm = _compose(perm, self.gen_perms[i - 1])
        return WeylElement(self, perm)

    def parse_element(self, text: str) -> "WeylElement":
        """Parse 's1 s2 s1' (also 'e' or '' for the identity)."""
        text = text.strip()
        if text in ("", "e", "1"):
            return self.identity
        word = []
        for tok in text.replace(",", " ").split():
            if not tok.startswith("s"):
                raise UnsupportedSpec(f"bad generator token {tok!r}")
            word.append(int(tok[1:]))
        return self.element_from_word(word)

    @cached_property
    def longest_element(self) -> "WeylElement":
        w = self.identity
        improved = True
        while improved:
            improved = False
            for s in self.simple_reflections:
                cand = w * s
                if cand.length > w.length:
                    w = cand
                    improved = True
                    break
        assert w.length == self.n_pos
        return w

    def enumerate(self, bound: int | None = None) -> list["WeylElement"]:
        """All elements via breadth-first closure (deterministic order)."""
        if self._elements is None:
            limit = DEFAULT_GROUP_BOUND if bound is None else bound
            if self.order > limit:
                raise TooLarge(
                    f"|W({self.spec})| = {self.order} exceeds bound {limit}"
                )
            seen: dict[bytes, None] = {self._id_perm: None}
            frontier = [self._id_perm]
            while frontier:
                nxt = []
                for p in frontier:
                    for g in self.gen_perms:
                        q = _compose(p, g)
                        if q not in seen:
                            seen[q] = None
                            nxt.append(q)
                frontier = nxt
            assert len(seen) == self.order
            self._elements = [WeylElement(self, p) for p in seen]
            self._index = {p: k for k, p in enumerate(seen)}
        return self._elements

    def conjugacy_class(
        self, w: "WeylElement", bound: int | None = None
    ) -> list["WeylElement"]:
        """Closure of w under conjugation by the simple reflections."""
        self._check(w)
        limit = DEFAULT_GROUP_BOUND if bound is None else bound
        seen: dict[bytes, None] = {w.perm: None}
        frontier = [w.perm]
        while frontier:
            nxt = []
            for p in frontier:
                for g in self.gen_perms:
                    q = _compose(g, _compose(p, g))
                    if q not in seen:
                        if len(seen) >= limit:
                            raise TooLarge(f"conjugacy class exceeds bound {limit}")
                        seen[q] = None
                        nxt.append(q)
            frontier = nxt
        return [WeylElement(self, p) for p in seen]

    def conjugacy_classes(self, bound: int | None = None) -> list[list["WeylElement"]]:
        if self._classes is None:
            visited: set[bytes] = set()
            classes = []
            for w in self.enumerate(bound):
                if w.perm in visited:
                    continue
                cls = self.conjugacy_class(w, bound)
                visited.update(e.perm for e in cls)
                classes.append(cls)
            assert sum(len(c) for c in classes) == self.order
            self._classes = classes
        return self._classes

    # -- Bruhat order -------------------------------------------------------

    def bruhat_leq(self, y: "WeylElement", w: "WeylElement") -> bool:
        """Subword criterion, computed by descent recursion."""
        self._check(y)
        self._check(w)

        def rec(yp: bytes, wp: bytes) -> bool:
            if yp == wp:
                return True
            key = (yp, wp)
            hit = self._bruhat_memo.get(key)
            if hit is not None:
                return hit
            wl = _length(self, wp)
            if _length(self, yp) >= wl:
                res = False
            elif wl == 0:
                res = yp == self._id_perm
            else:
                s = next(
                    g
                    for j, g in enumerate(self.gen_perms)
                    if wp[self.simple_index[j]] >= self.n_pos
                )
                ws = _compose(wp, s)
                ys = _compose(yp, s)
                res = rec(ys if _length(self, ys) < _length(self, yp) else yp, ws)
            self._bruhat_memo[key] = res
            return res

        return rec(y.perm, w.perm)

    def bruhat_interval(self, w: "WeylElement") -> list["WeylElement"]:
        """All y <= w, from the subword dynamic program on a reduced word."""
        reached: dict[bytes, None] = {self._id_perm: None}
        for i in w.word:
            g = self.gen_perms[i - 1]
            for p in list(reached):
                reached.setdefault(_compose(p, g), None)
        return [WeylElement(self, p) for p in reached]

    # -- helpers ------------------------------------------------------------

    def _check(self, w: "WeylElement") -> None:
        if w.group is not self:
            raise MixedGroups("element belongs to a different group")

    def __repr__(self) -> str:
        return f"WeylGroup({self.spec})"


def _compose(a: bytes, b: bytes) -> bytes:
    """(a . b)(r) = a(b(r))."""
    return bytes(a[x] for x in b)


def _length(group: WeylGroup, perm: bytes) -> int:
    n = group.n_pos
    return sum(1 for i in range(n) if perm[i] >= n)


_weyl_cache: dict[tuple[str, int], WeylGroup] = {}


def weyl_group(spec: CoxeterSpec | str) -> WeylGroup:
    """Memoized constructor; B_n and C_n share one instance."""
    if isinstance(spec, str):
        spec = CoxeterSpec.parse(spec)
    key = (spec.internal_family, spec.rank)
    got = _weyl_cache.get(key)
    if got is None:
        got = _weyl_cache[key] = WeylGroup(CoxeterSpec(key[0], key[1]))
    return got


class WeylElement:
    """Group element as a permutation of the root list."""

    __slots__ = ("group", "perm", "_len", "_word", "_big")

    def __init__(self, group: WeylGroup, perm: bytes):
        self.group = group
        self.perm = perm
        self._len: int | None = None
        self._word: tuple[int, ...] | None = None
        self._big: "BigPermutation | None" = None

    # identity of the mathematical element is its action on the simple roots;
    # the full root permutation is determined by it, so compare on that
    def canonical_form(self) -> tuple[int, ...]:
        return tuple(self.perm[i] for i in self.group.simple_index)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, WeylElement)
            and self.group is other.group
            and self.perm == other.perm
        )

    def __hash__(self) -> int:
        return hash((id(self.group), self.perm))

    @property
    def length(self) -> int:
        if self._len is None:
            self._len = _length(self.group, self.perm)
        return self._len

    @property
    def is_identity(self) -> bool:
        return self.perm == self.group._id_perm

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        if not isinstance(other, WeylElement):
            return NotImplemented
        if self.group is not other.group:
            raise MixedGroups("cannot multiply elements of different groups")
        return WeylElement(self.group, _compose(self.perm, other.perm))

    def inverse(self) -> "WeylElement":
        inv = bytearray(len(self.perm))
        for i, x in enumerate(self.perm):
            inv[x] = i
        return WeylElement(self.group, bytes(inv))

    def descents(self, side: str = "right") -> list[int]:
        """1-based indices i with l(w s_i) < l(w) (or l(s_i w) on the left)."""
        g = self.group
        perm = self.perm if side == "right" else self.inverse().perm
        return [
            j + 1
            for j in range(g.rank)
            if perm[g.simple_index[j]] >= g.n_pos
        ]

    @property
    def word(self) -> tuple[int, ...]:
        """ShortLex-minimal reduced word (1-based letters)."""
        if self._word is None:
            g = self.group
            out = []
            v = self.inverse().perm  # track u^{-1} while peeling u = s_j u'
            while v != g._id_perm:
                j = next(
                    j for j in range(g.rank) if v[g.simple_index[j]] >= g.n_pos
                )
                out.append(j + 1)
                v = _compose(v, g.gen_perms[j])
            assert len(out) == self.length
            self._word = tuple(out)
        return self._word

    def act_root(self, idx: int) -> int:
        return self.perm[idx]

    # -- linear algebra on the reflection representation --------------------

    def matrix(self) -> list[list[int]]:
        """Matrix in the simple-root basis; column j = image of alpha_j."""
        g = self.group
        cols = [g.roots[self.perm[g.simple_index[j]]] for j in range(g.rank)]
        return [[cols[j][i] for j in range(g.rank)] for i in range(g.rank)]

    def char_poly(self) -> list[int]:
        """det(x*I - w) on the reflection representation, exact integers."""
        return charpoly_int(self.matrix())

    def char_poly_factored(self) -> dict[int, int]:
        out = factor_cyclotomic(self.char_poly())
        assert out is not None, "Weyl element charpoly must split into cyclotomics"
        return out

    def is_elliptic(self) -> bool:
        """No nonzero fixed vector, i.e. 1 is not an eigenvalue."""
        return poly_eval(self.char_poly(), 1) != 0

    # -- permutation models --------------------------------------------------

    def to_big_permutation(self) -> "BigPermutation":
        if self._big is None:
            g = self.group
            fam, n = g.spec.internal_family, g.rank
            if fam == "A":
                gens = [_transpositions(n + 1, [(i, i + 1)]) for i in range(1, n + 1)]
            elif fam == "B":
                gens = [
                    _transpositions(2 * n, [(i, i + 1), (2 * n - i, 2 * n + 1 - i)])
                    for i in range(1, n)
                ] + [_transpositions(2 * n, [(n, n + 1)])]
            elif fam == "D":
                gens = [
                    _transpositions(2 * n, [(i, i + 1), (2 * n - i, 2 * n + 1 - i)])
                    for i in range(1, n)
                ] + [_transpositions(2 * n, [(n - 1, n + 1), (n, n + 2)])]
            else:
                raise UnsupportedFamily(
                    f"big permutation model undefined for family {fam}"
                )
            images = tuple(range(1, gens[0].degree + 1))
            big = BigPermutation(images)
            for i in self.word:
                big = big * gens[i - 1]
            self._big = big
        return self._big

    def to_json(self) -> dict:
        return {"word": list(self.word)}

    def __repr__(self) -> str:
        if self.is_identity:
            return "e"
        return " ".join(f"s{i}" for i in self.word)


def _transpositions(degree: int, swaps: list[tuple[int, int]]) -> "BigPermutation":
    images = list(range(1, degree + 1))
    for a, b in swaps:
        images[a - 1], images[b - 1] = images[b - 1], images[a - 1]
    return BigPermutation(tuple(images))


@dataclass(frozen=True)
class BigPermutation:
    """Permutation of {1..degree} in one-line notation (1-based images)."""

    images: tuple[int, ...]

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __mul__(self, other: "BigPermutation") -> "BigPermutation":
        """(a * b)(i) = a(b(i))."""
        if self.degree != other.degree:
            raise MixedGroups("permutation degrees differ")
        return BigPermutation(tuple(self.images[x - 1] for x in other.images))

    def inverse(self) -> "BigPermutation":
        inv = [0] * self.degree
        for i, x in enumerate(self.images):
            inv[x - 1] = i + 1
        return BigPermutation(tuple(inv))

    def cycle_type(self) -> tuple[int, ...]:
        """Ascending multiset of all cycle lengths, fixed points included."""
        seen = [False] * self.degree
        out = []
        for i in range(1, self.degree + 1):
            if seen[i - 1]:
                continue
            ln, j = 0, i
            while not seen[j - 1]:
                seen[j - 1] = True
                j = self(j)
                ln += 1
            out.append(ln)
        return tuple(sorted(out))

    def commutes_with_iota(self) -> bool:
        """Does the permutation commute with i -> degree + 1 - i?"""
        d = self.degree
        return all(self(d + 1 - i) == d + 1 - self(i) for i in range(1, d + 1))

    def inversions(self) -> int:
        return sum(
            1
            for i in range(self.degree)
            for j in range(i + 1, self.degree)
            if self.images[i] > self.images[j]
        )

    def __repr__(self) -> str:
        return "[" + " ".join(map(str, self.images)) + "]"
