"""Finite groups presented by permutation generators.

A FiniteGroup stores its elements as permutation tuples in discovery
order, with the identity at index 0, and multiplies by composing
permutations: (a * b) sends i to a[b[i]].  Groups defined by an
abstract multiplication table are wrapped into their left-regular
permutation representation, so every group here is a permutation group
and associativity holds by construction.
"""

from __future__ import annotations

from math import lcm

from .errors import NotAClass, NotPermutation, TooLarge

MAX_GROUP_SIZE = 10**5


def _compose(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(a[i] for i in b)


def _invert(p: tuple[int, ...]) -> tuple[int, ...]:
    out = [0] * len(p)
    for i, v in enumerate(p):
        out[v] = i
    return tuple(out)


def _check_permutation(p) -> tuple[int, ...]:
    t = tuple(p)
    if sorted(t) != list(range(len(t))):
        raise NotPermutation(f"{p!r} is not a permutation of 0..{len(t) - 1}")
    return t


def parse_cycles(text: str, degree: int | None = None) -> tuple[int, ...]:
    """Parse 1-based cycle notation like "(1,2)(3,4)" into a permutation.

    The domain size is the largest point mentioned unless degree is given.
    "e" or "()" denotes the identity (degree then required or defaults to 1).
    """
    text = text.strip()
    cycles: list[list[int]] = []
    if text not in ("e", "()", ""):
        if not (text.startswith("(") and text.endswith(")")):
            raise NotPermutation(f"cannot parse cycle notation {text!r}")
        for chunk in text[1:-1].split(")("):
            points = [int(tok) for tok in chunk.replace(" ", "").split(",") if tok]
            if len(points) != len(set(points)) or any(pt < 1 for pt in points):
                raise NotPermutation(f"bad cycle {chunk!r}")
            cycles.append(points)
    n = max((max(c) for c in cycles if c), default=0)
    if degree is not None:
        if degree < n:
            raise NotPermutation(f"degree {degree} too small for {text!r}")
        n = degree
    n = max(n, 1)
    perm = list(range(n))
    for cycle in cycles:
        for i, pt in enumerate(cycle):
            target = cycle[(i + 1) % len(cycle)]
            if perm[pt - 1] != pt - 1:
                raise NotPermutation(f"point {pt} repeated in {text!r}")
            perm[pt - 1] = target - 1
    return tuple(perm)


def cycle_string(perm: tuple[int, ...]) -> str:
    """Render a permutation in 1-based cycle notation; identity is "e"."""
    seen = [False] * len(perm)
    parts = []
    for start in range(len(perm)):
        if seen[start] or perm[start] == start:
            seen[start] = True
            continue
        cyc = []
        i = start
        while not seen[i]:
            seen[i] = True
            cyc.append(str(i + 1))
            i = perm[i]
        parts.append("(" + ",".join(cyc) + ")")
    return "".join(parts) if parts else "e"


class FiniteGroup:
    """A finite permutation group with elements indexed 0..size-1."""

    def __init__(self, perms, gen_ids, parent=None, parent_ids=None):
        self.perms: tuple[tuple[int, ...], ...] = tuple(perms)
        self.size = len(self.perms)
        self._index = {p: i for i, p in enumerate(self.perms)}
        if len(self._index) != self.size:
            raise ValueError("duplicate elements")
        identity = tuple(range(len(self.perms[0])))
        if self.perms[0] != identity:
            raise ValueError("identity must be element 0")
        self.generator_ids = tuple(gen_ids)
        self.parent = parent
        self.parent_ids = tuple(parent_ids) if parent_ids is not None else None
        self._inv = [self._index[_invert(p)] for p in self.perms]  # verifies closure under inverse
        self._classes: list[tuple[int, ...]] | None = None
        self._class_of: list[int] | None = None

    # -- construction -------------------------------------------------------

    @classmethod
    def from_generators(cls, generators, max_size: int = MAX_GROUP_SIZE) -> "FiniteGroup":
        gens = [_check_permutation(g) for g in generators]
        degrees = {len(g) for g in gens}
        if len(degrees) > 1:
            raise NotPermutation("generators act on different domains")
        n = degrees.pop() if degrees else 1
        identity = tuple(range(n))
        elements = [identity]
        index = {identity: 0}
        frontier = [identity]
        while frontier:
            new_frontier = []
            for x in frontier:
                for g in gens:
                    y = _compose(x, g)
                    if y not in index:
                        if len(elements) >= max_size:
                            raise TooLarge(f"group closure exceeds {max_size} elements")
                        index[y] = len(elements)
                        elements.append(y)
                        new_frontier.append(y)
            frontier = new_frontier
        gen_ids = sorted({index[g] for g in gens})
        return cls(elements, gen_ids)

    @classmethod
    def from_table(cls, table) -> "FiniteGroup":
        """Build from a Cayley table (table[a][b] = a*b), verifying the axioms.

        The group is stored through its left-regular representation; the
        identity is relabeled to index 0 if needed.
        """
        n = len(table)
        if n > 512:
            raise TooLarge("table-built groups are capped at 512 elements")
        rows = [tuple(r) for r in table]
        for r in rows:
            if sorted(r) != list(range(n)):
                raise ValueError("each row must be a permutation (cancellation fails)")
        for c in zip(*rows):
            if sorted(c) != list(range(n)):
                raise ValueError("each column must be a permutation (cancellation fails)")
        identity = next((e for e in range(n) if all(rows[e][b] == b for b in range(n))), None)
        if identity is None or any(rows[a][identity] != a for a in range(n)):
            raise ValueError("no two-sided identity")
        for a in range(n):
            for b in range(n):
                ab = rows[a][b]
                for c in range(n):
                    if rows[ab][c] != rows[a][rows[b][c]]:
                        raise ValueError("multiplication table is not associative")
        relabel = list(range(n))
        if identity != 0:
            relabel[0], relabel[identity] = identity, 0
        pos = {v: i for i, v in enumerate(relabel)}
        perms = []
        for a in relabel:
            perms.append(tuple(pos[rows[a][b]] for b in relabel))
        return cls(perms, range(n))

    # -- builtin families ----------------------------------------------------

    @classmethod
    def trivial(cls) -> "FiniteGroup":
        return cls.from_generators([], max_size=1)

    @classmethod
    def cyclic(cls, n: int) -> "FiniteGroup":
        if n == 1:
            return cls.trivial()
        return cls.from_generators([tuple(range(1, n)) + (0,)])

    @classmethod
    def symmetric(cls, n: int) -> "FiniteGroup":
        if n <= 1:
            return cls.trivial()
        swap = (1, 0) + tuple(range(2, n))
        cyc = tuple(range(1, n)) + (0,)
        return cls.from_generators([swap, cyc])

    @classmethod
    def alternating(cls, n: int) -> "FiniteGroup":
        if n <= 2:
            return cls.trivial()
        gens = []
        for i in range(n - 2):
            p = list(range(n))
            p[i], p[i + 1], p[i + 2] = p[i + 1], p[i + 2], p[i]
            gens.append(tuple(p))
        return cls.from_generators(gens)

    @classmethod
    def elementary_abelian_2(cls, n: int) -> "FiniteGroup":
        """(Z/2)^n as n disjoint transpositions on 2n points."""
        if n == 0:
            return cls.trivial()
        gens = []
        for i in range(n):
            p = list(range(2 * n))
            p[2 * i], p[2 * i + 1] = p[2 * i + 1], p[2 * i]
            gens.append(tuple(p))
        return cls.from_generators(gens)

    # -- arithmetic -----------------------------------------------------------

    @property
    def identity(self) -> int:
        return 0

    def mult(self, a: int, b: int) -> int:
        return self._index[_compose(self.perms[a], self.perms[b])]

    def inv(self, a: int) -> int:
        return self._inv[a]

    def conjugate(self, g: int, x: int) -> int:
        """g x g^{-1}."""
        return self.mult(g, self.mult(x, self._inv[g]))

    def order_of(self, a: int) -> int:
        k, cur = 1, a
        while cur != 0:
            cur = self.mult(cur, a)
            k += 1
        return k

    def exponent(self) -> int:
        return lcm(*(self.order_of(c[0]) for c in self.conjugacy_classes()))

    def commutes(self, a: int, b: int) -> bool:
        return self.mult(a, b) == self.mult(b, a)

    # -- structure -------------------------------------------------------------

    def conjugacy_classes(self) -> list[tuple[int, ...]]:
        """Classes as sorted tuples, ordered by (size, least element)."""
        if self._classes is None:
            conj_by = self.generator_ids or range(self.size)
            seen = [False] * self.size
            classes = []
            for start in range(self.size):
                if seen[start]:
                    continue
                orbit = {start}
                frontier = [start]
                seen[start] = True
                while frontier:
                    x = frontier.pop()
                    for g in conj_by:
                        y = self.conjugate(g, x)
                        if y not in orbit:
                            orbit.add(y)
                            seen[y] = True
                            frontier.append(y)
                classes.append(tuple(sorted(orbit)))
            classes.sort(key=lambda c: (len(c), c[0]))
            self._classes = classes
            self._class_of = [0] * self.size
            for idx, c in enumerate(classes):
                for x in c:
                    self._class_of[x] = idx
        return self._classes

    def class_of(self, a: int) -> int:
        self.conjugacy_classes()
        return self._class_of[a]

    def centralizer(self, x: int) -> "FiniteGroup":
        """The subgroup {g : gx = xg}, as a group with parent_ids set."""
        member_ids = [g for g in range(self.size) if self.commutes(g, x)]
        perms = [self.perms[g] for g in member_ids]
        sub = FiniteGroup(perms, range(len(perms)), parent=self, parent_ids=member_ids)
        return sub

    def element_name(self, a: int) -> str:
        return cycle_string(self.perms[a])

    def __repr__(self) -> str:
        return f"FiniteGroup(order {self.size})"


def build_group(generators, max_size: int = MAX_GROUP_SIZE) -> FiniteGroup:
    """Close a list of permutations (tuples or cycle strings) into a group."""
    parsed = []
    for g in generators:
        parsed.append(parse_cycles(g) if isinstance(g, str) else _check_permutation(g))
    if parsed:
        degree = max(len(p) for p in parsed)
        parsed = [p + tuple(range(len(p), degree)) for p in parsed]
    return FiniteGroup.from_generators(parsed, max_size=max_size)


def class_index(group: FiniteGroup, cls) -> int:
    """Accept a class index or an element id and return the class index."""
    classes = group.conjugacy_classes()
    if not isinstance(cls, int):
        raise NotAClass(f"{cls!r} is not a conjugacy class index")
    if not 0 <= cls < len(classes):
        raise NotAClass(f"class index {cls} out of range (group has {len(classes)} classes)")
    return cls
