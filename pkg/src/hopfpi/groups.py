"""Finite groups given by Cayley tables, homomorphisms, and a small catalog."""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property

from .errors import InputError


class FiniteGroup:
    """A finite group as an exhaustively validated multiplication table."""

    def __init__(self, table, names=None):
        table = tuple(tuple(int(x) for x in row) for row in table)
        n = len(table)
        if n == 0:
            raise InputError("group must be nonempty")
        if any(len(r) != n for r in table):
            raise InputError("group table must be square")
        if any(not 0 <= x < n for r in table for x in r):
            raise InputError("group table entry out of range")
        if names is None:
            names = [str(i) for i in range(n)]
        names = tuple(str(s) for s in names)
        if len(names) != n or len(set(names)) != n:
            raise InputError("element names must be distinct, one per element")
        ids = [e for e in range(n) if all(table[e][a] == a and table[a][e] == a for a in range(n))]
        if len(ids) != 1:
            raise InputError("group table has no two-sided identity")
        e = ids[0]
        inv = []
        for a in range(n):
            cands = [b for b in range(n) if table[a][b] == e and table[b][a] == e]
            if len(cands) != 1:
                raise InputError(f"element {names[a]} has no two-sided inverse")
            inv.append(cands[0])
        for a, b, c in itertools.product(range(n), repeat=3):
            if table[table[a][b]][c] != table[a][table[b][c]]:
                raise InputError(f"table not associative at {(names[a], names[b], names[c])}")
        self.table = table
        self.names = names
        self.identity = e
        self.inverse = tuple(inv)

    @property
    def size(self):
        return len(self.table)

    def __len__(self):
        return self.size

    def mul(self, a, b):
        return self.table[a][b]

    def inv(self, a):
        return self.inverse[a]

    def prod(self, *xs):
        r = self.identity
        for x in xs:
            r = self.table[r][x]
        return r

    @cached_property
    def is_abelian(self) -> bool:
        n = self.size
        return all(self.table[a][b] == self.table[b][a] for a in range(n) for b in range(a))

    def index(self, name):
        try:
            return self.names.index(str(name))
        except ValueError:
            raise InputError(f"no element named {name!r}") from None

    def __eq__(self, other):
        return isinstance(other, FiniteGroup) and self.table == other.table and self.names == other.names

    def __hash__(self):
        return hash((self.table, self.names))

    def __repr__(self):
        return f"FiniteGroup(order={self.size}, names={list(self.names)})"

    @classmethod
    def from_elements(cls, elements, op, names=None):
        elements = list(elements)
        pos = {x: i for i, x in enumerate(elements)}
        try:
            table = [[pos[op(a, b)] for b in elements] for a in elements]
        except KeyError as exc:
            raise InputError(f"elements not closed under the operation: {exc}") from None
        return cls(table, names)

    @classmethod
    def generated_by(cls, gens, op, identity, name=str):
        """Closure of ``gens`` under ``op``, elements in breadth-first order."""
        elements = [identity]
        seen = {identity}
        frontier = [identity]
        while frontier:
            nxt = []
            for x in frontier:
                for g in gens:
                    y = op(x, g)
                    if y not in seen:
                        seen.add(y)
                        elements.append(y)
                        nxt.append(y)
            frontier = nxt
        return cls.from_elements(elements, op, [name(x) for x in elements])


def direct_product(G: FiniteGroup, H: FiniteGroup) -> FiniteGroup:
    """G x H with lexicographic ordering, G index major: ``(g, h) -> g*|H| + h``."""
    n = H.size
    table = [[G.table[a // n][b // n] * n + H.table[a % n][b % n]
              for b in range(G.size * n)] for a in range(G.size * n)]
    names = [f"({g},{h})" for g in G.names for h in H.names]
    return FiniteGroup(table, names)


def pair_index(H: FiniteGroup, g: int, h: int) -> int:
    return g * H.size + h


def product_grading(P1: FiniteGroup, P2: FiniteGroup):
    """Grading group for pairs ``(a in P1, b in P2)`` and the index map.

    ``P1 x P2`` with ``P1`` major; a trivial factor is dropped, so the result
    is graded by the other group itself.
    """
    if P1.size == 1:
        return P2, lambda a, b: b
    if P2.size == 1:
        return P1, lambda a, b: a
    n = P2.size
    return direct_product(P1, P2), lambda a, b: a * n + b


@dataclass(frozen=True)
class Grading:
    """A group homomorphism ``deg: source -> target``."""

    source: FiniteGroup
    target: FiniteGroup
    map: tuple
    name: str = ""

    def __post_init__(self):
        object.__setattr__(self, "map", tuple(int(x) for x in self.map))
        if len(self.map) != self.source.size:
            raise InputError("grading map must assign a grade to every element")
        if not is_homomorphism(self.source, self.target, self.map):
            raise InputError(f"grading {self.name!r} is not a group homomorphism")

    def fiber(self, alpha):
        return [g for g in range(self.source.size) if self.map[g] == alpha]


def is_homomorphism(G: FiniteGroup, H: FiniteGroup, f) -> bool:
    if any(not 0 <= x < H.size for x in f):
        return False
    return all(f[G.mul(a, b)] == H.mul(f[a], f[b]) for a in range(G.size) for b in range(G.size))


def hom_from_generators(G: FiniteGroup, H: FiniteGroup, images: dict) -> tuple:
    """Extend generator images along the Cayley graph; raise if inconsistent."""
    f = {G.identity: H.identity}
    frontier = [G.identity]
    while frontier:
        nxt = []
        for x in frontier:
            for s, hs in images.items():
                y = G.mul(x, s)
                val = H.mul(f[x], hs)
                if y in f:
                    if f[y] != val:
                        raise InputError("generator images do not define a homomorphism")
                else:
                    f[y] = val
                    nxt.append(y)
        frontier = nxt
    if len(f) != G.size:
        raise InputError("generators do not generate the group")
    out = tuple(f[g] for g in range(G.size))
    if not is_homomorphism(G, H, out):
        raise InputError("generator images do not define a homomorphism")
    return out


def trivial_grading(G: FiniteGroup) -> Grading:
    return Grading(G, trivial_group(), (0,) * G.size, "trivial")


# catalog -------------------------------------------------------------

def trivial_group() -> FiniteGroup:
    return FiniteGroup([[0]], ["e"])


def cyclic(n: int) -> FiniteGroup:
    return FiniteGroup([[(a + b) % n for b in range(n)] for a in range(n)],
                       [str(i) for i in range(n)])


def klein() -> FiniteGroup:
    return direct_product(cyclic(2), cyclic(2))


def _perm_name(p):
    return "".join(str(i) for i in p)


def symmetric(n: int) -> FiniteGroup:
    perms = list(itertools.permutations(range(n)))
    return FiniteGroup.from_elements(
        perms, lambda p, q: tuple(p[q[i]] for i in range(n)), [_perm_name(p) for p in perms])


def perm_sign(p) -> int:
    s = 0
    for i in range(len(p)):
        for j in range(i + 1, len(p)):
            if p[i] > p[j]:
                s ^= 1
    return s


def dihedral(n: int) -> FiniteGroup:
    """Symmetries of a regular n-gon (order 2n) as vertex permutations."""
    r = tuple((i + 1) % n for i in range(n))
    s = tuple((-i) % n for i in range(n))
    ident = tuple(range(n))
    G = FiniteGroup.generated_by([r, s], lambda p, q: tuple(p[q[i]] for i in range(n)),
                                 ident, _perm_name)
    return G


def quaternion() -> FiniteGroup:
    # unit quaternions as (sign, axis) with axis in 1, i, j, k
    units = [(1, "1"), (-1, "1"), (1, "i"), (-1, "i"), (1, "j"), (-1, "j"), (1, "k"), (-1, "k")]
    rule = {
        ("1", "1"): (1, "1"), ("1", "i"): (1, "i"), ("1", "j"): (1, "j"), ("1", "k"): (1, "k"),
        ("i", "1"): (1, "i"), ("i", "i"): (-1, "1"), ("i", "j"): (1, "k"), ("i", "k"): (-1, "j"),
        ("j", "1"): (1, "j"), ("j", "i"): (-1, "k"), ("j", "j"): (-1, "1"), ("j", "k"): (1, "i"),
        ("k", "1"): (1, "k"), ("k", "i"): (1, "j"), ("k", "j"): (-1, "i"), ("k", "k"): (-1, "1"),
    }

    def op(a, b):
        s, ax = rule[(a[1], b[1])]
        return (a[0] * b[0] * s, ax)

    names = [("" if s > 0 else "-") + ax for s, ax in units]
    return FiniteGroup.from_elements(units, op, names)


def catalog_groups() -> dict:
    return {
        "trivial": trivial_group(),
        "Z2": cyclic(2),
        "Z4": cyclic(4),
        "V4": klein(),
        "S3": symmetric(3),
        "D4": dihedral(4),
        "Q8": quaternion(),
    }


def catalog_gradings(name: str, G: FiniteGroup | None = None) -> dict:
    """Named gradings of a catalog group (always including ``trivial``)."""
    G = G or catalog_groups()[name]
    Z2 = cyclic(2)
    V4 = klein()
    out = {"trivial": trivial_grading(G)}
    if name == "Z2":
        out["id"] = Grading(G, Z2, (0, 1), "id")
    elif name == "Z4":
        out["mod2"] = Grading(G, Z2, tuple(i % 2 for i in range(4)), "mod2")
    elif name == "V4":
        out["proj2"] = Grading(G, Z2, tuple(i % 2 for i in range(4)), "proj2")
    elif name == "S3":
        out["sign"] = Grading(G, Z2, tuple(perm_sign(p) for p in map(_parse_perm, G.names)), "sign")
    elif name == "D4":
        perms = [_parse_perm(s) for s in G.names]
        out["det"] = Grading(G, Z2, tuple(perm_sign(p) for p in perms), "det")
        r, s = G.index("1230"), G.index("0321")
        out["ab"] = Grading(G, V4, hom_from_generators(G, V4, {r: V4.index("(1,0)"), s: V4.index("(0,1)")}), "ab")
    elif name == "Q8":
        i, j = G.index("i"), G.index("j")
        out["quot"] = Grading(G, Z2, hom_from_generators(G, Z2, {i: 0, j: 1}), "quot")
        out["ab"] = Grading(G, V4, hom_from_generators(G, V4, {i: V4.index("(1,0)"), j: V4.index("(0,1)")}), "ab")
    return out


def _parse_perm(name):
    return tuple(int(c) for c in name)
