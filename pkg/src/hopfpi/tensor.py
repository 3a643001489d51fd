"""Sweedler-style evaluation of multilinear formulas on basis tuples.

A ``Tens`` is a sum of pure tensors over a fixed tuple of grades, tagged
by the input basis tuple it was computed from. Checks start from
``Tens.basis`` (every basis tuple of a grade tuple at once), push the terms
through structure maps, and compare the two sides tag by tag. Since every
identity involved is multilinear, agreement on basis tuples is agreement
everywhere.

Structure maps are passed as *families* answering

* ``unary(g) -> (columns, out_grade)`` with ``columns[j] = {i: c}``;
* ``binary(g, h) -> (table, out_grade)`` with ``table[j][k] = {i: c}``;
* ``split_table(g)`` / ``counit_vec(g)`` for coalgebras.

Grades are plain ints; each family interprets them in its own group.
"""
from __future__ import annotations

import itertools

from . import kernel
from .errors import ShapeError


class Tens:
    __slots__ = ("field", "grades", "terms")

    def __init__(self, field, grades, terms):
        self.field = field
        self.grades = tuple(grades)
        self.terms = terms

    @classmethod
    def basis(cls, field, grades, dims):
        """All basis tuples of ``H_{g_1} x ... x H_{g_n}``, each tagged by itself."""
        ranges = [range(d) for d in dims]
        terms = {(t,) + t: 1 for t in itertools.product(*ranges)}
        return cls(field, grades, terms)

    @classmethod
    def single(cls, field, grades, vectors, tag=()):
        """Pure tensor of sparse vectors ``{i: c}`` (one per factor)."""
        terms = {(tag,): 1}
        t = cls(field, (), terms)
        for pos, (g, vec) in enumerate(zip(grades, vectors)):
            t = t.put(pos, g, vec)
        return t

    def _new(self, grades, terms):
        return Tens(self.field, grades, terms)

    @property
    def mod(self):
        return self.field.mod

    def lin(self, pos, fam):
        table, out = fam.unary(self.grades[pos])
        g = list(self.grades)
        g[pos] = out
        return self._new(g, kernel.apply_linear(self.terms, pos + 1, table, self.mod))

    def mul(self, pos, fam):
        table, out = fam.binary(self.grades[pos], self.grades[pos + 1])
        g = list(self.grades)
        g[pos:pos + 2] = [out]
        return self._new(g, kernel.apply_bilinear(self.terms, pos + 1, table, self.mod))

    def split(self, pos, coalg, times=1):
        """Iterated coproduct ``(Delta x id)Delta...`` on factor ``pos``."""
        t = self
        for _ in range(times):
            g = t.grades[pos]
            grades = t.grades[:pos] + (g, g) + t.grades[pos + 1:]
            t = t._new(grades, kernel.apply_split(t.terms, pos + 1, coalg.split_table(g), t.mod))
        return t

    def eps(self, pos, coalg):
        g = list(self.grades)
        vec = coalg.counit_vec(g.pop(pos))
        return self._new(g, kernel.apply_functional(self.terms, pos + 1, vec, self.mod))

    def put(self, pos, grade, vec):
        """Tensor in a fixed sparse vector as a new factor at ``pos``."""
        g = list(self.grades)
        g.insert(pos, grade)
        return self._new(g, kernel.insert_vector(self.terms, pos + 1, dict(vec), self.mod))

    def perm(self, *order):
        """New factor ``k`` is old factor ``order[k]``."""
        if sorted(order) != list(range(len(self.grades))):
            raise ValueError(f"bad permutation {order} for {len(self.grades)} factors")
        g = [self.grades[p] for p in order]
        return self._new(g, kernel.permute(self.terms, (0,) + tuple(p + 1 for p in order)))

    def twist(self, pos, fam):
        """Apply a map ``H_g (x) H_h -> H_g' (x) H_h'`` given as kron-basis columns."""
        table, (o1, o2) = fam.pair_table(self.grades[pos], self.grades[pos + 1])
        g = list(self.grades)
        g[pos:pos + 2] = [o1, o2]
        flat = kernel.apply_bilinear(self.terms, pos + 1, table, self.mod)
        return self._new(g, kernel.apply_split(flat, pos + 1, _decoder(*fam.out_dims(o1, o2)), self.mod))

    def scale(self, c):
        c = self.field(c)
        return self._new(self.grades, kernel.combine({}, self.terms, c, self.mod))

    def __add__(self, other):
        self._same(other)
        return self._new(self.grades, kernel.combine(self.terms, other.terms, 1, self.mod))

    def __sub__(self, other):
        self._same(other)
        return self._new(self.grades, kernel.combine(self.terms, other.terms, -1, self.mod))

    def _same(self, other):
        if self.grades != other.grades:
            raise ShapeError(f"grade mismatch {self.grades} vs {other.grades}")

    def by_tag(self) -> dict:
        out: dict = {}
        for key, c in self.terms.items():
            out.setdefault(key[0], {})[key[1:]] = c
        return out

    def __repr__(self):
        return f"Tens(grades={self.grades}, nnz={len(self.terms)})"


_DECODERS: dict = {}


def _decoder(d1, d2):
    key = (d1, d2)
    if key not in _DECODERS:
        _DECODERS[key] = [{(i // d2, i % d2): 1} for i in range(d1 * d2)] if d2 else []
    return _DECODERS[key]


def flat(indices, dims):
    """Kronecker index of a multi-index."""
    k = 0
    for i, d in zip(indices, dims):
        k = k * d + i
    return k


def compare(report, axiom, lhs: Tens, rhs: Tens, grades=(), formula=None):
    """Record every tag where ``lhs`` and ``rhs`` differ as a failure of ``axiom``."""
    report.touch(axiom, formula)
    if lhs.grades != rhs.grades:
        raise ShapeError(f"{axiom}: sides live in different grades {lhs.grades} vs {rhs.grades}")
    diff = kernel.combine(lhs.terms, rhs.terms, -1, lhs.mod)
    if not diff:
        return True
    bad = sorted({k[0] for k in diff})
    ltag = lhs.by_tag()
    rtag = rhs.by_tag()
    for tag in bad:
        report.fail(axiom, grades, tag,
                    tuple(sorted(ltag.get(tag, {}).items())),
                    tuple(sorted(rtag.get(tag, {}).items())))
    return False


def collect(t: Tens, in_groups, out_groups) -> dict:
    """Flatten terms to ``{(in_1, .., in_m, out_1, .., out_n): c}``.

    ``in_groups`` partitions the tag into blocks of dims, ``out_groups`` the
    output factors; each block is collapsed to its Kronecker index.
    """
    def fold(idx, groups):
        out, p = [], 0
        for dims in groups:
            out.append(flat(idx[p:p + len(dims)], dims))
            p += len(dims)
        return out
    res = {}
    for key, c in t.terms.items():
        res[tuple(fold(key[0], in_groups) + fold(key[1:], out_groups))] = c
    return res


def product_tensor(t: Tens, field, d_out, d1, d2, in_groups=None, out_groups=None):
    """Two-input, one-output result as a product ``StructureTensor``."""
    from .linalg import StructureTensor
    raw = collect(t, in_groups or [(d1,), (d2,)], out_groups or [(d_out,)])
    return StructureTensor(field, (d_out, d1, d2), {(i, j, k): c for (j, k, i), c in raw.items()})


def linear_matrix(t: Tens, field, rows, cols, in_groups=None, out_groups=None):
    """One-input result as a ``rows x cols`` matrix."""
    from .linalg import Matrix
    raw = collect(t, in_groups or [(cols,)], out_groups or [(rows,)])
    data = [0] * (rows * cols)
    for (j, i), c in raw.items():
        data[i * cols + j] = c
    return Matrix(field, rows, cols, data)


def coproduct_tensor(t: Tens, field, d, in_groups=None, out_groups=None):
    from .linalg import StructureTensor
    raw = collect(t, in_groups or [(d,)], out_groups or [(d,), (d,)])
    return StructureTensor(field, (d, d, d), raw)


def vector(t: Tens, field, d, out_groups=None):
    raw = collect(t, [()], out_groups or [(d,)])
    v = [0] * d
    for (_, i), c in raw.items():
        v[i] = c
    return tuple(v)
