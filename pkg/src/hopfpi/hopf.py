"""Hopf pi-algebras as exact structure constants, and their axiom checkers.

A Hopf pi-algebra is a family ``{H_a}`` of coalgebras indexed by a finite
group ``pi`` with graded multiplication ``H_a (x) H_b -> H_ab``, a unit in
``H_e`` and an antipode ``S_a: H_a -> H_{a^-1}``. Everything is stored per
grade relative to the input basis order; zero-dimensional grades are legal
and skipped by every checker.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property

from .errors import OneSidedInverseError, ShapeError
from .groups import FiniteGroup, Grading, is_homomorphism
from .linalg import Field, Matrix, QQ, StructureTensor, same_field, solve_sparse
from .report import CheckReport
from .tensor import Tens, compare


@dataclass(frozen=True)
class GradedSpace:
    group: FiniteGroup
    dims: tuple
    basis_names: tuple | None = None

    def __post_init__(self):
        object.__setattr__(self, "dims", tuple(int(d) for d in self.dims))
        if len(self.dims) != self.group.size:
            raise ShapeError(f"{len(self.dims)} dims for a group of order {self.group.size}")
        if any(d < 0 for d in self.dims):
            raise ShapeError("negative dimension")
        if self.basis_names is not None:
            names = tuple(tuple(str(x) for x in ns) for ns in self.basis_names)
            if tuple(len(n) for n in names) != self.dims:
                raise ShapeError("basis names do not match dims")
            object.__setattr__(self, "basis_names", names)

    @property
    def total(self):
        return sum(self.dims)

    def grades(self):
        return [a for a in range(self.group.size) if self.dims[a]]

    def tuples(self, k):
        """Grade k-tuples with every factor nonempty, in lexicographic order."""
        return list(itertools.product(self.grades(), repeat=k))

    def same_shape(self, other):
        return self.group == other.group and self.dims == other.dims


class GradedLinearMap:
    """Family ``f_a: source_a -> target_{shift(a)}`` of dense blocks."""

    def __init__(self, source: GradedSpace, target: GradedSpace, shift, blocks: dict):
        shift = tuple(int(s) for s in shift)
        if len(shift) != source.group.size or any(not 0 <= s < target.group.size for s in shift):
            raise ShapeError("grade shift must map every source grade into the target group")
        blocks = dict(blocks)
        fields = set()
        for a in range(source.group.size):
            want = (target.dims[shift[a]], source.dims[a])
            if a not in blocks:
                if want[0] and want[1]:
                    raise ShapeError(f"missing block for grade {a}")
                continue
            if blocks[a].shape != want:
                raise ShapeError(f"block {a} has shape {blocks[a].shape}, expected {want}")
            fields.add(blocks[a].field)
        if len(fields) > 1:
            raise ShapeError("blocks over different fields")
        self.field = fields.pop() if fields else QQ
        for a in range(source.group.size):
            if a not in blocks:
                blocks[a] = Matrix.zeros(self.field, target.dims[shift[a]], source.dims[a])
        self.source = source
        self.target = target
        self.shift = shift
        self.blocks = blocks

    def unary(self, a):
        return self.blocks[a].column_table, self.shift[a]

    def __getitem__(self, a):
        return self.blocks[a]

    def __eq__(self, other):
        if not isinstance(other, GradedLinearMap):
            return NotImplemented
        return (self.shift == other.shift and self.source.same_shape(other.source)
                and self.target.same_shape(other.target) and self.blocks == other.blocks)

    def __repr__(self):
        return f"GradedLinearMap(shift={self.shift}, dims={self.source.dims}->{self.target.dims})"

    def then(self, other: "GradedLinearMap") -> "GradedLinearMap":
        """``other o self``."""
        if not other.source.same_shape(self.target):
            raise ShapeError("composition of incompatible graded maps")
        shift = tuple(other.shift[s] for s in self.shift)
        blocks = {a: other.blocks[self.shift[a]] @ self.blocks[a] for a in self.blocks}
        return GradedLinearMap(self.source, other.target, shift, blocks)

    @classmethod
    def identity(cls, space: GradedSpace, field: Field = QQ):
        return cls(space, space, range(space.group.size),
                   {a: Matrix.identity(field, d) for a, d in enumerate(space.dims)})

    @classmethod
    def from_columns(cls, source, target, shift, field, columns: dict):
        """``columns[a][j] = {i: c}``: image of basis vector ``j`` of grade ``a``."""
        blocks = {a: Matrix.from_columns(field, target.dims[shift[a]], cols)
                  for a, cols in columns.items()}
        return cls(source, target, shift, blocks)

    def with_entry(self, grade, i, j, value):
        blocks = dict(self.blocks)
        M = blocks[grade]
        data = list(M.entries)
        data[i * M.cols + j] = value
        blocks[grade] = Matrix(M.field, M.rows, M.cols, data)
        return GradedLinearMap(self.source, self.target, self.shift, blocks)


class HopfPiAlgebra:
    """Structure constants of a Hopf pi-algebra (antipode may be ``None``
    for bialgebra-only input, see ``solve_antipode``)."""

    def __init__(self, space: GradedSpace, mult: dict, unit, comult: dict, counit: dict,
                 antipode: GradedLinearMap | None = None):
        G = space.group
        dims = space.dims
        fields = set()
        mult = dict(mult)
        for a in range(G.size):
            for b in range(G.size):
                want = (dims[G.mul(a, b)], dims[a], dims[b])
                T = mult.get((a, b))
                if T is None:
                    if want[0] and want[1] and want[2]:
                        raise ShapeError(f"missing multiplication block {(a, b)}")
                    continue
                if T.shape != want:
                    raise ShapeError(f"multiplication block {(a, b)} has shape {T.shape}, expected {want}")
                fields.add(T.field)
        comult = dict(comult)
        counit = {a: tuple(v) for a, v in counit.items()}
        for a in range(G.size):
            d = dims[a]
            if d:
                if a not in comult or a not in counit:
                    raise ShapeError(f"missing coalgebra data in grade {a}")
                if comult[a].shape != (d, d, d):
                    raise ShapeError(f"comultiplication block {a} has shape {comult[a].shape}")
                if len(counit[a]) != d:
                    raise ShapeError(f"counit block {a} has length {len(counit[a])}")
                fields.add(comult[a].field)
        if len(fields) > 1:
            raise ShapeError("structure constants over different fields")
        F = fields.pop() if fields else QQ
        for a in range(G.size):
            for b in range(G.size):
                if (a, b) not in mult:
                    mult[(a, b)] = StructureTensor(F, (dims[G.mul(a, b)], dims[a], dims[b]), {})
            if a not in comult:
                comult[a] = StructureTensor(F, (dims[a],) * 3, {})
                counit[a] = ()
        unit = tuple(F(x) for x in unit)
        if len(unit) != dims[G.identity]:
            raise ShapeError(f"unit has length {len(unit)}, H_e has dimension {dims[G.identity]}")
        counit = {a: tuple(F(x) for x in v) for a, v in counit.items()}
        if antipode is not None:
            if antipode.shift != G.inverse:
                raise ShapeError("antipode must shift grades by inversion")
            if not (antipode.source.same_shape(space) and antipode.target.same_shape(space)):
                raise ShapeError("antipode blocks do not match the graded space")
            if antipode.field != F and any(antipode.blocks[a].entries for a in antipode.blocks):
                raise ShapeError("antipode over a different field")
        self.field = F
        self.space = space
        self.mult = mult
        self.unit = unit
        self.comult = comult
        self.counit = counit
        self.antipode = antipode

    # families ---------------------------------------------------------
    @property
    def group(self) -> FiniteGroup:
        return self.space.group

    @property
    def dims(self):
        return self.space.dims

    @property
    def S(self):
        return self.antipode

    def binary(self, a, b):
        return self.mult[(a, b)].product_table, self.group.mul(a, b)

    def split_table(self, a):
        return self.comult[a].split_table

    def counit_vec(self, a):
        return self.counit[a]

    @cached_property
    def unit_vec(self) -> dict:
        return {i: c for i, c in enumerate(self.unit) if c}

    @property
    def e(self):
        return self.group.identity

    def basis(self, *grades) -> Tens:
        return Tens.basis(self.field, grades, [self.dims[g] for g in grades])

    def one(self, tens: Tens, pos: int) -> Tens:
        return tens.put(pos, self.e, self.unit_vec)

    # derived structures ----------------------------------------------
    def replace(self, **kw) -> "HopfPiAlgebra":
        args = dict(space=self.space, mult=self.mult, unit=self.unit, comult=self.comult,
                    counit=self.counit, antipode=self.antipode)
        args.update(kw)
        return HopfPiAlgebra(**args)

    def same_structure(self, other: "HopfPiAlgebra") -> bool:
        def norm(A):
            return ({k: v.data for k, v in A.mult.items()}, A.unit,
                    {k: v.data for k, v in A.comult.items()}, A.counit)
        if not self.space.same_shape(other.space) or self.field != other.field:
            return False
        if norm(self) != norm(other):
            return False
        if (self.antipode is None) != (other.antipode is None):
            return False
        return self.antipode is None or self.antipode == other.antipode

    def same_coalgebra(self, other: "HopfPiAlgebra") -> bool:
        return (self.space.same_shape(other.space)
                and {k: v.data for k, v in self.comult.items()} == {k: v.data for k, v in other.comult.items()}
                and self.counit == other.counit)

    def coalgebra_at(self, a) -> "Coalgebra":
        return Coalgebra(self.field, self.dims[a], self.comult[a].split_table, self.counit[a])

    def algebra_at_unit(self) -> "Algebra":
        e = self.e
        return Algebra(self.field, self.dims[e], self.mult[(e, e)].product_table, self.unit_vec)

    def unit_component(self) -> "HopfPiAlgebra":
        """``H_e`` as an ordinary Hopf algebra (trivial grading group)."""
        from .groups import trivial_group
        e = self.e
        names = (self.space.basis_names[e],) if self.space.basis_names else None
        space = GradedSpace(trivial_group(), (self.dims[e],), names)
        S = None
        if self.antipode is not None:
            S = GradedLinearMap(space, space, (0,), {0: self.antipode.blocks[e]})
        return HopfPiAlgebra(space, {(0, 0): self.mult[(e, e)]}, self.unit,
                             {0: self.comult[e]}, {0: self.counit[e]}, S)

    def opposite(self) -> "HopfPiAlgebra":
        """``m^op_{a,b}(x, y) = m_{b,a}(y, x)``; needs ``pi`` abelian."""
        if not self.group.is_abelian:
            from .errors import PreconditionError
            raise PreconditionError("opposite algebra requires abelian pi")
        mult = {}
        for (a, b), T in self.mult.items():
            src = self.mult[(b, a)]
            mult[(a, b)] = StructureTensor(self.field, T.shape,
                                           {(i, j, k): v for (i, k, j), v in src.data.items()})
        return self.replace(mult=mult)


@dataclass(frozen=True)
class Coalgebra:
    field: Field
    dim: int
    split: list
    counit: tuple


@dataclass(frozen=True)
class Algebra:
    field: Field
    dim: int
    table: list  # table[r][s] = {t: c}
    unit: dict


def matrix_algebra(field: Field, n: int) -> Algebra:
    """``End(k^n)`` with matrix units ``E_rs`` at index ``r*n + s``; product is composition."""
    table = [[{} for _ in range(n * n)] for _ in range(n * n)]
    for r, s, u in itertools.product(range(n), repeat=3):
        table[r * n + s][s * n + u] = {r * n + u: 1}
    return Algebra(field, n * n, table, {r * n + r: 1 for r in range(n)})


# checks ---------------------------------------------------------------

def _require_shapes(H):
    if not isinstance(H, HopfPiAlgebra):
        raise ShapeError(f"expected HopfPiAlgebra, got {type(H).__name__}")


def check_bialgebra(H: HopfPiAlgebra, report: CheckReport | None = None) -> CheckReport:
    _require_shapes(H)
    rep = report if report is not None else CheckReport()
    e = H.e
    for a, b, c in H.space.tuples(3):
        t = H.basis(a, b, c)
        compare(rep, "associativity", t.mul(0, H).mul(0, H), t.mul(1, H).mul(0, H), (a, b, c),
                "m(m(x,y),z) = m(x,m(y,z))")
    for a in H.space.grades():
        t = H.basis(a)
        if H.dims[e]:
            compare(rep, "unit", H.one(t, 0).mul(0, H), t, (a,), "m(1,x) = x")
            compare(rep, "unit", H.one(t, 1).mul(0, H), t, (a,), "m(x,1) = x")
        else:
            rep.touch("unit")
            rep.fail("unit", (a,), (), (), ())
        compare(rep, "coassociativity", t.split(0, H).split(0, H), t.split(0, H).split(1, H), (a,),
                "(D x id)D = (id x D)D")
        compare(rep, "counit", t.split(0, H).eps(0, H), t, (a,), "(eps x id)D = id")
        compare(rep, "counit", t.split(0, H).eps(1, H), t, (a,), "(id x eps)D = id")
    for a, b in H.space.tuples(2):
        t = H.basis(a, b)
        lhs = t.mul(0, H).split(0, H)
        rhs = t.split(0, H).split(2, H).perm(0, 2, 1, 3).mul(0, H).mul(1, H)
        compare(rep, "comult_multiplicative", lhs, rhs, (a, b), "D(xy) = D(x)D(y)")
        compare(rep, "counit_multiplicative", t.mul(0, H).eps(0, H), t.eps(0, H).eps(0, H), (a, b),
                "eps(xy) = eps(x)eps(y)")
    if H.dims[e]:
        one = Tens.single(H.field, (e,), [H.unit_vec])
        compare(rep, "unit_grouplike", one.split(0, H), Tens.single(H.field, (e, e), [H.unit_vec, H.unit_vec]),
                (e,), "D(1) = 1 x 1")
        compare(rep, "unit_grouplike", one.eps(0, H), Tens.single(H.field, (), []), (e,), "eps(1) = 1")
    return rep


def check_antipode_axiom(H: HopfPiAlgebra, rep: CheckReport, name="antipode", S=None):
    S = S if S is not None else H.antipode
    rep.touch(name, "m(S x id)D = eps 1 = m(id x S)D")
    if S is None:
        rep.fail(name)
        rep.notes.append("antipode missing")
        return rep
    for a in H.space.grades():
        t = H.basis(a)
        unit_side = H.one(t.eps(0, H), 0) if H.dims[H.e] else t.eps(0, H)
        compare(rep, name, t.split(0, H).lin(0, S).mul(0, H), unit_side, (a,))
        compare(rep, name, t.split(0, H).lin(1, S).mul(0, H), unit_side, (a,))
    return rep


def check_hopf_pi_algebra(H: HopfPiAlgebra) -> CheckReport:
    """Every Hopf pi-algebra axiom, on all basis tuples of all grade tuples."""
    rep = check_bialgebra(H)
    return check_antipode_axiom(H, rep)


def is_cocommutative(H: HopfPiAlgebra) -> bool:
    for a in H.space.grades():
        t = H.basis(a).split(0, H)
        if t.terms != t.perm(1, 0).terms:
            return False
    return True


def check_cocommutative(H: HopfPiAlgebra, rep: CheckReport | None = None, name="cocommutative"):
    rep = rep if rep is not None else CheckReport()
    for a in H.space.grades():
        t = H.basis(a).split(0, H)
        compare(rep, name, t, t.perm(1, 0), (a,), "flip D = D")
    return rep


def check_antipode_identities(H: HopfPiAlgebra) -> CheckReport:
    rep = CheckReport()
    S = H.antipode
    if S is None:
        rep.fail("antipode_present")
        return rep
    for a, b in H.space.tuples(2):
        t = H.basis(a, b)
        compare(rep, "antipode_antimultiplicative", t.lin(0, S).lin(1, S).perm(1, 0).mul(0, H),
                t.mul(0, H).lin(0, S), (a, b), "S(y)S(x) = S(xy)")
    for a in H.space.grades():
        t = H.basis(a)
        compare(rep, "antipode_anticomultiplicative", t.lin(0, S).split(0, H),
                t.split(0, H).lin(0, S).lin(1, S).perm(1, 0), (a,), "D S = flip (S x S) D")
        compare(rep, "antipode_counit", t.lin(0, S).eps(0, H), t.eps(0, H), (a,), "eps S = eps")
    e = H.e
    if H.dims[e]:
        one = Tens.single(H.field, (e,), [H.unit_vec])
        compare(rep, "antipode_unit", one.lin(0, S), one, (e,), "S(1) = 1")
    if is_cocommutative(H):
        for a in H.space.grades():
            t = H.basis(a)
            compare(rep, "antipode_involutive", t.lin(0, S).lin(0, S), t, (a,), "S S = id")
    return rep


def check_hopf_morphism(f: GradedLinearMap, H: HopfPiAlgebra, K: HopfPiAlgebra,
                        check_antipode=True) -> CheckReport:
    """``f: H -> K`` is a morphism of Hopf pi-algebras.

    The grade shift of ``f`` must be a group homomorphism (normally the
    identity); anything else is a shape error.
    """
    if not (f.source.same_shape(H.space) and f.target.same_shape(K.space)):
        raise ShapeError("morphism blocks do not match source/target algebras")
    if not is_homomorphism(H.group, K.group, f.shift):
        raise ShapeError("morphism grade shift is not a group homomorphism")
    rep = CheckReport()
    for a, b in H.space.tuples(2):
        t = H.basis(a, b)
        compare(rep, "morphism_multiplicative", t.mul(0, H).lin(0, f),
                t.lin(0, f).lin(1, f).mul(0, K), (a, b), "f(xy) = f(x)f(y)")
    for a in H.space.grades():
        t = H.basis(a)
        compare(rep, "morphism_comultiplicative", t.lin(0, f).split(0, K),
                t.split(0, H).lin(0, f).lin(1, f), (a,), "D f = (f x f) D")
        compare(rep, "morphism_counit", t.lin(0, f).eps(0, K), t.eps(0, H), (a,), "eps f = eps")
        if check_antipode and H.antipode is not None and K.antipode is not None:
            compare(rep, "morphism_antipode", t.lin(0, f).lin(0, K.antipode),
                    t.lin(0, H.antipode).lin(0, f), (a,), "S f = f S")
    e = H.e
    if H.dims[e]:
        one = Tens.single(H.field, (e,), [H.unit_vec])
        rhs = Tens.single(K.field, (K.e,), [K.unit_vec])
        compare(rep, "morphism_unit", one.lin(0, f), rhs, (e,), "f(1) = 1")
    return rep


# constructors ---------------------------------------------------------

def group_algebra(grading: Grading, field: Field = QQ) -> HopfPiAlgebra:
    """``k[Gamma]`` graded by ``deg: Gamma -> pi``; basis of ``H_a`` is the fiber
    over ``a`` in element order, all basis elements group-like."""
    G, P = grading.source, grading.target
    fibers = [grading.fiber(a) for a in range(P.size)]
    where = {}
    for a, fib in enumerate(fibers):
        for i, g in enumerate(fib):
            where[g] = (a, i)
    dims = tuple(len(f) for f in fibers)
    space = GradedSpace(P, dims, tuple(tuple(G.names[g] for g in fib) for fib in fibers))
    mult = {}
    for a in range(P.size):
        for b in range(P.size):
            data = {}
            for j, g in enumerate(fibers[a]):
                for k, h in enumerate(fibers[b]):
                    c, i = where[G.mul(g, h)]
                    data[(i, j, k)] = 1
            mult[(a, b)] = StructureTensor(field, (dims[P.mul(a, b)], dims[a], dims[b]), data)
    comult = {a: StructureTensor(field, (dims[a],) * 3, {(j, j, j): 1 for j in range(dims[a])})
              for a in range(P.size)}
    counit = {a: (1,) * dims[a] for a in range(P.size)}
    unit = [0] * dims[P.identity]
    unit[where[G.identity][1]] = 1
    S = GradedLinearMap.from_columns(
        space, space, P.inverse, field,
        {a: [{where[G.inv(g)][1]: 1} for g in fibers[a]] for a in range(P.size)})
    return HopfPiAlgebra(space, mult, unit, comult, counit, S)


# convolution inverse / antipode solving ------------------------------

def _convolve(C: Coalgebra, A: Algebra, left: list, right: list) -> list:
    """Columns of ``x -> left(x_(1)) right(x_(2))`` for sparse column lists."""
    F = C.field
    out = []
    for x in range(C.dim):
        acc: dict = {}
        for (i, j), c in C.split[x].items():
            for r, gr in left[i].items():
                for s, fs in right[j].items():
                    for t, mu in A.table[r][s].items():
                        acc[t] = F.add(acc.get(t, 0), F.mul(F.mul(c, gr), F.mul(fs, mu)))
        out.append({t: F.normalize(v) for t, v in acc.items() if v})
    return out


def _eps_unit(C: Coalgebra, A: Algebra) -> list:
    F = C.field
    return [{t: F.normalize(F.mul(C.counit[x], u)) for t, u in A.unit.items() if C.counit[x]}
            for x in range(C.dim)]


def convolution_inverse(C: Coalgebra, A: Algebra, f: Matrix):
    """Solve ``g(x_(1)) f(x_(2)) = eps(x) 1_A`` for ``g: C -> A``.

    Returns ``g`` as an ``A.dim x C.dim`` matrix, or ``None`` if no left
    inverse exists. The right-inverse equation is verified afterwards; a
    left inverse that is not a right inverse (or a non-unique solution)
    raises ``OneSidedInverseError``.
    """
    F = same_field(C, A, f)
    if f.shape != (A.dim, C.dim):
        raise ShapeError(f"map C->A must be {A.dim}x{C.dim}, got {f.shape}")
    n, m = C.dim, A.dim
    fcols = f.column_table
    rows, rhs = [], []
    for x in range(n):
        eq = [dict() for _ in range(m)]
        for (i, j), c in C.split[x].items():
            for s, fs in fcols[j].items():
                cf = F.mul(c, fs)
                for r in range(m):
                    for t, mu in A.table[r][s].items():
                        key = r * n + i
                        row = eq[t]
                        row[key] = F.add(row.get(key, 0), F.mul(cf, mu))
        for t in range(m):
            rows.append(eq[t])
            rhs.append(F.mul(C.counit[x], A.unit.get(t, 0)))
    sol = solve_sparse(rows, rhs, m * n, F)
    if sol is None:
        return None
    g = Matrix(F, m, n, sol.x)
    if sol.nullspace:
        raise OneSidedInverseError(f"left convolution inverse not unique (nullity {len(sol.nullspace)})")
    if _convolve(C, A, fcols, g.column_table) != _eps_unit(C, A):
        raise OneSidedInverseError("left convolution inverse fails the right-inverse equation")
    return g


def solve_antipode(H: HopfPiAlgebra):
    """Recover ``S`` from bialgebra data by solving ``m(S x id)D = eps 1``
    grade by grade; verifies the other side and returns ``None`` if either
    fails."""
    G = H.group
    F = H.field
    e = H.e
    de = H.dims[e]
    columns = {}
    for a in range(G.size):
        n = H.dims[a]
        ai = G.inv(a)
        m = H.dims[ai]
        if not n:
            continue
        table = H.mult[(ai, a)].product_table
        rows, rhs = [], []
        for x in range(n):
            eq = [dict() for _ in range(de)]
            for (i, j), c in H.comult[a].split_table[x].items():
                for r in range(m):
                    for t, mu in table[r][j].items():
                        key = r * n + i
                        eq[t][key] = F.add(eq[t].get(key, 0), F.mul(c, mu))
            for t in range(de):
                rows.append(eq[t])
                rhs.append(F.mul(H.counit[a][x], H.unit[t]))
        sol = solve_sparse(rows, rhs, m * n, F)
        if sol is None:
            return None
        M = Matrix(F, m, n, sol.x)
        columns[a] = M
    S = GradedLinearMap(H.space, H.space, G.inverse, columns)
    rep = CheckReport()
    check_antipode_axiom(H, rep, S=S)
    if not rep.passed:
        return None
    return S
