"""Hopf pi-braces, their actions and braidings, and brace constructors."""
from __future__ import annotations

from functools import cached_property

from .errors import AxiomError, FieldMismatchError, InputError, PreconditionError, ShapeError
from .groups import FiniteGroup, Grading, product_grading
from .hopf import (GradedLinearMap, GradedSpace, HopfPiAlgebra, check_hopf_morphism,
                   check_hopf_pi_algebra, is_cocommutative)
from .linalg import Matrix, StructureTensor, invert
from .report import CheckReport
from .tensor import (Tens, compare, coproduct_tensor, linear_matrix, product_tensor)


class HopfPiBrace:
    """``(H, ., S)`` and ``(H, o, T)`` on one coalgebra family."""

    def __init__(self, dot: HopfPiAlgebra, circ: HopfPiAlgebra):
        if dot.field != circ.field:
            raise FieldMismatchError("brace structures over different fields")
        if not dot.same_coalgebra(circ):
            raise ShapeError("the two structures do not share one coalgebra family")
        self.dot = dot
        self.circ = circ

    field = property(lambda self: self.dot.field)
    space = property(lambda self: self.dot.space)
    group = property(lambda self: self.dot.group)
    dims = property(lambda self: self.dot.dims)
    S = property(lambda self: self.dot.antipode)
    T = property(lambda self: self.circ.antipode)

    def split_table(self, a):
        return self.dot.split_table(a)

    def counit_vec(self, a):
        return self.dot.counit_vec(a)

    def basis(self, *grades):
        return self.dot.basis(*grades)

    @cached_property
    def cocommutative(self):
        return is_cocommutative(self.dot)

    def replace(self, dot=None, circ=None):
        return HopfPiBrace(dot or self.dot, circ or self.circ)

    def same_structure(self, other):
        return self.dot.same_structure(other.dot) and self.circ.same_structure(other.circ)


def trivial_brace(H: HopfPiAlgebra) -> HopfPiBrace:
    return HopfPiBrace(H, H)


def opposite_brace(H: HopfPiAlgebra) -> HopfPiBrace:
    """``g o h = hg`` with ``T = S`` (abelian pi)."""
    return HopfPiBrace(H, H.opposite())


# checks ---------------------------------------------------------------

BRACE_FORMULA = "g o (h l) = (g1 o h) S(g2) (g3 o l)"


def check_brace(B: HopfPiBrace) -> CheckReport:
    rep = CheckReport()
    rep.merge(check_hopf_pi_algebra(B.dot), "dot.")
    rep.merge(check_hopf_pi_algebra(B.circ), "circ.")
    H, C = B.dot, B.circ
    if H.antipode is not None:
        for a, b, c in B.space.tuples(3):
            t = B.basis(a, b, c)
            lhs = t.mul(1, H).mul(0, C)
            rhs = (t.split(0, H, times=2).perm(0, 3, 1, 2, 4).mul(0, C).lin(1, H.S)
                   .mul(2, C).mul(0, H).mul(0, H))
            compare(rep, "brace_compatibility", lhs, rhs, (a, b, c), BRACE_FORMULA)
    e = B.group.identity
    if B.dims[e]:
        compare(rep, "circ_unit", Tens.single(B.field, (e,), [C.unit_vec]),
                Tens.single(B.field, (e,), [H.unit_vec]), (e,), "1o = 1")
    return rep


def check_brace_lemma(B: HopfPiBrace) -> CheckReport:
    """``S(g1 o h) g2 = S(g1) (g2 o S(h))`` on all basis pairs."""
    rep = CheckReport()
    H, C = B.dot, B.circ
    for a, b in B.space.tuples(2):
        t = B.basis(a, b)
        lhs = t.split(0, H).perm(0, 2, 1).mul(0, C).lin(0, H.S).mul(0, H)
        rhs = t.lin(1, H.S).split(0, H).mul(1, C).lin(0, H.S).mul(0, H)
        compare(rep, "brace_lemma", lhs, rhs, (a, b), "S(g1 o h) g2 = S(g1) (g2 o S(h))")
    return rep


# actions --------------------------------------------------------------

class ActionFamily:
    """Bilinear family ``X_a (x) Y_b -> Z_out(a, b)`` stored as product tensors."""

    def __init__(self, field, blocks: dict, out: dict):
        if set(blocks) != set(out):
            raise ShapeError("action blocks and output grades disagree")
        for key, T in blocks.items():
            if T.field != field:
                raise FieldMismatchError("action block over a different field")
        self.field = field
        self.blocks = dict(blocks)
        self.out = dict(out)

    def binary(self, a, b):
        try:
            return self.blocks[(a, b)].product_table, self.out[(a, b)]
        except KeyError:
            raise ShapeError(f"action has no block for grades {(a, b)}") from None

    def __eq__(self, other):
        if not isinstance(other, ActionFamily):
            return NotImplemented
        return self.out == other.out and all(
            self.blocks[k].data == other.blocks[k].data and self.blocks[k].shape == other.blocks[k].shape
            for k in self.blocks) and set(self.blocks) == set(other.blocks)

    def __repr__(self):
        return f"ActionFamily({len(self.blocks)} blocks)"

    def with_entry(self, key, idx, value):
        blocks = dict(self.blocks)
        blocks[key] = blocks[key].with_entry(idx, value)
        return ActionFamily(self.field, blocks, self.out)

    def apply(self, a, x, b, y) -> dict:
        """Value on sparse vectors ``x`` (grade a) and ``y`` (grade b)."""
        t = Tens.single(self.field, (a, b), [x, y]).mul(0, self)
        return {k[1]: c for k, c in t.terms.items()}

    def expect(self, left_dims, right_dims, out_dims, rule):
        """Raise ``ShapeError`` unless every block has the shape and output grade given by ``rule``."""
        for a in range(len(left_dims)):
            for b in range(len(right_dims)):
                if (a, b) not in self.blocks:
                    raise ShapeError(f"action missing block {(a, b)}")
                o = rule(a, b)
                if self.out[(a, b)] != o:
                    raise ShapeError(f"action block {(a, b)} lands in grade {self.out[(a, b)]}, expected {o}")
                want = (out_dims[o], left_dims[a], right_dims[b])
                if self.blocks[(a, b)].shape != want:
                    raise ShapeError(f"action block {(a, b)} has shape {self.blocks[(a, b)].shape}, expected {want}")


def build_action(field, left_dims, right_dims, out_dims, rule, formula) -> ActionFamily:
    """Tabulate ``formula`` (acting on a basis ``Tens`` of grades (a, b)) into an action family."""
    blocks, out = {}, {}
    for a, da in enumerate(left_dims):
        for b, db in enumerate(right_dims):
            o = rule(a, b)
            out[(a, b)] = o
            if da and db:
                r = formula(Tens.basis(field, (a, b), (da, db)))
                if r.grades != (o,):
                    raise ShapeError(f"formula lands in grades {r.grades}, expected {(o,)}")
                blocks[(a, b)] = product_tensor(r, field, out_dims[o], da, db)
            else:
                blocks[(a, b)] = StructureTensor(field, (out_dims[o], da, db), {})
    return ActionFamily(field, blocks, out)


def require_abelian(group: FiniteGroup, what: str):
    if not group.is_abelian:
        raise PreconditionError(f"{what} requires abelian pi")


def require_cocommutative(H, what: str):
    if not is_cocommutative(H):
        raise PreconditionError(f"{what} requires a cocommutative structure")


def left_action(B: HopfPiBrace) -> ActionFamily:
    """``g -> h = S(g1) (g2 o h)``, landing in the grade of ``h``."""
    H, C = B.dot, B.circ
    return build_action(B.field, B.dims, B.dims, B.dims, lambda a, b: b,
                        lambda t: t.split(0, H).lin(0, H.S).mul(1, C).mul(0, H))


def right_action(B: HopfPiBrace) -> ActionFamily:
    """``a <- x = T(a1 -> x1) o a2 o x2``, landing in the grade of ``a``."""
    require_abelian(B.group, "the right action")
    lact = left_action(B)
    C = B.circ
    return build_action(B.field, B.dims, B.dims, B.dims, lambda a, b: a,
                        lambda t: (t.split(0, C).split(2, C).perm(0, 2, 1, 3).mul(0, lact)
                                   .lin(0, C.antipode).mul(0, C).mul(0, C)))


def check_module_properties(B: HopfPiBrace, lact: ActionFamily | None = None) -> CheckReport:
    rep = CheckReport()
    H, C = B.dot, B.circ
    lact = lact or left_action(B)
    e = B.group.identity
    S, T = H.antipode, C.antipode
    for a, b, c in B.space.tuples(3):
        t = B.basis(a, b, c)
        compare(rep, "action_associative", t.mul(0, C).mul(0, lact), t.mul(1, lact).mul(0, lact),
                (a, b, c), "(g o h) -> l = g -> (h -> l)")
        rhs = t.split(0, H).perm(0, 2, 1, 3).mul(0, lact).mul(1, lact).mul(0, H)
        compare(rep, "action_multiplicative", t.mul(1, H).mul(0, lact), rhs, (a, b, c),
                "g -> (h l) = (g1 -> h)(g2 -> l)")
    for a in B.space.grades():
        t = B.basis(a)
        if B.dims[e]:
            compare(rep, "action_unit", C.one(t, 0).mul(0, lact), t, (a,), "1 -> h = h")
            compare(rep, "action_fixes_unit", H.one(t, 1).mul(0, lact), H.one(t.eps(0, H), 0), (a,),
                    "g -> 1 = eps(g) 1")
    cocom = B.cocommutative
    for a, b in B.space.tuples(2):
        t = B.basis(a, b)
        compare(rep, "circ_from_action", t.mul(0, C), t.split(0, H).mul(1, lact).mul(0, H), (a, b),
                "g o h = g1 (g2 -> h)")
        if T is not None:
            compare(rep, "dot_from_action", t.mul(0, H), t.split(0, H).lin(1, T).mul(1, lact).mul(0, C),
                    (a, b), "g h = g1 o (T(g2) -> h)")
        if cocom:
            compare(rep, "action_comultiplicative", t.mul(0, lact).split(0, H),
                    t.split(0, H).split(2, H).perm(0, 2, 1, 3).mul(0, lact).mul(1, lact), (a, b),
                    "D(g -> h) = (g1 -> h1) x (g2 -> h2)")
            compare(rep, "action_counit", t.mul(0, lact).eps(0, H), t.eps(0, H).eps(0, H), (a, b),
                    "eps(g -> h) = eps(g) eps(h)")
            compare(rep, "action_antipode", t.mul(0, lact).lin(0, S), t.lin(1, S).mul(0, lact), (a, b),
                    "S(g -> h) = g -> S(h)")
    if not cocom:
        rep.notes.append("not cocommutative: coalgebra-compatibility of the actions skipped")
        return rep
    if not B.group.is_abelian:
        rep.notes.append("pi not abelian: right action skipped")
        return rep
    ract = right_action(B)
    for a, b, c in B.space.tuples(3):
        t = B.basis(a, b, c)
        compare(rep, "right_action_associative", t.mul(1, C).mul(0, ract), t.mul(0, ract).mul(0, ract),
                (a, b, c), "a <- (x o y) = (a <- x) <- y")
    for a, b in B.space.tuples(2):
        t = B.basis(a, b)
        compare(rep, "right_action_comultiplicative", t.mul(0, ract).split(0, H),
                t.split(0, H).split(2, H).perm(0, 2, 1, 3).mul(0, ract).mul(1, ract), (a, b),
                "D(a <- x) = (a1 <- x1) x (a2 <- x2)")
        compare(rep, "right_action_counit", t.mul(0, ract).eps(0, H), t.eps(0, H).eps(0, H), (a, b),
                "eps(a <- x) = eps(a) eps(x)")
    if B.dims[e]:
        for a in B.space.grades():
            t = B.basis(a)
            compare(rep, "right_action_unit", C.one(t, 1).mul(0, ract), t, (a,), "a <- 1 = a")
    return rep


# braidings ------------------------------------------------------------

class BraidFamily:
    """Maps ``H_a (x) H_b -> H_b (x) H_a`` as kron-basis matrices."""

    def __init__(self, space: GradedSpace, field, blocks: dict, name=""):
        n = space.group.size
        for a in range(n):
            for b in range(n):
                da, db = space.dims[a], space.dims[b]
                M = blocks.get((a, b))
                if M is None or M.shape != (db * da, da * db):
                    raise ShapeError(f"braiding block {(a, b)} missing or misshaped")
        self.space = space
        self.field = field
        self.blocks = dict(blocks)
        self.name = name
        self._tables = {}

    def pair_table(self, a, b):
        if (a, b) not in self._tables:
            db = self.space.dims[b]
            cols = self.blocks[(a, b)].column_table
            da = self.space.dims[a]
            self._tables[(a, b)] = [[cols[j * db + k] for k in range(db)] for j in range(da)]
        return self._tables[(a, b)], (b, a)

    def out_dims(self, o1, o2):
        return self.space.dims[o1], self.space.dims[o2]

    def matrix(self, a, b) -> Matrix:
        return self.blocks[(a, b)]

    def with_entry(self, a, b, i, j, value):
        M = self.blocks[(a, b)]
        data = list(M.entries)
        data[i * M.cols + j] = value
        blocks = dict(self.blocks)
        blocks[(a, b)] = Matrix(M.field, M.rows, M.cols, data)
        return BraidFamily(self.space, self.field, blocks, self.name + "*")


def build_braiding(space, field, formula, name="") -> BraidFamily:
    blocks = {}
    G = space.group
    for a in range(G.size):
        for b in range(G.size):
            da, db = space.dims[a], space.dims[b]
            if da and db:
                r = formula(Tens.basis(field, (a, b), (da, db)))
                if r.grades != (b, a):
                    raise ShapeError(f"braiding lands in grades {r.grades}, expected {(b, a)}")
                blocks[(a, b)] = linear_matrix(r, field, db * da, da * db,
                                               in_groups=[(da, db)], out_groups=[(db, da)])
            else:
                blocks[(a, b)] = Matrix.zeros(field, 0, 0)
    return BraidFamily(space, field, blocks, name)


def flip_family(H: HopfPiAlgebra) -> BraidFamily:
    return build_braiding(H.space, H.field, lambda t: t.perm(1, 0), "flip")


def braiding_c(B: HopfPiBrace) -> BraidFamily:
    """``c(x (x) y) = (x1 -> y1) (x) (x2 <- y2)``."""
    require_abelian(B.group, "the braiding c")
    require_cocommutative(B.dot, "the braiding c")
    lact, ract = left_action(B), right_action(B)
    H = B.dot
    return build_braiding(B.space, B.field,
                          lambda t: t.split(0, H).split(2, H).perm(0, 2, 1, 3).mul(0, lact).mul(1, ract), "c")


def sigma(B: HopfPiBrace | HopfPiAlgebra) -> BraidFamily:
    """``sigma(x (x) y) = y1 (x) S(y2) x y3``."""
    H = B.dot if isinstance(B, HopfPiBrace) else B
    require_abelian(H.group, "the braiding sigma")
    return build_braiding(H.space, H.field,
                          lambda t: t.split(1, H, times=2).perm(1, 2, 0, 3).lin(1, H.S).mul(1, H).mul(1, H),
                          "sigma")


def check_braid_equation(c: BraidFamily, coalgebra: HopfPiAlgebra | None = None, triples=None) -> CheckReport:
    """Braid relation on every grade triple, plus invertibility and (with a
    coalgebra given) the coalgebra-map property of every block."""
    rep = CheckReport()
    space = c.space
    for a, b, g in (triples if triples is not None else space.tuples(3)):
        t = Tens.basis(c.field, (a, b, g), [space.dims[x] for x in (a, b, g)])
        compare(rep, "braid_equation", t.twist(0, c).twist(1, c).twist(0, c),
                t.twist(1, c).twist(0, c).twist(1, c), (a, b, g),
                "(c x id)(id x c)(c x id) = (id x c)(c x id)(id x c)")
    for a, b in space.tuples(2):
        rep.touch("invertible", "c_ab has an inverse")
        if invert(c.matrix(a, b)) is None:
            rep.fail("invertible", (a, b))
        if coalgebra is not None:
            t = Tens.basis(c.field, (a, b), (space.dims[a], space.dims[b]))
            H = coalgebra
            lhs = t.twist(0, c).split(0, H).split(2, H).perm(0, 2, 1, 3)
            rhs = t.split(0, H).split(2, H).perm(0, 2, 1, 3).twist(0, c).twist(2, c)
            compare(rep, "braiding_comultiplicative", lhs, rhs, (a, b), "D c = (c x c) D")
            compare(rep, "braiding_counit", t.twist(0, c).eps(0, H).eps(0, H), t.eps(0, H).eps(0, H),
                    (a, b), "eps c = eps")
    return rep


def _apply_g(t, start, n, H, lact):
    """``x (x) y_2 .. y_n -> x1 (x) (x2 -> y_2) (x) .. (x) (x_n -> y_n)``."""
    t = t.split(start, H, times=n - 1)
    order = list(range(start)) + [start]
    for j in range(2, n + 1):
        order += [start + j - 1, start + n + j - 2]
    order += list(range(start + 2 * n - 1, len(t.grades)))
    t = t.perm(*order)
    for j in range(n - 1):
        t = t.mul(start + 1 + j, lact)
    return t


def _apply_f(t, start, n, H, lact):
    if n == 1:
        return t
    return _apply_g(_apply_f(t, start + 1, n - 1, H, lact), start, n, H, lact)


ORIENTATIONS = ("f.sigma = c.f", "f.c = sigma.f")


def braid_intertwiner_check(B: HopfPiBrace, n: int = 2):
    """Build ``f_n`` and test which intertwining orientation holds at each strand.

    Returns ``(report, orientations)`` with ``orientations[i]`` the list of
    orientations that hold at position ``i`` on every grade tuple.
    """
    if n not in (2, 3):
        raise InputError("intertwiner check supports n = 2 or 3")
    c, s = braiding_c(B), sigma(B)
    H, lact = B.dot, left_action(B)
    rep = CheckReport()
    holds = {i: {o: True for o in ORIENTATIONS} for i in range(n - 1)}
    f = lambda t: _apply_f(t, 0, n, H, lact)  # noqa: E731
    for gs in B.space.tuples(n):
        dims = [B.dims[g] for g in gs]
        t = B.basis(*gs)
        ft = f(t)
        total = 1
        for d in dims:
            total *= d
        M = linear_matrix(ft, B.field, total, total, in_groups=[tuple(dims)], out_groups=[tuple(dims)])
        rep.touch("f_invertible", "f_n has an inverse")
        if invert(M) is None:
            rep.fail("f_invertible", gs)
        for i in range(n - 1):
            sub = CheckReport()
            if not compare(sub, "x", f(t.twist(i, s)), ft.twist(i, c), gs):
                holds[i][ORIENTATIONS[0]] = False
            if not compare(sub, "x", f(t.twist(i, c)), ft.twist(i, s), gs):
                holds[i][ORIENTATIONS[1]] = False
        if n == 2:
            finv = lambda u: u.split(0, H).lin(1, B.T).mul(1, lact)  # noqa: E731
            compare(rep, "f_inverse_formula", finv(ft), t, gs, "f^-1(x (x) y) = x1 (x) (T(x2) -> y)")
            compare(rep, "f_inverse_formula", f(finv(t)), t, gs)
    found = {i: [o for o in ORIENTATIONS if ok[o]] for i, ok in holds.items()}
    for i, os_ in found.items():
        rep.touch(f"intertwines_at_{i}", "f_n sigma_i = c_i f_n or f_n c_i = sigma_i f_n")
        if not os_:
            rep.fail(f"intertwines_at_{i}", (i,))
    rep.notes.append("orientations: " + "; ".join(f"{i}: {', '.join(v) or 'none'}" for i, v in found.items()))
    return rep, found


# constructors ---------------------------------------------------------

def constant_family(H: HopfPiAlgebra, group: FiniteGroup) -> HopfPiAlgebra:
    """Copy an ordinary Hopf algebra into every grade of ``group``."""
    if H.group.size != 1:
        raise ShapeError("expected a Hopf algebra over the trivial group")
    d = H.dims[0]
    n = group.size
    names = H.space.basis_names[0] if H.space.basis_names else None
    space = GradedSpace(group, (d,) * n, (names,) * n if names else None)
    mult = {(a, b): H.mult[(0, 0)] for a in range(n) for b in range(n)}
    comult = {a: H.comult[0] for a in range(n)}
    counit = {a: H.counit[0] for a in range(n)}
    S = None
    if H.antipode is not None:
        S = GradedLinearMap(space, space, group.inverse, {a: H.antipode.blocks[0] for a in range(n)})
    return HopfPiAlgebra(space, mult, H.unit, comult, counit, S)


def automorphism_group(autos, names=None) -> FiniteGroup:
    """The group formed by ``autos`` under composition (must be closed, contain the identity)."""
    autos = list(autos)
    if not autos:
        raise InputError("no automorphisms given")
    index = {A: i for i, A in enumerate(autos)}
    if len(index) != len(autos):
        raise InputError("automorphisms listed twice")
    table = []
    for A in autos:
        row = []
        for Bm in autos:
            P = A @ Bm
            if P not in index:
                raise InputError("automorphisms are not closed under composition")
            row.append(index[P])
        table.append(row)
    return FiniteGroup(table, names)


def _check_autos(structures, autos):
    for k, A in enumerate(autos):
        for H in structures:
            if A.shape != (H.dims[0], H.dims[0]):
                raise ShapeError(f"automorphism {k} has shape {A.shape}")
            if invert(A) is None:
                raise InputError(f"automorphism {k} is singular")
            f = GradedLinearMap(H.space, H.space, (0,), {0: A})
            r = check_hopf_morphism(f, H, H)
            if not r.passed:
                raise AxiomError(f"matrix {k} is not a Hopf automorphism: fails {r.failed_axioms()}", r)


def aut_indexed_brace(Hb: HopfPiBrace, autos, names=None) -> HopfPiBrace:
    """Brace over the group generated by brace automorphisms: each grade a copy of ``Hb``."""
    if Hb.group.size != 1:
        raise ShapeError("aut-indexed braces start from a brace over the trivial group")
    _check_autos([Hb.dot, Hb.circ], autos)
    G = automorphism_group(autos, names)
    return HopfPiBrace(constant_family(Hb.dot, G), constant_family(Hb.circ, G))


def fiber_positions(grading: Grading) -> dict:
    """Element -> (grade, position in fiber) for ``group_algebra`` bases."""
    out = {}
    for a in range(grading.target.size):
        for i, g in enumerate(grading.fiber(a)):
            out[g] = (a, i)
    return out


def group_action(K_grading: Grading, H_grading: Grading, perms, field) -> ActionFamily:
    """``k -> h = phi_k(h)`` on group algebras, ``perms[k]`` a permutation of
    ``H``'s group elements; the action must preserve the grading."""
    pk, ph = fiber_positions(K_grading), fiber_positions(H_grading)
    dK = [len(K_grading.fiber(a)) for a in range(K_grading.target.size)]
    dH = [len(H_grading.fiber(a)) for a in range(H_grading.target.size)]
    data = {(a, g): {} for a in range(len(dK)) for g in range(len(dH))}
    for k in range(K_grading.source.size):
        a, i = pk[k]
        for h in range(H_grading.source.size):
            g, j = ph[h]
            g2, j2 = ph[perms[k][h]]
            if g2 != g:
                raise ShapeError("action does not preserve the grading of H")
            data[(a, g)][(j2, i, j)] = 1
    blocks = {key: StructureTensor(field, (dH[key[1]], dK[key[0]], dH[key[1]]), d) for key, d in data.items()}
    return ActionFamily(field, blocks, {key: key[1] for key in data})


def check_module_bialgebra(K: HopfPiAlgebra, H: HopfPiAlgebra, act: ActionFamily, prefix="") -> CheckReport:
    """``H`` a module(like) bialgebra over ``K`` under ``act: K_a (x) H_g -> H_g``."""
    act.expect(K.dims, H.dims, H.dims, lambda a, g: g)
    rep = CheckReport()
    eH = H.group.identity
    eK = K.group.identity
    p = prefix
    for a, b in K.space.tuples(2):
        for g in H.space.grades():
            t = Tens.basis(K.field, (a, b, g), (K.dims[a], K.dims[b], H.dims[g]))
            compare(rep, p + "module_associative", t.mul(0, K).mul(0, act), t.mul(1, act).mul(0, act),
                    (a, b, g), "(k l) -> h = k -> (l -> h)")
    for g in H.space.grades():
        t = Tens.basis(K.field, (g,), (H.dims[g],))
        if K.dims[eK]:
            compare(rep, p + "module_unit", K.one(t, 0).mul(0, act), t, (g,), "1 -> h = h")
    for a in K.space.grades():
        for g, d in H.space.tuples(2):
            t = Tens.basis(K.field, (a, g, d), (K.dims[a], H.dims[g], H.dims[d]))
            rhs = t.split(0, K).perm(0, 2, 1, 3).mul(0, act).mul(1, act).mul(0, H)
            compare(rep, p + "multiplicative", t.mul(1, H).mul(0, act), rhs, (a, g, d),
                    "k -> (h g) = (k1 -> h)(k2 -> g)")
        t = Tens.basis(K.field, (a,), (K.dims[a],))
        if H.dims[eH]:
            compare(rep, p + "unit", H.one(t, 1).mul(0, act), H.one(t.eps(0, K), 0), (a,), "k -> 1 = eps(k) 1")
        for g in H.space.grades():
            t = Tens.basis(K.field, (a, g), (K.dims[a], H.dims[g]))
            compare(rep, p + "comultiplicative", t.mul(0, act).split(0, H),
                    t.split(0, K).split(2, H).perm(0, 2, 1, 3).mul(0, act).mul(1, act), (a, g),
                    "D(k -> h) = (k1 -> h1) x (k2 -> h2)")
            compare(rep, p + "counit", t.mul(0, act).eps(0, H), t.eps(0, K).eps(0, H), (a, g),
                    "eps(k -> h) = eps(k) eps(h)")
    return rep


def smash_group(K: HopfPiAlgebra, H: HopfPiAlgebra):
    """Grading group of ``H # K`` and the index of grade ``(a in K, g in H)``."""
    return product_grading(K.group, H.group)


def _smash(H: HopfPiAlgebra, K: HopfPiAlgebra, act: ActionFamily) -> HopfPiBrace:
    """``(h # k)(h' # k') = hh' # kk'``, ``(h # k) o (h' # k') = h (k1 -> h') # k2 k'``."""
    F = H.field
    if K.field != F:
        raise FieldMismatchError("smash factors over different fields")
    group, idx = smash_group(K, H)
    dH, dK = H.dims, K.dims
    n1, n2 = K.group.size, H.group.size
    dims = [0] * group.size
    names = [None] * group.size
    hn = H.space.basis_names
    kn = K.space.basis_names
    for a in range(n1):
        for g in range(n2):
            dims[idx(a, g)] = dH[g] * dK[a]
            names[idx(a, g)] = tuple(
                f"{hn[g][i] if hn else i}#{kn[a][j] if kn else j}" for i in range(dH[g]) for j in range(dK[a]))
    space = GradedSpace(group, dims, names)
    dot_m, circ_m, comult, counit, S_cols, T_cols = {}, {}, {}, {}, {}, {}
    for a in range(n1):
        for g in range(n2):
            x = idx(a, g)
            if not dims[x]:
                continue
            grp = [(dH[g], dK[a])]
            t = Tens.basis(F, (g, a), (dH[g], dK[a]))
            comult[x] = coproduct_tensor(t.split(0, H).split(2, K).perm(0, 2, 1, 3), F, dims[x],
                                         in_groups=grp, out_groups=grp * 2)
            counit[x] = tuple(F.mul(H.counit[g][i], K.counit[a][j]) for i in range(dH[g]) for j in range(dK[a]))
            sgi = H.group.inv(g)
            sai = K.group.inv(a)
            y = idx(sai, sgi)
            out = [(dH[sgi], dK[sai])]
            S_cols[x] = linear_matrix(t.lin(0, H.antipode).lin(1, K.antipode), F, dims[y], dims[x], grp, out)
            Tt = (t.split(1, K).lin(0, H.antipode).lin(1, K.antipode).lin(2, K.antipode)
                  .perm(1, 0, 2).mul(0, act))
            T_cols[x] = linear_matrix(Tt, F, dims[y], dims[x], grp, out)
            for b in range(n1):
                for d in range(n2):
                    x2 = idx(b, d)
                    if not dims[x2]:
                        continue
                    gd, ab = H.group.mul(g, d), K.group.mul(a, b)
                    z = idx(ab, gd)
                    t4 = Tens.basis(F, (g, a, d, b), (dH[g], dK[a], dH[d], dK[b]))
                    ins = [(dH[g], dK[a]), (dH[d], dK[b])]
                    outs = [(dH[gd], dK[ab])]
                    dot_t = t4.perm(0, 2, 1, 3).mul(0, H).mul(1, K)
                    circ_t = t4.split(1, K).perm(0, 1, 3, 2, 4).mul(1, act).mul(0, H).mul(1, K)
                    dot_m[(x, x2)] = product_tensor(dot_t, F, dims[z], dims[x], dims[x2], ins, outs)
                    circ_m[(x, x2)] = product_tensor(circ_t, F, dims[z], dims[x], dims[x2], ins, outs)
    e = group.identity
    eK = K.group.identity
    unit = [0] * dims[e]
    for i, u in enumerate(H.unit):
        for j, v in enumerate(K.unit):
            if u and v:
                unit[i * dK[eK] + j] = F.mul(u, v)
    S = GradedLinearMap(space, space, group.inverse, S_cols)
    T = GradedLinearMap(space, space, group.inverse, T_cols)
    dot = HopfPiAlgebra(space, dot_m, unit, comult, counit, S)
    circ = HopfPiAlgebra(space, circ_m, unit, comult, counit, T)
    return HopfPiBrace(dot, circ)


def _smash_gate(H, K, act, kind):
    require_cocommutative(H, kind)
    require_cocommutative(K, kind)
    rep = check_module_bialgebra(K, H, act)
    if not rep.passed:
        raise AxiomError(f"{kind}: action fails {', '.join(rep.failed_axioms())}", rep)


def smash_brace_pimod(H: HopfPiAlgebra, K: HopfPiAlgebra, act: ActionFamily) -> HopfPiBrace:
    """Smash brace ``{H_a # K}`` for an ordinary Hopf algebra ``K`` acting on ``H``."""
    if K.group.size != 1:
        raise ShapeError("K must be an ordinary Hopf algebra (trivial grading group)")
    _smash_gate(H, K, act, "smash product of a K-pi-module pi-bialgebra")
    return _smash(H, K, act)


def smash_brace_modlike(K: HopfPiAlgebra, H: HopfPiAlgebra, act: ActionFamily) -> HopfPiBrace:
    """Smash brace ``{H_g # K_a}`` over ``pi_1 x pi_2`` for a modulelike bialgebra ``H``."""
    _smash_gate(H, K, act, "smash product of a modulelike bialgebra")
    return _smash(H, K, act)
