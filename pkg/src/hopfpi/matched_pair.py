"""Matched pairs of Hopf group algebras, bicrossed products, and the
correspondence with braces.

Grade conventions: ``K`` is graded by ``pi_1`` (grades written c, d) and
``H`` by ``pi_2`` (grades a, b). Both actions take ``x in H_a`` on the
left and ``u in K_c`` on the right; ``x -> u`` lands in ``K_c`` and
``x <- u`` lands in ``H_a``.
"""
from __future__ import annotations

from .brace import (ActionFamily, HopfPiBrace, build_action, left_action, require_abelian,
                    require_cocommutative, right_action, check_brace)
from .errors import FieldMismatchError, InputError, VerificationError
from .groups import product_grading
from .hopf import GradedLinearMap, GradedSpace, HopfPiAlgebra
from .report import CheckReport
from .tensor import Tens, compare, coproduct_tensor, linear_matrix, product_tensor

# Formulas as verified; subscripts are forced by the grade rule above.
MP_FORMULAS = {
    "mp1": "x -> (u v) = (x1 -> u1) ((x2 <- u2) -> v)",
    "mp2": "x -> 1 = eps(x) 1",
    "mp3": "(x y) <- u = (x <- (y1 -> u1)) (y2 <- u2)",
    "mp4": "1 <- u = eps(u) 1",
    "mp5": "(x1 <- u1) (x) (x2 -> u2) = (x2 <- u2) (x) (x1 -> u1)",
    "mp6": "u o v = (u1 -> v1) o (u2 <- v2)",
}


class MatchedPair:
    def __init__(self, K: HopfPiAlgebra, H: HopfPiAlgebra, lact: ActionFamily, ract: ActionFamily):
        if K.field != H.field or lact.field != K.field or ract.field != K.field:
            raise FieldMismatchError("matched pair data over different fields")
        lact.expect(H.dims, K.dims, K.dims, lambda a, c: c)
        ract.expect(H.dims, K.dims, H.dims, lambda a, c: a)
        self.K, self.H, self.lact, self.ract = K, H, lact, ract

    field = property(lambda self: self.K.field)

    def replace(self, **kw):
        args = dict(K=self.K, H=self.H, lact=self.lact, ract=self.ract)
        args.update(kw)
        return MatchedPair(**args)

    @property
    def same_algebra(self):
        return self.K.same_structure(self.H)


def trivial_matched_pair(K: HopfPiAlgebra, H: HopfPiAlgebra) -> MatchedPair:
    """``x -> u = eps(x) u`` and ``x <- u = eps(u) x``."""
    F = K.field
    lact = build_action(F, H.dims, K.dims, K.dims, lambda a, c: c, lambda t: t.eps(0, H))
    ract = build_action(F, H.dims, K.dims, H.dims, lambda a, c: a, lambda t: t.eps(1, K))
    return MatchedPair(K, H, lact, ract)


def _basis(F, grades, dims):
    return Tens.basis(F, grades, dims)


def check_matched_pair(MP: MatchedPair) -> CheckReport:
    K, H, la, ra = MP.K, MP.H, MP.lact, MP.ract
    F = MP.field
    rep = CheckReport()
    dK, dH = K.dims, H.dims
    eK, eH = K.group.identity, H.group.identity
    # K is a left modulelike coalgebra over H
    for a, b in H.space.tuples(2):
        for c in K.space.grades():
            t = _basis(F, (a, b, c), (dH[a], dH[b], dK[c]))
            compare(rep, "lact_associative", t.mul(0, H).mul(0, la), t.mul(1, la).mul(0, la), (a, b, c),
                    "(x y) -> u = x -> (y -> u)")
    for a in H.space.grades():
        for c, d in K.space.tuples(2):
            t = _basis(F, (a, c, d), (dH[a], dK[c], dK[d]))
            compare(rep, "ract_associative", t.mul(1, K).mul(0, ra), t.mul(0, ra).mul(0, ra), (a, c, d),
                    "x <- (u v) = (x <- u) <- v")
            rhs = (t.split(0, H).split(2, K).perm(0, 2, 1, 3, 4).mul(0, la).mul(1, ra).mul(1, la).mul(0, K))
            compare(rep, "mp1", t.mul(1, K).mul(0, la), rhs, (a, c, d), MP_FORMULAS["mp1"])
    for a, b in H.space.tuples(2):
        for c in K.space.grades():
            t = _basis(F, (a, b, c), (dH[a], dH[b], dK[c]))
            rhs = (t.split(1, H).split(3, K).perm(0, 1, 3, 2, 4).mul(1, la).mul(0, ra).mul(1, ra).mul(0, H))
            compare(rep, "mp3", t.mul(0, H).mul(0, ra), rhs, (a, b, c), MP_FORMULAS["mp3"])
    for c in K.space.grades():
        t = _basis(F, (c,), (dK[c],))
        if dH[eH]:
            compare(rep, "lact_unit", H.one(t, 0).mul(0, la), t, (c,), "1 -> u = u")
            compare(rep, "mp4", H.one(t, 0).mul(0, ra), H.one(t.eps(0, K), 0), (c,), MP_FORMULAS["mp4"])
    for a in H.space.grades():
        t = _basis(F, (a,), (dH[a],))
        if dK[eK]:
            compare(rep, "ract_unit", K.one(t, 1).mul(0, ra), t, (a,), "x <- 1 = x")
            compare(rep, "mp2", K.one(t, 1).mul(0, la), K.one(t.eps(0, H), 0), (a,), MP_FORMULAS["mp2"])
        for c in K.space.grades():
            t = _basis(F, (a, c), (dH[a], dK[c]))
            split = t.split(0, H).split(2, K)
            inter = split.perm(0, 2, 1, 3)
            compare(rep, "lact_comultiplicative", t.mul(0, la).split(0, K), inter.mul(0, la).mul(1, la),
                    (a, c), "D(x -> u) = (x1 -> u1) (x) (x2 -> u2)")
            compare(rep, "lact_counit", t.mul(0, la).eps(0, K), t.eps(0, H).eps(0, K), (a, c),
                    "eps(x -> u) = eps(x) eps(u)")
            compare(rep, "ract_comultiplicative", t.mul(0, ra).split(0, H), inter.mul(0, ra).mul(1, ra),
                    (a, c), "D(x <- u) = (x1 <- u1) (x) (x2 <- u2)")
            compare(rep, "ract_counit", t.mul(0, ra).eps(0, H), t.eps(0, H).eps(0, K), (a, c),
                    "eps(x <- u) = eps(x) eps(u)")
            compare(rep, "mp5", inter.mul(0, ra).mul(1, la), split.perm(1, 3, 0, 2).mul(0, ra).mul(1, la),
                    (a, c), MP_FORMULAS["mp5"])
    return rep


def _gate(MP: MatchedPair, what):
    rep = check_matched_pair(MP)
    if not rep.passed:
        raise VerificationError(f"{what} requires a valid matched pair (fails {', '.join(rep.failed_axioms())})", rep)


def bicrossed_product(MP: MatchedPair, verify=True) -> HopfPiAlgebra:
    """``K (x) H`` graded by ``pi_1 x pi_2``: component ``(c, a)`` is ``K_c (x) H_a``
    with basis index ``u * dim H_a + x``.

    ``(u (x) x)(v (x) y) = u (x1 -> v1) (x) (x2 <- v2) y``.
    """
    if verify:
        _gate(MP, "the bicrossed product")
    K, H, la, ra = MP.K, MP.H, MP.lact, MP.ract
    F = MP.field
    group, idx = product_grading(K.group, H.group)
    dK, dH = K.dims, H.dims
    n1, n2 = K.group.size, H.group.size
    dims = [0] * group.size
    names = [None] * group.size
    kn, hn = K.space.basis_names, H.space.basis_names
    for c in range(n1):
        for a in range(n2):
            dims[idx(c, a)] = dK[c] * dH[a]
            names[idx(c, a)] = tuple(f"{kn[c][i] if kn else i}(x){hn[a][j] if hn else j}"
                                     for i in range(dK[c]) for j in range(dH[a]))
    space = GradedSpace(group, dims, names)
    mult, comult, counit, S = {}, {}, {}, {}
    for c in range(n1):
        for a in range(n2):
            x = idx(c, a)
            if not dims[x]:
                continue
            grp = [(dK[c], dH[a])]
            t = Tens.basis(F, (c, a), (dK[c], dH[a]))
            comult[x] = coproduct_tensor(t.split(0, K).split(2, H).perm(0, 2, 1, 3), F, dims[x], grp, grp * 2)
            counit[x] = tuple(F.mul(K.counit[c][i], H.counit[a][j]) for i in range(dK[c]) for j in range(dH[a]))
            ci, ai = K.group.inv(c), H.group.inv(a)
            y = idx(ci, ai)
            st = (t.split(0, K).split(2, H).lin(0, K.antipode).lin(1, K.antipode).lin(2, H.antipode)
                  .lin(3, H.antipode).perm(3, 1, 2, 0).mul(0, la).mul(1, ra))
            S[x] = linear_matrix(st, F, dims[y], dims[x], grp, [(dK[ci], dH[ai])])
            for d in range(n1):
                for b in range(n2):
                    x2 = idx(d, b)
                    if not dims[x2]:
                        continue
                    cd, ab = K.group.mul(c, d), H.group.mul(a, b)
                    z = idx(cd, ab)
                    t4 = Tens.basis(F, (c, a, d, b), (dK[c], dH[a], dK[d], dH[b]))
                    r = (t4.split(1, H).split(3, K).perm(0, 1, 3, 2, 4, 5).mul(1, la).mul(2, ra)
                         .mul(0, K).mul(1, H))
                    mult[(x, x2)] = product_tensor(r, F, dims[z], dims[x], dims[x2],
                                                   [(dK[c], dH[a]), (dK[d], dH[b])], [(dK[cd], dH[ab])])
    e = group.identity
    unit = [0] * dims[e]
    dHe = dH[H.group.identity]
    for i, u in enumerate(K.unit):
        for j, v in enumerate(H.unit):
            if u and v:
                unit[i * dHe + j] = F.mul(u, v)
    return HopfPiAlgebra(space, mult, unit, comult, counit, GradedLinearMap(space, space, group.inverse, S))


def brace_to_matched_pair(B: HopfPiBrace, verify=True) -> MatchedPair:
    """``(H_o, H_o)`` with ``x -> u = S(x1)(x2 o u)`` and ``x <- u = T(x1 -> u1) o x2 o u2``."""
    require_abelian(B.group, "the matched pair of a brace")
    require_cocommutative(B.dot, "the matched pair of a brace")
    if verify:
        rep = check_brace(B)
        if not rep.passed:
            raise VerificationError(f"input is not a brace (fails {', '.join(rep.failed_axioms())})", rep)
    return MatchedPair(B.circ, B.circ, left_action(B), right_action(B))


def check_mp6(MP: MatchedPair) -> CheckReport:
    if not MP.same_algebra:
        raise InputError("mp6 needs K and H to be the same Hopf pi-algebra")
    C, la, ra = MP.K, MP.lact, MP.ract
    require_abelian(C.group, "mp6")
    rep = CheckReport()
    for a, b in C.space.tuples(2):
        t = C.basis(a, b)
        rhs = t.split(0, C).split(2, C).perm(0, 2, 1, 3).mul(0, la).mul(1, ra).mul(0, C)
        compare(rep, "mp6", t.mul(0, C), rhs, (a, b), MP_FORMULAS["mp6"])
    return rep


def matched_pair_to_brace(MP: MatchedPair, verify=True) -> HopfPiBrace:
    """``u v = u1 o (T(u2) -> v)`` and ``S(u) = u1 -> T(u2)`` on ``H = K``."""
    if not MP.same_algebra:
        raise InputError("the brace of a matched pair needs K = H")
    C, la = MP.K, MP.lact
    require_abelian(C.group, "the brace of a matched pair")
    require_cocommutative(C, "the brace of a matched pair")
    if verify:
        _gate(MP, "the brace of a matched pair")
        rep = check_mp6(MP)
        if not rep.passed:
            raise VerificationError("the brace of a matched pair requires mp6", rep)
    F = C.field
    T = C.antipode
    dot = build_action(F, C.dims, C.dims, C.dims, lambda a, b: C.group.mul(a, b),
                       lambda t: t.split(0, C).lin(1, T).mul(1, la).mul(0, C))
    S = {}
    for a in C.space.grades():
        t = C.basis(a)
        r = t.split(0, C).lin(1, T).mul(0, la)
        ai = C.group.inv(a)
        S[a] = linear_matrix(r, F, C.dims[ai], C.dims[a])
    H = HopfPiAlgebra(C.space, dot.blocks, C.unit, C.comult, C.counit,
                      GradedLinearMap(C.space, C.space, C.group.inverse, S))
    return HopfPiBrace(H, C)
