"""Rota-Baxter operators on cocommutative Hopf pi-algebras.

``B_a: H_a -> H_{a^-1}`` is a coalgebra map with

    B(a) B(b) = B(a1 B(a2) b S(B(a3))).

Also here: the antipode, twisted, aut-indexed and factorization operators,
the descendent algebra ``H_B``, its brace, and a brute-force enumerator of
group-like operators on group algebras.
"""
from __future__ import annotations

import itertools
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .brace import (HopfPiBrace, _check_autos, automorphism_group, constant_family, require_abelian,
                    require_cocommutative)
from .errors import AxiomError, BoundExceeded, InputError, ShapeError
from .groups import Grading
from .hopf import (GradedLinearMap, HopfPiAlgebra, check_hopf_morphism, check_hopf_pi_algebra,
                   group_algebra)
from .linalg import QQ, Matrix, invert, solve_linear
from .report import CheckReport
from .tensor import compare, linear_matrix, product_tensor

RBO = "B(a) B(b) = B(a1 B(a2) b S(B(a3)))"
DEFAULT_BOUND = 10 ** 8


@dataclass(frozen=True)
class RotaBaxterOperator:
    carrier: HopfPiAlgebra
    B: GradedLinearMap

    @property
    def field(self):
        return self.carrier.field


def _require_rb_shape(H, B):
    if not (B.source.same_shape(H.space) and B.target.same_shape(H.space)):
        raise ShapeError("operator blocks do not match the algebra")
    if B.shift != H.group.inverse:
        raise ShapeError("a Rota-Baxter operator must send grade a to a^-1")


def check_rb(H: HopfPiAlgebra, B: GradedLinearMap) -> CheckReport:
    require_cocommutative(H, "Rota-Baxter operators")
    _require_rb_shape(H, B)
    S = H.antipode
    rep = CheckReport()
    for a in H.space.grades():
        t = H.basis(a)
        compare(rep, "coalgebra_map", t.lin(0, B).split(0, H), t.split(0, H).lin(0, B).lin(1, B), (a,),
                "D B = (B x B) D")
        compare(rep, "coalgebra_counit", t.lin(0, B).eps(0, H), t.eps(0, H), (a,), "eps B = eps")
    for a, b in H.space.tuples(2):
        t = H.basis(a, b)
        rhs = (t.split(0, H, times=2).lin(1, B).lin(2, B).lin(2, S).perm(0, 1, 3, 2)
               .mul(0, H).mul(0, H).mul(0, H).lin(0, B))
        compare(rep, "RBO", t.lin(0, B).lin(1, B).mul(0, H), rhs, (a, b), RBO)
    return rep


def rota_baxter(H: HopfPiAlgebra, B: GradedLinearMap) -> RotaBaxterOperator:
    """Validated operator; ``AxiomError`` if ``B`` fails."""
    rep = check_rb(H, B)
    if not rep.passed:
        raise AxiomError(f"not a Rota-Baxter operator (fails {', '.join(rep.failed_axioms())})", rep)
    return RotaBaxterOperator(H, B)


def antipode_rb(H: HopfPiAlgebra) -> RotaBaxterOperator:
    return rota_baxter(H, H.antipode)


def _invert_map(f: GradedLinearMap) -> GradedLinearMap:
    blocks = {}
    for a, M in f.blocks.items():
        if M.rows != M.cols:
            raise InputError(f"block {a} is not square")
        Mi = invert(M) if M.rows else M
        if Mi is None:
            raise InputError(f"block {a} is singular")
        blocks[a] = Mi
    return GradedLinearMap(f.target, f.source, f.shift, blocks)


def check_bialgebra_automorphism(H: HopfPiAlgebra, phi: GradedLinearMap) -> CheckReport:
    """Grade-preserving, bijective, coalgebra map, and either multiplicative or anti-multiplicative."""
    if phi.shift != tuple(range(H.group.size)):
        raise ShapeError("automorphisms must preserve grades")
    _invert_map(phi)
    rep = check_hopf_morphism(phi, H, H, check_antipode=False)
    if not rep.counts.get("morphism_multiplicative"):
        return rep
    anti = CheckReport()
    for a, b in H.space.tuples(2):
        t = H.basis(a, b)
        compare(anti, "antimultiplicative", t.mul(0, H).lin(0, phi),
                t.lin(0, phi).lin(1, phi).perm(1, 0).mul(0, H), (a, b), "f(xy) = f(y)f(x)")
    if not anti.passed:
        return rep
    out = CheckReport()
    for ax in rep.checked:
        if ax != "morphism_multiplicative":
            out.touch(ax, rep.formulas.get(ax))
            out.counts[ax] = rep.counts[ax]
    out.failures = [f for f in rep.failures if f.axiom != "morphism_multiplicative"]
    return out.merge(anti)


def twist_rb(R: RotaBaxterOperator, phi: GradedLinearMap) -> RotaBaxterOperator:
    """``B^phi_a = phi_{a^-1} B_a phi_a^-1``."""
    H = R.carrier
    rep = check_bialgebra_automorphism(H, phi)
    if not rep.passed:
        raise AxiomError(f"not a bialgebra (anti)automorphism: fails {', '.join(rep.failed_axioms())}", rep)
    return rota_baxter(H, _invert_map(phi).then(R.B).then(phi))


def aut_indexed_rb(R: RotaBaxterOperator, autos, names=None) -> RotaBaxterOperator:
    """Copies ``H^a`` of a trivially graded ``(H, B)`` indexed by a group of Hopf automorphisms,
    with ``B_a(h^a) = B(h)^{a^-1}``."""
    H = R.carrier
    if H.group.size != 1:
        raise ShapeError("aut-indexed operators start from a trivially graded algebra")
    _check_autos([H], autos)
    G = automorphism_group(autos, names)
    Hp = constant_family(H, G)
    B = GradedLinearMap(Hp.space, Hp.space, G.inverse, {a: R.B.blocks[0] for a in range(G.size)})
    return rota_baxter(Hp, B)


# factorization ---------------------------------------------------------

@dataclass(frozen=True)
class Factorization:
    """``G[a]``: columns span ``G_a`` inside ``H_e``; ``K[a]``: columns span ``K_a`` inside ``H_a``."""
    G: dict
    K: dict


def span_of(H: HopfPiAlgebra, grade, names) -> Matrix:
    """Inclusion matrix of the span of named basis vectors of ``H_grade``."""
    pos = {n: i for i, n in enumerate(H.space.basis_names[grade])}
    try:
        cols = [{pos[str(n)]: 1} for n in names]
    except KeyError as exc:
        raise InputError(f"no basis vector {exc} in grade {grade}") from None
    return Matrix.from_columns(H.field, H.dims[grade], cols)


def _in_span(M: Matrix, vec) -> bool:
    if M.cols == 0:
        return not any(vec)
    return solve_linear(M, vec) is not None


def _vec(t, d):
    v = [0] * d
    for key, c in t.terms.items():
        v[key[1]] = c
    return v


def _check_subfamily(H, spans, grade_of, rep, name, product_grade, algebra_grade):
    """Closure checks for a family of subspaces: subcoalgebra, products, unit and antipode."""
    F = H.field
    from .tensor import Tens
    for a, M in spans.items():
        g = grade_of(a)
        cols = M.column_table
        rep.touch(f"{name}_subcoalgebra")
        for col in cols:
            t = Tens.single(F, (g,), [col]).split(0, H)
            # D(x) must lie in span x span
            kr = _kron_span(M, M)
            d = H.dims[g]
            flatv = [0] * (d * d)
            for key, c in t.terms.items():
                flatv[key[1] * d + key[2]] = c
            if not _in_span(kr, flatv):
                rep.fail(f"{name}_subcoalgebra", (a,))
        rep.touch(f"{name}_antipode_stable")
        for col in cols:
            t = Tens.single(F, (g,), [col]).lin(0, H.antipode)
            ai = H.group.inv(a) if algebra_grade else a
            target = spans.get(ai)
            if target is None or not _in_span(target, _vec(t, H.dims[t.grades[0]])):
                rep.fail(f"{name}_antipode_stable", (a,))
    rep.touch(f"{name}_closed_under_product")
    for a, b in itertools.product(spans, repeat=2):
        out = product_grade(a, b)
        target = spans.get(out)
        for x in spans[a].column_table:
            for y in spans[b].column_table:
                t = Tens.single(F, (grade_of(a), grade_of(b)), [x, y]).mul(0, H)
                if target is None or not _in_span(target, _vec(t, H.dims[t.grades[0]])):
                    rep.fail(f"{name}_closed_under_product", (a, b))
    rep.touch(f"{name}_contains_unit")
    e = H.group.identity
    if e not in spans or not _in_span(spans[e], [H.unit_vec.get(i, 0) for i in range(H.dims[H.e])]):
        rep.fail(f"{name}_contains_unit")


def _kron_span(A: Matrix, B: Matrix) -> Matrix:
    from .linalg import kron
    return kron(A, B)


def check_factorization(H: HopfPiAlgebra, Fz: Factorization) -> CheckReport:
    G, K = Fz.G, Fz.K
    n = H.group.size
    e = H.e
    if set(G) != set(range(n)) or set(K) != set(range(n)):
        raise ShapeError("factorization needs G_a and K_a for every grade")
    for a in range(n):
        if G[a].rows != H.dims[e] or K[a].rows != H.dims[a]:
            raise ShapeError(f"inclusion matrices at grade {a} have the wrong number of rows")
    rep = CheckReport()
    # G lives in grade e and, as a family, is closed like a Hopf pi-algebra
    _check_subfamily(H, G, lambda a: e, rep, "G", lambda a, b: H.group.mul(a, b), False)
    _check_subfamily(H, K, lambda a: a, rep, "K", lambda a, b: H.group.mul(a, b), True)
    rep.touch("product_direct", "G_a (x) K_a -> H_a, h (x) g -> h g bijective")
    for a in H.space.grades():
        if _product_matrix(H, G[a], K[a], a) is None:
            rep.fail("product_direct", (a,))
            rep.notes.append(f"product not direct at grade {a}")
    return rep


def _product_matrix(H, Ga, Ka, a):
    """Matrix of ``G_a (x) K_a -> H_a``; ``None`` unless square and invertible."""
    from .tensor import Tens
    F = H.field
    e = H.e
    cols = []
    for x in Ga.column_table:
        for y in Ka.column_table:
            t = Tens.single(F, (e, a), [x, y]).mul(0, H)
            cols.append({key[1]: c for key, c in t.terms.items()})
    M = Matrix.from_columns(F, H.dims[a], cols)
    if M.rows != M.cols or invert(M) is None:
        return None
    return M


def factorization_rb(H: HopfPiAlgebra, Fz: Factorization) -> RotaBaxterOperator:
    """``B_a(h h') = eps(h) S_a(h')`` for ``h in G_a``, ``h' in K_a``."""
    require_cocommutative(H, "the factorization operator")
    rep = check_factorization(H, Fz)
    if not rep.passed:
        if rep.counts.get("product_direct"):
            raise AxiomError("product not direct", rep)
        raise AxiomError(f"invalid factorization data (fails {', '.join(rep.failed_axioms())})", rep)
    F = H.field
    S = H.antipode
    e = H.e
    blocks = {}
    for a in H.space.grades():
        Ga, Ka = Fz.G[a], Fz.K[a]
        P = _product_matrix(H, Ga, Ka, a)
        # value of B on the product basis h_i k_j, then change back to the standard basis
        epsG = [F.normalize(sum(F.mul(H.counit[e][r], c) for r, c in col.items())) for col in Ga.column_table]
        SK = S.blocks[a] @ Ka
        ai = H.group.inv(a)
        vals = []
        for i in range(Ga.cols):
            for j in range(Ka.cols):
                vals.append([F.mul(epsG[i], SK[r, j]) for r in range(H.dims[ai])])
        V = Matrix(F, H.dims[ai], len(vals), [vals[c][r] for r in range(H.dims[ai]) for c in range(len(vals))])
        blocks[a] = V @ invert(P)
    return rota_baxter(H, GradedLinearMap(H.space, H.space, H.group.inverse, blocks))


# descendent Hopf pi-algebra ---------------------------------------------

def _circ_B(H, B, t, pos=0):
    """``g o_B h = g1 B(g2) h S(B(g3))`` on factors ``pos, pos+1``."""
    S = H.antipode
    return (t.split(pos, H, times=2).lin(pos + 1, B).lin(pos + 2, B).lin(pos + 2, S)
            .perm(*_swap_last(len(t.grades) + 2, pos)).mul(pos, H).mul(pos, H).mul(pos, H))


def _swap_last(n, pos):
    order = list(range(n))
    order[pos + 2], order[pos + 3] = order[pos + 3], order[pos + 2]
    return order


def descendent_algebra(H: HopfPiAlgebra, B: GradedLinearMap) -> HopfPiAlgebra:
    """``H_B``: product ``o_B`` and antipode ``T(g) = S(B(g1)) S(g2) B(g3)``."""
    require_abelian(H.group, "the descendent Hopf pi-algebra")
    F, G = H.field, H.group
    S = H.antipode
    mult = {}
    for a, b in H.space.tuples(2):
        ba = G.mul(b, a)
        mult[(a, b)] = product_tensor(_circ_B(H, B, H.basis(a, b)), F, H.dims[ba], H.dims[a], H.dims[b])
    T = {}
    for a in H.space.grades():
        t = H.basis(a).split(0, H, times=2).lin(0, B).lin(0, S).lin(1, S).lin(2, B).mul(0, H).mul(0, H)
        T[a] = linear_matrix(t, F, H.dims[G.inv(a)], H.dims[a])
    return H.replace(mult=mult, antipode=GradedLinearMap(H.space, H.space, G.inverse, T))


def check_descendent(H: HopfPiAlgebra, B: GradedLinearMap, HB: HopfPiAlgebra) -> CheckReport:
    """Consistency of ``H_B``: its Hopf axioms, ``B(h1) B(T(h2)) = eps(h) 1``, ``B T = S B``,
    ``B`` Rota-Baxter on ``H_B`` and ``B: H_B -> H`` a Hopf morphism."""
    T = HB.antipode
    rep = CheckReport()
    rep.merge(check_hopf_pi_algebra(HB), "H_B.")
    for a in H.space.grades():
        t = H.basis(a)
        lhs = t.split(0, H).lin(1, T).lin(0, B).lin(1, B).mul(0, H)
        compare(rep, "descendent_antipode", lhs, H.one(t.eps(0, H), 0), (a,), "B(h1) B(T(h2)) = eps(h) 1")
    rep.touch("B_T_equals_S_B", "B T = S B")
    BT, SB = T.then(B), B.then(H.antipode)
    for a in H.space.grades():
        if BT.blocks[a] != SB.blocks[a]:
            rep.fail("B_T_equals_S_B", (a,))
    rep.merge(check_rb(HB, B), "H_B.")
    rep.merge(check_hopf_morphism(B, HB, H), "B:H_B->H.")
    return rep


def descendent_hopf(R: RotaBaxterOperator):
    """``(H_B, consistency report)``."""
    HB = descendent_algebra(R.carrier, R.B)
    return HB, check_descendent(R.carrier, R.B, HB)


def brace_from_rb(R: RotaBaxterOperator) -> HopfPiBrace:
    """``(H, ., S)`` and ``(H, o_B, T)``."""
    return HopfPiBrace(R.carrier, descendent_algebra(R.carrier, R.B))


# enumeration on group algebras ---------------------------------------

def rb_search_size(grading: Grading) -> int:
    P = grading.target
    return math.prod(len(grading.fiber(P.inv(a))) ** len(grading.fiber(a)) for a in range(P.size))


def _candidates(grading):
    P = grading.target
    return [grading.fiber(P.inv(grading.map[g])) for g in range(grading.source.size)]


def _rb_holds(G, f, a, b):
    fa = f[a]
    return G.mul(fa, f[b]) == f[G.prod(a, fa, b, G.inv(fa))]


def _search(G, cands, prefix):
    """Backtracking in element order; constraints are checked as soon as every value they use is set."""
    n = G.size
    f = list(prefix) + [None] * (n - len(prefix))
    out = []

    def ok(k):
        for a in range(k + 1):
            fa = f[a]
            for b in range(k + 1):
                c = G.prod(a, fa, b, G.inv(fa))
                if c > k or (k not in (a, b, c)):
                    continue
                if G.mul(fa, f[b]) != f[c]:
                    return False
        return True

    for k in range(len(prefix)):
        if not ok(k):
            return out

    def rec(k):
        if k == n:
            out.append(tuple(f))
            return
        for v in cands[k]:
            f[k] = v
            if ok(k):
                rec(k + 1)
        f[k] = None

    rec(len(prefix))
    return out


def _search_job(args):
    G, cands, prefix = args
    return _search(G, cands, prefix)


def naive_group_rb(grading: Grading) -> list:
    """Every grade-respecting map checked against every pair."""
    G = grading.source
    n = G.size
    return [f for f in itertools.product(*_candidates(grading))
            if all(_rb_holds(G, f, a, b) for a in range(n) for b in range(n))]


def enumerate_group_rb(grading: Grading, bound=DEFAULT_BOUND, oracle=False, workers=1) -> list:
    """Group-like Rota-Baxter operators of ``k[Gamma]`` graded by ``grading``, as element maps
    ``f[g] = B(g)``, sorted lexicographically."""
    required = rb_search_size(grading)
    if required > bound:
        raise BoundExceeded(required, bound)
    if oracle:
        return sorted(naive_group_rb(grading))
    G = grading.source
    cands = _candidates(grading)
    jobs = [(G, cands, (v,)) for v in cands[0]]
    if workers and workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_search_job, jobs))
    else:
        parts = [_search_job(j) for j in jobs]
    return sorted(f for part in parts for f in part)


def linearize_group_rb(grading: Grading, f, field=QQ, H: HopfPiAlgebra | None = None) -> RotaBaxterOperator:
    """The linear operator of an element map on ``group_algebra(grading)`` (not re-verified)."""
    H = H or group_algebra(grading, field)
    where = {}
    for a in range(grading.target.size):
        for i, g in enumerate(grading.fiber(a)):
            where[g] = (a, i)
    cols = {a: [] for a in range(grading.target.size)}
    for a in range(grading.target.size):
        for g in grading.fiber(a):
            b, i = where[f[g]]
            if b != grading.target.inv(a):
                raise ShapeError("element map does not send grade a to a^-1")
            cols[a].append({i: 1})
    B = GradedLinearMap.from_columns(H.space, H.space, H.group.inverse, H.field, cols)
    return RotaBaxterOperator(H, B)
