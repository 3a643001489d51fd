"""Post-Hopf pi-algebras: axioms, the convolution inverse psi of theta,
the subadjacent Hopf pi-algebra and the passage to and from braces.

``triangle`` is an ``ActionFamily`` with blocks ``H_a (x) H_b -> H_b``.
``theta_{a,b}`` sends ``x`` to the operator ``y -> x |> y`` in
``End(H_b)``, written in matrix units ``E_rs`` at index ``r*n + s``.
``psi`` is stored in the same shape as ``triangle`` so it can be applied
like an action.
"""
from __future__ import annotations

from .brace import (ActionFamily, HopfPiBrace, build_action, check_module_bialgebra, group_action,
                    left_action, require_cocommutative, smash_brace_modlike)
from .errors import AxiomError, OneSidedInverseError, VerificationError
from .groups import Grading
from .hopf import HopfPiAlgebra, GradedLinearMap, check_hopf_pi_algebra, convolution_inverse, matrix_algebra
from .linalg import Matrix, StructureTensor
from .report import CheckReport
from .tensor import compare, linear_matrix, product_tensor

FORMULAS = {
    "P1": "x |> (y z) = (x1 |> y)(x2 |> z)",
    "P2": "x |> (y |> z) = (x1 (x2 |> y)) |> z",
    "P3": "x |> 1 = eps(x) 1",
    "P4": "1 |> x = x",
    "P5": "S(x |> y) = x |> S(y)",
}


class PostHopfStructure:
    """A post-Hopf structure; ``post_hopf`` validates, a decoded document
    does not. ``psi`` is solved on first use when not supplied."""

    def __init__(self, base: HopfPiAlgebra, triangle: ActionFamily, psi: ActionFamily | None = None):
        self.base, self.triangle, self._psi = base, triangle, psi

    @property
    def psi(self) -> ActionFamily:
        if self._psi is None:
            self._psi = post_hopf(self.base, self.triangle).psi
        return self._psi

    field = property(lambda self: self.base.field)
    group = property(lambda self: self.base.group)

    def __repr__(self):
        return f"PostHopfStructure(dims={self.base.dims})"


def trivial_triangle(H: HopfPiAlgebra) -> ActionFamily:
    """``x |> y = eps(x) y``."""
    return build_action(H.field, H.dims, H.dims, H.dims, lambda a, b: b, lambda t: t.eps(0, H))


def conjugation_triangle(grading: Grading, field) -> ActionFamily:
    """``g |> h = g^-1 h g`` on a group algebra (pi must be abelian for this to preserve grades)."""
    G = grading.source
    perms = [[G.prod(G.inv(g), h, g) for h in range(G.size)] for g in range(G.size)]
    return group_action(grading, grading, perms, field)


def theta(H: HopfPiAlgebra, triangle: ActionFamily, a, b) -> Matrix:
    """``theta_{a,b}`` as a ``dim(H_b)^2 x dim(H_a)`` matrix."""
    n, m = H.dims[b], H.dims[a]
    data = [0] * (n * n * m)
    for (r, x, s), c in triangle.blocks[(a, b)].data.items():
        data[(r * n + s) * m + x] = c
    return Matrix(H.field, n * n, m, data)


def _family_from_matrices(H, mats) -> ActionFamily:
    blocks, out = {}, {}
    N = H.group.size
    for a in range(N):
        for b in range(N):
            n, m = H.dims[b], H.dims[a]
            blocks[(a, b)] = StructureTensor(H.field, (n, m, n), {})
            out[(a, b)] = b
    for (a, b), M in mats.items():
        n, m = H.dims[b], H.dims[a]
        data = {}
        for rs in range(n * n):
            for x in range(m):
                c = M[rs, x]
                if c:
                    data[(rs // n, x, rs % n)] = c
        blocks[(a, b)] = StructureTensor(H.field, (n, m, n), data)
    return ActionFamily(H.field, blocks, out)


def check_post_hopf(H: HopfPiAlgebra, triangle: ActionFamily):
    """Returns ``(report, psi)``; ``psi`` is ``None`` unless every block of theta is invertible."""
    triangle.expect(H.dims, H.dims, H.dims, lambda a, b: b)
    tri = triangle
    rep = CheckReport()
    for a, b in H.space.tuples(2):
        t = H.basis(a, b)
        compare(rep, "coalgebra_map", t.mul(0, tri).split(0, H),
                t.split(0, H).split(2, H).perm(0, 2, 1, 3).mul(0, tri).mul(1, tri), (a, b),
                "D(x |> y) = (x1 |> y1) (x) (x2 |> y2)")
        compare(rep, "coalgebra_counit", t.mul(0, tri).eps(0, H), t.eps(0, H).eps(0, H), (a, b),
                "eps(x |> y) = eps(x) eps(y)")
    for a, b, c in H.space.tuples(3):
        t = H.basis(a, b, c)
        compare(rep, "P1", t.mul(1, H).mul(0, tri), t.split(0, H).perm(0, 2, 1, 3).mul(0, tri).mul(1, tri).mul(0, H),
                (a, b, c), FORMULAS["P1"])
        compare(rep, "P2", t.mul(1, tri).mul(0, tri), t.split(0, H).mul(1, tri).mul(0, H).mul(0, tri),
                (a, b, c), FORMULAS["P2"])
    rep.touch("convolution_invertible", "psi(x1) theta(x2) = eps(x) id = theta(x1) psi(x2)")
    mats = {}
    for a, b in H.space.tuples(2):
        try:
            g = convolution_inverse(H.coalgebra_at(a), matrix_algebra(H.field, H.dims[b]), theta(H, tri, a, b))
        except OneSidedInverseError as exc:
            rep.fail("convolution_invertible", (a, b))
            rep.notes.append(f"not convolution invertible at {(a, b)}: {exc}")
            continue
        if g is None:
            rep.fail("convolution_invertible", (a, b))
            rep.notes.append(f"not convolution invertible at {(a, b)}")
            continue
        mats[(a, b)] = g
    if len(mats) < len(H.space.tuples(2)):
        return rep, None
    psi = _family_from_matrices(H, mats)
    for a, b in H.space.tuples(2):
        t = H.basis(a, b)
        compare(rep, "psi_left_inverse", t.split(0, H).mul(1, tri).mul(0, psi), t.eps(0, H), (a, b),
                "psi(x1)(x2 |> y) = eps(x) y")
        compare(rep, "psi_right_inverse", t.split(0, H).mul(1, psi).mul(0, tri), t.eps(0, H), (a, b),
                "x1 |> psi(x2)(y) = eps(x) y")
    return rep, psi


def post_hopf(H: HopfPiAlgebra, triangle: ActionFamily) -> PostHopfStructure:
    """Validate and solve psi once; raises ``AxiomError`` on any failure."""
    rep, psi = check_post_hopf(H, triangle)
    if not rep.passed:
        raise AxiomError(f"not a post-Hopf pi-algebra (fails {', '.join(rep.failed_axioms())})", rep)
    return PostHopfStructure(H, triangle, psi)


def check_post_hopf_derived(H: HopfPiAlgebra, triangle: ActionFamily, psi=None) -> CheckReport:
    tri = triangle
    rep = CheckReport()
    e = H.e
    S = H.antipode
    for a in H.space.grades():
        t = H.basis(a)
        if H.dims[e]:
            compare(rep, "P3", H.one(t, 1).mul(0, tri), H.one(t.eps(0, H), 0), (a,), FORMULAS["P3"])
            compare(rep, "P4", H.one(t, 0).mul(0, tri), t, (a,), FORMULAS["P4"])
            # theta_{e,a}(1) is the identity of End(H_a)
            rep.touch("theta_unit_identity", "theta_{e,a}(1) = id")
            th = theta(H, tri, e, a)
            n = H.dims[a]
            col = [0] * (n * n)
            for x, u in H.unit_vec.items():
                for rs in range(n * n):
                    col[rs] = H.field.add(col[rs], H.field.mul(u, th[rs, x]))
            ident = [1 if rs // n == rs % n else 0 for rs in range(n * n)]
            if [H.field.normalize(c) for c in col] != ident:
                rep.fail("theta_unit_identity", (e, a))
    if S is not None:
        for a, b in H.space.tuples(2):
            t = H.basis(a, b)
            compare(rep, "P5", t.mul(0, tri).lin(0, S), t.lin(1, S).mul(0, tri), (a, b), FORMULAS["P5"])
    if psi is not None:
        # re-solving gives the same psi
        rep.touch("psi_unique", "re-solved psi equals cached psi")
        _, again = check_post_hopf(H, tri)
        if again != psi:
            rep.fail("psi_unique")
    return rep


def _subadjacent(H: HopfPiAlgebra, tri: ActionFamily, psi: ActionFamily) -> HopfPiAlgebra:
    F, G = H.field, H.group
    mult = {}
    for a, b in H.space.tuples(2):
        t = H.basis(a, b)
        ab = G.mul(a, b)
        mult[(a, b)] = product_tensor(t.split(0, H).mul(1, tri).mul(0, H), F, H.dims[ab], H.dims[a], H.dims[b])
    T = {}
    for a in H.space.grades():
        t = H.basis(a)
        ai = G.inv(a)
        T[a] = linear_matrix(t.split(0, H).lin(1, H.antipode).mul(0, psi), F, H.dims[ai], H.dims[a])
    return H.replace(mult=mult, antipode=GradedLinearMap(H.space, H.space, G.inverse, T))


def subadjacent(P: PostHopfStructure) -> HopfPiAlgebra:
    """``x * y = x1 (x2 |> y)`` with antipode ``T(x) = psi(x1)(S(x2))``."""
    require_cocommutative(P.base, "the subadjacent Hopf pi-algebra")
    return _subadjacent(P.base, P.triangle, P.psi)


def unit_action(P: PostHopfStructure) -> ActionFamily:
    """``|>_{a,e}`` as an action of the subadjacent algebra on ``H_e`` (trivially graded)."""
    e = P.base.e
    blocks = {(a, 0): P.triangle.blocks[(a, e)] for a in range(P.group.size)}
    return ActionFamily(P.field, blocks, {k: 0 for k in blocks})


def check_subadjacent(P: PostHopfStructure) -> CheckReport:
    """Hopf axioms of the subadjacent algebra plus ``H_e`` modulelike under ``|>_{a,e}``."""
    sub = subadjacent(P)
    rep = check_hopf_pi_algebra(sub)
    rep.merge(check_module_bialgebra(sub, P.base.unit_component(), unit_action(P)), "unit_component.")
    return rep


def brace_from_post_hopf(P: PostHopfStructure) -> HopfPiBrace:
    return HopfPiBrace(P.base, subadjacent(P))


def post_hopf_from_brace(B: HopfPiBrace) -> PostHopfStructure:
    """``x |> y = S(x1)(x2 o y)``, the brace's left action."""
    require_cocommutative(B.dot, "the post-Hopf structure of a brace")
    return post_hopf(B.dot, left_action(B))


def smash_from_post_hopf(P: PostHopfStructure) -> HopfPiBrace:
    """``H_e # H_|>``: the modulelike smash brace of ``H_e`` under the subadjacent algebra."""
    require_cocommutative(P.base, "the smash brace of a post-Hopf structure")
    sub = subadjacent(P)
    rep = check_subadjacent(P)
    if not rep.passed:
        raise VerificationError("subadjacent data fails its checks", rep)
    return smash_brace_modlike(sub, P.base.unit_component(), unit_action(P))
