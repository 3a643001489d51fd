import pytest

from hopfpi.brace import (ORIENTATIONS, aut_indexed_brace, braid_intertwiner_check, braiding_c,
                          check_brace, check_brace_lemma, check_braid_equation, check_module_properties,
                          fiber_positions, flip_family, group_action, left_action, right_action,
                          sigma, smash_brace_modlike, smash_brace_pimod, trivial_brace)
from hopfpi.errors import AxiomError, PreconditionError, ShapeError
from hopfpi.gallery import v4_swap_action
from hopfpi.groups import catalog_gradings, trivial_grading, trivial_group
from hopfpi.hopf import GradedLinearMap, group_algebra
from hopfpi.linalg import QQ, Matrix

from conftest import algebra, brace
from mutations import mutate_mult


def _g(gr, name):
    return fiber_positions(gr)[gr.source.index(name)]


def test_trivial_and_opposite_s3():
    for kind in ("trivial", "opposite"):
        B = brace(kind, "S3", "sign")
        assert check_brace(B).passed
        assert check_brace_lemma(B).passed
        assert check_module_properties(B).passed


def test_mutated_circ_fails_compatibility():
    B = brace("opposite", "S3", "sign")
    rep = check_brace(B.replace(circ=mutate_mult(B.circ, (1, 0), (2, 1, 0))))
    assert "brace_compatibility" in rep.failed_axioms()
    assert any(f.axiom == "brace_compatibility" for f in rep.failures)


def test_right_action_of_trivial_brace_is_conjugation():
    gr = catalog_gradings("S3")["sign"]
    G = gr.source
    ract = right_action(brace("trivial", "S3", "sign"))
    lact = left_action(brace("trivial", "S3", "sign"))
    pos = fiber_positions(gr)
    for a in range(G.size):
        for x in range(G.size):
            (ga, i), (gx, j) = pos[a], pos[x]
            want = pos[G.prod(G.inv(x), a, x)]
            assert ract.apply(ga, {i: 1}, gx, {j: 1}) == {want[1]: 1}
            assert lact.apply(ga, {i: 1}, gx, {j: 1}) == {j: 1}


def test_wrong_T_breaks_dot_from_action():
    B = brace("opposite", "S3", "sign")
    ident = GradedLinearMap.identity(B.space)
    bad = B.replace(circ=B.circ.replace(antipode=ident))
    assert "dot_from_action" in check_module_properties(bad).failed_axioms()


def test_braiding_on_one_dim_unit_grade_is_identity():
    c = braiding_c(brace("trivial", "Z2", "id"))
    assert c.matrix(0, 0) == Matrix.identity(QQ, 1)


def test_sigma_flip_and_perturbation():
    B = brace("trivial", "S3", "sign")
    H = B.dot
    assert check_braid_equation(sigma(B), H).passed
    assert check_braid_equation(flip_family(H), H).passed
    c = braiding_c(B)
    bad = c.with_entry(0, 1, 0, 0, c.matrix(0, 1)[0, 0] + 1)
    assert not check_braid_equation(bad, H).passed


def test_braiding_needs_abelian_grading():
    from hopfpi.groups import Grading, symmetric
    G = symmetric(3)
    H = group_algebra(Grading(G, G, tuple(range(6)), "id"))
    with pytest.raises(PreconditionError):
        braiding_c(trivial_brace(H))


def test_braid_triples_restricted():
    B = brace("trivial", "S3", "sign")
    rep = check_braid_equation(sigma(B), triples=[(0, 1, 1)])
    assert rep.passed and rep.counts["braid_equation"] == 0


def test_intertwiner_one_dim():
    H = group_algebra(trivial_grading(trivial_group()))
    rep, found = braid_intertwiner_check(trivial_brace(H), 2)
    assert rep.passed
    assert found[0] == list(ORIENTATIONS)


def test_intertwiner_n3_s3():
    rep, found = braid_intertwiner_check(brace("trivial", "S3", "sign"), 3)
    assert rep.passed
    assert all(found[i] for i in (0, 1))


def test_degenerate_action_makes_f_singular():
    H = algebra("Z2", "trivial")
    # g o g = 1 replaced by 0
    B = trivial_brace(H).replace(circ=H.replace(mult={(0, 0): H.mult[(0, 0)].with_entry((0, 1, 1), 0)}))
    rep, _ = braid_intertwiner_check(B, 2)
    assert "f_invertible" in rep.failed_axioms()


# aut-indexed --------------------------------------------------------

def _conjugation_matrix(G, t):
    cols = [{G.prod(t, g, G.inv(t)): 1} for g in range(G.size)]
    return Matrix.from_columns(QQ, G.size, cols)


def test_aut_indexed_identity_only():
    B = brace("trivial", "S3", "trivial")
    out = aut_indexed_brace(B, [Matrix.identity(QQ, 6)])
    assert out.dims == B.dims
    assert {k: v.data for k, v in out.dot.mult.items()} == {k: v.data for k, v in B.dot.mult.items()}


def test_aut_indexed_inner_conjugation():
    B = brace("trivial", "S3", "trivial")
    G = catalog_gradings("S3")["trivial"].source
    out = aut_indexed_brace(B, [Matrix.identity(QQ, 6), _conjugation_matrix(G, G.index("102"))], ["id", "c"])
    assert out.group.size == 2 and out.dims == (6, 6)
    assert check_brace(out).passed


def test_aut_indexed_rejects_non_automorphism():
    B = brace("trivial", "S3", "trivial")
    swap = Matrix.from_columns(QQ, 6, [{1: 1}, {0: 1}] + [{i: 1} for i in range(2, 6)])
    with pytest.raises(AxiomError):
        aut_indexed_brace(B, [Matrix.identity(QQ, 6), swap])


# smash constructions -----------------------------------------------

def test_pimod_with_one_dim_k_is_trivial():
    H = algebra("V4", "proj2")
    K = group_algebra(trivial_grading(trivial_group()))
    act = group_action(trivial_grading(trivial_group()), catalog_gradings("V4")["proj2"], [list(range(4))], QQ)
    out = smash_brace_pimod(H, K, act)
    assert out.dot.same_structure(H) and out.circ.same_structure(H)


def test_pimod_swap():
    K, H, act = v4_swap_action("trivial")
    out = smash_brace_pimod(H, K, act)
    assert out.dims == (4, 4)
    assert check_brace(out).passed


def test_pimod_rejects_non_module_action():
    K, H, act = v4_swap_action("trivial")
    # g acts by 0 on (0,0): no longer multiplicative
    bad = act.with_entry((0, 0), (0, 1, 0), 0)
    with pytest.raises(AxiomError):
        smash_brace_pimod(H, K, bad)


def test_modlike_with_trivial_k():
    H = algebra("V4", "proj2")
    Kg = trivial_grading(trivial_group())
    act = group_action(Kg, catalog_gradings("V4")["proj2"], [list(range(4))], QQ)
    out = smash_brace_modlike(group_algebra(Kg), H, act)
    assert out.dims == H.dims
    assert out.dot.same_structure(H) and out.circ.same_structure(H)


def test_modlike_swap():
    K, H, act = v4_swap_action("id")
    out = smash_brace_modlike(K, H, act)
    assert out.group.size == 4 and sum(out.dims) == 8
    assert check_brace(out).passed


def test_modlike_grade_bookkeeping():
    Kg = catalog_gradings("Z2")["id"]
    V = catalog_gradings("V4")["proj2"]
    G = V.source
    # (a, b) -> (a, b + 1) moves between fibers of the 2nd projection
    shift = [G.index(f"({a},{(b + 1) % 2})") for a in range(2) for b in range(2)]
    with pytest.raises(ShapeError):
        group_action(Kg, V, [list(range(4)), shift], QQ)
    K, H, act = v4_swap_action("id")
    act.out[(1, 0)] = 1
    with pytest.raises(ShapeError):
        smash_brace_modlike(K, H, act)
