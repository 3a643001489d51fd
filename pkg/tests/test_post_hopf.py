import pytest

from hopfpi.brace import left_action, trivial_brace
from hopfpi.errors import AxiomError, PreconditionError
from hopfpi.gallery import load
from hopfpi.groups import catalog_gradings, trivial_grading, trivial_group
from hopfpi.hopf import group_algebra
from hopfpi.linalg import QQ
from hopfpi.post_hopf import (PostHopfStructure, brace_from_post_hopf, check_post_hopf, check_post_hopf_derived,
                              check_subadjacent, conjugation_triangle, post_hopf, post_hopf_from_brace,
                              smash_from_post_hopf, subadjacent, trivial_triangle)
from hopfpi.rota_baxter import antipode_rb, brace_from_rb

from conftest import algebra, brace
from mutations import mutate_action, mutate_antipode, mutate_comult


def _conj():
    gr = catalog_gradings("S3")["sign"]
    return group_algebra(gr), conjugation_triangle(gr, QQ)


def test_trivial_triangle_psi_is_theta(gallery_algebra):
    tri = trivial_triangle(gallery_algebra)
    rep, psi = check_post_hopf(gallery_algebra, tri)
    assert rep.passed
    assert psi == tri
    assert check_post_hopf_derived(gallery_algebra, tri, psi).passed


def test_conjugation_is_opposite_brace_action():
    H, tri = _conj()
    assert tri == left_action(brace("opposite", "S3", "sign"))


def test_p2_mutation():
    H, tri = _conj()
    rep, psi = check_post_hopf(H, mutate_action(tri, (0, 1), (0, 0, 0)))
    assert "P2" in rep.failed_axioms()
    with pytest.raises(AxiomError):
        post_hopf(H, mutate_action(tri, (0, 1), (0, 0, 0)))


def test_derived_on_conjugation():
    H, tri = _conj()
    P = post_hopf(H, tri)
    rep = check_post_hopf_derived(H, tri, P.psi)
    assert rep.passed
    assert {"P3", "P4", "P5", "psi_unique"} <= set(rep.checked)


def test_antipode_mutation_fails_p5():
    H, tri = _conj()
    assert check_post_hopf_derived(mutate_antipode(H, 1, 0, 0), tri).failed_axioms() == ["P5"]


def test_subadjacent_of_trivial_is_base():
    H = algebra("S3", "sign")
    sub = subadjacent(post_hopf(H, trivial_triangle(H)))
    assert sub.same_structure(H)


def test_subadjacent_gate():
    H = mutate_comult(algebra("V4", "proj2"), 0, (0, 1, 0))
    P = PostHopfStructure(H, trivial_triangle(H), trivial_triangle(H))
    with pytest.raises(PreconditionError):
        subadjacent(P)


def test_subadjacent_module_bialgebra():
    H, tri = _conj()
    rep = check_subadjacent(post_hopf(H, tri))
    assert rep.passed


def test_brace_from_trivial_and_conjugation():
    H = algebra("S3", "sign")
    assert brace_from_post_hopf(post_hopf(H, trivial_triangle(H))).same_structure(trivial_brace(H))
    B = brace_from_post_hopf(post_hopf(*_conj()))
    assert B.same_structure(brace_from_rb(antipode_rb(H)))


def test_from_brace():
    H, tri = _conj()
    assert post_hopf_from_brace(brace("trivial", "S3", "sign")).triangle == trivial_triangle(H)
    assert post_hopf_from_brace(brace("opposite", "S3", "sign")).triangle == tri
    bad = mutate_comult(algebra("V4", "proj2"), 0, (0, 1, 0))
    with pytest.raises(PreconditionError):
        post_hopf_from_brace(trivial_brace(bad))


def test_smash_trivial_v4():
    from hopfpi.brace import check_brace
    H = algebra("V4", "proj2")
    B = smash_from_post_hopf(post_hopf(H, trivial_triangle(H)))
    assert check_brace(B).passed


def test_smash_one_dim():
    H = group_algebra(trivial_grading(trivial_group()))
    B = smash_from_post_hopf(post_hopf(H, trivial_triangle(H)))
    assert B.dims == (1,)


def test_smash_conjugation_s3():
    from hopfpi.brace import check_brace
    B = smash_from_post_hopf(load("post_hopf_conjugation_s3_sign.json"))
    assert sum(B.dims) == 18
    assert check_brace(B).passed


def test_psi_solved_lazily_after_load():
    P = load("post_hopf_conjugation_s3_sign.json")
    H, tri = _conj()
    assert P.psi == post_hopf(H, tri).psi
