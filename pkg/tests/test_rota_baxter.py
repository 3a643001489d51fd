import pytest

from hopfpi.brace import check_brace, fiber_positions, opposite_brace, trivial_brace
from hopfpi.errors import AxiomError, BoundExceeded, ShapeError
from hopfpi.gallery import load, v4_factorization
from hopfpi.groups import catalog_gradings
from hopfpi.hopf import GradedLinearMap, group_algebra
from hopfpi.linalg import QQ, Matrix
from hopfpi.rota_baxter import (Factorization, aut_indexed_rb, antipode_rb, brace_from_rb,
                                check_factorization, check_rb, descendent_hopf, enumerate_group_rb,
                                factorization_rb, linearize_group_rb, naive_group_rb, rota_baxter, span_of,
                                twist_rb)

from conftest import algebra


def _names(H, a):
    return list(H.space.basis_names[a])


def test_antipode_rb_everywhere(gallery_algebra):
    assert check_rb(gallery_algebra, gallery_algebra.antipode).passed


def test_z2_antipode_is_identity():
    H = algebra("Z2", "trivial")
    assert antipode_rb(H).B == GradedLinearMap.identity(H.space)


def test_counit_unit_needs_inverse_shift():
    H = algebra("S3", "sign")
    # x -> eps(x) 1 lands in H_e for every grade
    cols = {a: [{0: 1}] * H.dims[a] for a in range(2)}
    B = GradedLinearMap.from_columns(H.space, H.space, (0, 0), QQ, cols)
    with pytest.raises(ShapeError):
        check_rb(H, B)


def test_non_rb_rejected():
    H = algebra("S3", "sign")
    with pytest.raises(AxiomError):
        rota_baxter(H, GradedLinearMap.identity(H.space))


def _conjugation(H, gr, t):
    G = gr.source
    pos = fiber_positions(gr)
    cols = {a: [] for a in range(gr.target.size)}
    for g in range(G.size):
        a, i = pos[g]
        cols[a].append((i, {pos[G.prod(t, g, G.inv(t))][1]: 1}))
    cols = {a: [c for _, c in sorted(v, key=lambda p: p[0])] for a, v in cols.items()}
    return GradedLinearMap.from_columns(H.space, H.space, tuple(range(gr.target.size)), QQ, cols)


def test_twist_identity_and_inner():
    gr = catalog_gradings("S3")["sign"]
    H = group_algebra(gr)
    R = antipode_rb(H)
    assert twist_rb(R, GradedLinearMap.identity(H.space)).B == R.B
    for t in range(6):
        assert twist_rb(R, _conjugation(H, gr, t)).B == H.antipode


def test_twist_rejects_non_homomorphism():
    H = algebra("S3", "sign")
    # every grade-preserving permutation fixing 1 is an (anti)automorphism of S3,
    # so move the identity: a coalgebra map that is neither
    phi = GradedLinearMap.from_columns(H.space, H.space, (0, 1), QQ,
                                       {0: [{1: 1}, {0: 1}, {2: 1}], 1: [{0: 1}, {1: 1}, {2: 1}]})
    with pytest.raises(AxiomError):
        twist_rb(antipode_rb(H), phi)


def test_twist_by_antiautomorphism():
    H = algebra("S3", "sign")
    # inversion is an antiautomorphism and commutes with S
    assert twist_rb(antipode_rb(H), H.antipode).B == H.antipode


def _perm_matrix(G, f):
    return Matrix.from_columns(QQ, G.size, [{f(g): 1} for g in range(G.size)])


def test_aut_indexed():
    gr = catalog_gradings("S3")["trivial"]
    G = gr.source
    H = group_algebra(gr)
    R = antipode_rb(H)
    same = aut_indexed_rb(R, [Matrix.identity(QQ, 6)])
    assert same.B.blocks == R.B.blocks and same.carrier.dims == H.dims
    t = G.index("102")
    conj = _perm_matrix(G, lambda g: G.prod(t, g, G.inv(t)))
    out = aut_indexed_rb(R, [Matrix.identity(QQ, 6), conj])
    assert out.carrier.dims == (6, 6)
    assert check_rb(out.carrier, out.B).passed
    r = G.index("120")
    rot = [_perm_matrix(G, lambda g, k=k: G.prod(*[r] * k, g, *[G.inv(r)] * k)) for k in range(3)]
    assert check_rb(*vars(aut_indexed_rb(R, rot)).values()).passed
    swap = Matrix.from_columns(QQ, 6, [{1: 1}, {0: 1}] + [{i: 1} for i in range(2, 6)])
    with pytest.raises(AxiomError):
        aut_indexed_rb(R, [Matrix.identity(QQ, 6), swap])


def test_factorization_v4():
    H, Fz = v4_factorization()
    assert check_factorization(H, Fz).passed
    R = factorization_rb(H, Fz)
    names = {a: _names(H, a) for a in range(2)}
    # B(g k) = eps(g) S(k): (a, b) -> (0, b)
    for a in range(2):
        for j, x in enumerate(names[a]):
            target = f"(0,{x[3]})"
            col = [R.B.blocks[a][i, j] for i in range(2)]
            assert col == [1 if names[a][i] == target else 0 for i in range(2)]
    assert brace_from_rb(R).same_structure(trivial_brace(H))


def test_factorization_degenerate_cases():
    H = algebra("V4", "proj2")
    Fz = Factorization({a: span_of(H, 0, ["(0,0)"]) for a in range(2)},
                       {a: span_of(H, a, _names(H, a)) for a in range(2)})
    assert factorization_rb(H, Fz).B == H.antipode
    T = algebra("V4", "trivial")
    Fz = Factorization({0: span_of(T, 0, _names(T, 0))}, {0: span_of(T, 0, ["(0,0)"])})
    B = factorization_rb(T, Fz).B
    assert B.blocks[0].to_rows() == [[1, 1, 1, 1]] + [[0] * 4] * 3


def test_factorization_not_direct():
    H = algebra("V4", "proj2")
    Fz = Factorization({a: span_of(H, 0, _names(H, 0)) for a in range(2)},
                       {a: span_of(H, a, _names(H, a)) for a in range(2)})
    assert "product_direct" in check_factorization(H, Fz).failed_axioms()
    with pytest.raises(AxiomError):
        factorization_rb(H, Fz)


def test_descendent_s3():
    R = load("rb_antipode_s3_sign.json")
    HB, rep = descendent_hopf(R)
    assert rep.passed
    assert HB.same_structure(R.carrier.opposite())
    assert brace_from_rb(R).same_structure(opposite_brace(R.carrier))
    assert check_brace(brace_from_rb(R)).passed


def test_v4_antipode_brace_is_trivial():
    H = algebra("V4", "proj2")
    assert brace_from_rb(antipode_rb(H)).same_structure(trivial_brace(H))


def _as_names(gr, maps):
    n = gr.source.names
    return [{n[g]: n[f[g]] for g in range(len(f))} for f in maps]


def test_enumerate_z2():
    gr = catalog_gradings("Z2")["trivial"]
    found = _as_names(gr, enumerate_group_rb(gr))
    assert {"0": "0", "1": "1"} in found  # g -> g^-1 = g
    assert {"0": "0", "1": "0"} in found  # g -> 1


def test_enumerate_v4():
    gr = catalog_gradings("V4")["trivial"]
    found = enumerate_group_rb(gr)
    assert found == sorted(naive_group_rb(gr))
    assert tuple(range(4)) in found and (0, 0, 0, 0) in found


def test_enumerate_v4_graded():
    gr = catalog_gradings("V4")["proj2"]
    found = enumerate_group_rb(gr)
    assert found == sorted(naive_group_rb(gr))
    assert tuple(range(4)) in found
    for f in found:
        assert all(gr.map[f[g]] == gr.target.inv(gr.map[g]) for g in range(4))
        R = linearize_group_rb(gr, f)
        assert check_rb(R.carrier, R.B).passed


def test_enumerate_parallel_matches():
    gr = catalog_gradings("S3")["sign"]
    assert enumerate_group_rb(gr, workers=2) == enumerate_group_rb(gr)


def test_enumerate_bound():
    with pytest.raises(BoundExceeded) as exc:
        enumerate_group_rb(catalog_gradings("S3")["trivial"], bound=10)
    assert exc.value.required > 10
