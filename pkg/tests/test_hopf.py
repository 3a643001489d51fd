import pytest

from hopfpi.errors import PreconditionError, ShapeError
from hopfpi.groups import catalog_gradings, trivial_group
from hopfpi.hopf import (GradedLinearMap, GradedSpace, HopfPiAlgebra, check_antipode_identities,
                         check_hopf_morphism, check_hopf_pi_algebra, convolution_inverse, group_algebra,
                         is_cocommutative, matrix_algebra, solve_antipode)
from hopfpi.linalg import GF, QQ, Matrix, StructureTensor

from conftest import algebra
from mutations import mutate_antipode, mutate_comult


def test_group_algebra_dims():
    assert algebra("Z2", "trivial").dims == (2,)
    assert algebra("V4", "proj2").dims == (2, 2)
    assert algebra("S3", "sign").dims == (3, 3)
    assert algebra("D4", "ab").dims == (2, 2, 2, 2)


def test_gallery_algebra_passes(gallery_algebra):
    assert check_hopf_pi_algebra(gallery_algebra).passed
    assert check_antipode_identities(gallery_algebra).passed
    assert is_cocommutative(gallery_algebra)


@pytest.mark.parametrize("p", [2, 3, 7])
def test_group_algebra_over_gf(p):
    H = group_algebra(catalog_gradings("S3")["sign"], GF(p))
    assert check_hopf_pi_algebra(H).passed
    assert check_antipode_identities(H).passed


def test_mutated_multiplication_is_named():
    H = algebra("Z2", "trivial")
    # 1 * 1 = 1 changed 1 -> 0
    bad = H.replace(mult={(0, 0): H.mult[(0, 0)].with_entry((0, 0, 0), 0)})
    rep = check_hopf_pi_algebra(bad)
    assert not rep.passed
    assert {"associativity", "unit"} & set(rep.failed_axioms())
    f = next(f for f in rep.failures if f.axiom in ("associativity", "unit"))
    assert f.basis


def test_asymmetric_comult_not_cocommutative():
    H = algebra("Z4", "trivial")
    assert not is_cocommutative(mutate_comult(H, 0, (1, 2, 3)))


def test_one_dim_grades_are_cocommutative():
    H = algebra("Z2", "id")
    assert set(H.dims) == {1}
    assert is_cocommutative(H)


def test_abelian_antipode_involutive():
    rep = check_antipode_identities(algebra("V4", "trivial"))
    assert rep.passed and "antipode_involutive" in rep.checked


def test_mutated_antipode_is_named():
    H = algebra("S3", "sign")
    rep = check_antipode_identities(mutate_antipode(H, 1, 0, 0))
    assert not rep.passed
    assert rep.failed_axioms()[0].startswith("antipode")


def test_identity_morphism():
    H = algebra("S3", "sign")
    assert check_hopf_morphism(GradedLinearMap.identity(H.space), H, H).passed


def test_fiber_sum_not_coalgebra_map():
    K, H = algebra("Z2", "id"), algebra("V4", "proj2")
    f = GradedLinearMap.from_columns(K.space, H.space, (0, 1), QQ, {0: [{0: 1, 1: 1}], 1: [{0: 1, 1: 1}]})
    rep = check_hopf_morphism(f, K, H)
    assert "morphism_comultiplicative" in rep.failed_axioms()


def test_antipode_to_op_cop():
    H = algebra("S3", "sign")
    assert check_hopf_morphism(H.antipode, H, H.opposite()).passed
    with pytest.raises(ShapeError):
        check_hopf_morphism(H.antipode, H, algebra("V4", "proj2"))


def test_opposite_needs_abelian_grading():
    from hopfpi.groups import symmetric, Grading
    G = symmetric(3)
    gr = Grading(G, G, tuple(range(6)), "id")
    with pytest.raises(PreconditionError):
        group_algebra(gr).opposite()


def test_shape_errors():
    H = algebra("V4", "proj2")
    with pytest.raises(ShapeError):
        H.replace(unit=(1, 0, 0))
    with pytest.raises(ShapeError):
        H.replace(mult={**H.mult, (0, 1): StructureTensor(QQ, (2, 2, 3), {})})
    # antipode must shift a -> a^-1, here the identity on Z2
    wrong = GradedLinearMap(H.space, H.space, (1, 1), {0: Matrix.identity(QQ, 2), 1: Matrix.identity(QQ, 2)})
    with pytest.raises(ShapeError):
        H.replace(antipode=wrong)


# convolution inverses ------------------------------------------------

def _kz2():
    H = algebra("Z2", "trivial")
    return H, H.coalgebra_at(0)


def test_convolution_inverse_permutation_matrices():
    _, C = _kz2()
    A = matrix_algebra(QQ, 2)
    # f(1) = I, f(g) = swap, as columns in matrix units E_rs at r*2+s
    f = Matrix.from_columns(QQ, 4, [{0: 1, 3: 1}, {1: 1, 2: 1}])
    g = convolution_inverse(C, A, f)
    assert g == f  # both permutation matrices are involutions


def test_convolution_inverse_of_unit_is_unit():
    _, C = _kz2()
    A = matrix_algebra(QQ, 3)
    unit = Matrix.from_columns(QQ, 9, [{0: 1, 4: 1, 8: 1}] * 2)
    assert convolution_inverse(C, A, unit) == unit


def test_convolution_inverse_singular_group_like():
    _, C = _kz2()
    A = matrix_algebra(QQ, 2)
    f = Matrix.from_columns(QQ, 4, [{0: 1, 3: 1}, {0: 1}])
    assert convolution_inverse(C, A, f) is None


def test_solve_antipode_recovers_inverse(gallery_algebra):
    H = gallery_algebra
    assert solve_antipode(H.replace(antipode=None)) == H.antipode


def test_monoid_bialgebra_has_no_antipode():
    # {1, z} with z z = z: a bialgebra, z not invertible
    M = trivial_group()
    space = GradedSpace(M, (2,))
    mult = {(0, 0): StructureTensor(QQ, (2, 2, 2), {(0, 0, 0): 1, (1, 0, 1): 1, (1, 1, 0): 1, (1, 1, 1): 1})}
    comult = {0: StructureTensor(QQ, (2, 2, 2), {(0, 0, 0): 1, (1, 1, 1): 1})}
    B = HopfPiAlgebra(space, mult, (1, 0), comult, {0: (1, 1)})
    assert solve_antipode(B) is None


def test_one_dim_antipode_is_identity():
    space = GradedSpace(trivial_group(), (1,))
    B = HopfPiAlgebra(space, {(0, 0): StructureTensor(QQ, (1, 1, 1), {(0, 0, 0): 1})}, (1,),
                      {0: StructureTensor(QQ, (1, 1, 1), {(0, 0, 0): 1})}, {0: (1,)})
    S = solve_antipode(B)
    assert S == GradedLinearMap.identity(space)
    assert check_hopf_pi_algebra(B.replace(antipode=S)).passed
