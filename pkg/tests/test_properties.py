"""Invariants as hypothesis properties over the gallery and random small groups."""
import json
from fractions import Fraction

import pytest
from hypothesis import HealthCheck, given, settings, strategies as st

from hopfpi import cli
from hopfpi.brace import check_brace, check_brace_lemma
from hopfpi.errors import InputError, ShapeError
from hopfpi.gallery import gallery_pairs, names, path, text
from hopfpi.groups import Grading, cyclic, direct_product, is_homomorphism
from hopfpi.hopf import check_antipode_identities, check_hopf_pi_algebra, group_algebra
from hopfpi.io import parse_document
from hopfpi.linalg import GF, QQ
from hopfpi.matched_pair import brace_to_matched_pair, check_matched_pair, check_mp6
from hopfpi.post_hopf import check_post_hopf, conjugation_triangle
from hopfpi.report import CheckReport
from hopfpi.rota_baxter import check_rb, enumerate_group_rb, linearize_group_rb

from conftest import PAIRS, algebra, brace
from mutations import mutate_mult, tensor_sites

slow = settings(max_examples=25, deadline=None, suppress_health_check=[HealthCheck.too_slow])
pairs = st.sampled_from(PAIRS)


# scalars -----------------------------------------------------------

@given(st.integers(-10**6, 10**6), st.integers(1, 10**6), st.integers(1, 50))
def test_rationals_lowest_terms(n, d, k):
    x = QQ.parse(f"{n * k}/{d * k}")
    want = Fraction(n, d)
    assert x == want
    assert QQ.format(x) == (str(want.numerator) if want.denominator == 1 else f"{want.numerator}/{want.denominator}")
    assert QQ.parse(QQ.format(x)) == x


@given(st.lists(st.fractions(max_denominator=50), min_size=2, max_size=6))
def test_arithmetic_stays_exact(xs):
    acc = QQ(0)
    for x in xs:
        acc = QQ.add(QQ.mul(acc, x), x)
        assert not isinstance(acc, float)
    assert isinstance(QQ.normalize(acc), (int, Fraction))


@given(st.sampled_from([2, 3, 5, 7, 11]), st.integers(-100, 100))
def test_gf_normal_form(p, n):
    F = GF(p)
    assert 0 <= F(n) < p
    if F(n):
        assert F.mul(F(n), F.inv(F(n))) == 1


# groups ------------------------------------------------------------

cyclic_orders = st.lists(st.integers(1, 4), min_size=1, max_size=3)


def _abelian(orders):
    G = cyclic(orders[0])
    for n in orders[1:]:
        G = direct_product(G, cyclic(n))
    return G


@given(cyclic_orders)
@settings(deadline=None)
def test_products_of_cyclic_groups(orders):
    G = _abelian(orders)
    n = G.size
    assert G.is_abelian
    for a in range(n):
        assert G.mul(a, G.inv(a)) == G.identity
        for b in range(n):
            for c in range(n):
                assert G.mul(G.mul(a, b), c) == G.mul(a, G.mul(b, c))


def _projection(orders):
    """``Z_m1 x ... -> Z_m1``; element order puts the first factor major."""
    G = _abelian(orders)
    P = cyclic(orders[0])
    block = G.size // orders[0]
    return Grading(G, P, tuple(g // block for g in range(G.size)), "proj1")


@given(cyclic_orders)
@settings(deadline=None)
def test_projection_grading_is_homomorphism(orders):
    gr = _projection(orders)
    assert is_homomorphism(gr.source, gr.target, gr.map)


# Hopf pi-algebras --------------------------------------------------

@given(cyclic_orders, st.sampled_from([QQ, GF(2), GF(3)]))
@slow
def test_random_group_algebras_pass(orders, F):
    H = group_algebra(_projection(orders), F)
    assert check_hopf_pi_algebra(H).passed
    assert check_antipode_identities(H).passed


@given(pairs, st.data())
@slow
def test_mult_mutation_never_passes(pair, data):
    H = algebra(*pair)
    sites = list(tensor_sites(H.mult))
    key, idx = data.draw(st.sampled_from(sites))
    assert not check_hopf_pi_algebra(mutate_mult(H, key, idx)).passed


@given(st.lists(st.tuples(st.sampled_from("abc"), st.booleans()), max_size=10))
def test_report_pass_iff_no_failures(events):
    rep = CheckReport()
    for name, bad in events:
        rep.touch(name)
        if bad:
            rep.fail(name)
    assert rep.passed == (not rep.failures) == (not any(b for _, b in events))
    assert set(rep.failed_axioms()) == {n for n, b in events if b}


# Sweedler engine -----------------------------------------------------

@given(pairs, st.data())
@slow
def test_tens_linear_maps_commute_with_scaling(pair, data):
    H = algebra(*pair)
    a = data.draw(st.sampled_from(H.space.grades()))
    b = data.draw(st.sampled_from(H.space.grades()))
    c = data.draw(st.integers(-3, 3))
    t = H.basis(a, b)
    assert t.scale(c).mul(0, H).terms == t.mul(0, H).scale(c).terms
    # coassociativity through the engine
    assert t.split(0, H).split(0, H).terms == t.split(0, H).split(1, H).terms


# braces ---------------------------------------------------------------

@given(pairs, st.sampled_from(["trivial", "opposite"]))
@slow
def test_braces_and_their_matched_pairs(pair, kind):
    B = brace(kind, *pair)
    assert check_brace(B).passed
    assert check_brace_lemma(B).passed
    MP = brace_to_matched_pair(B)
    assert check_matched_pair(MP).passed and check_mp6(MP).passed


@given(pairs, st.data())
@slow
def test_brace_circ_mutation_detected(pair, data):
    B = brace("opposite", *pair)
    key, idx = data.draw(st.sampled_from(list(tensor_sites(B.circ.mult))))
    assert "brace_compatibility" in check_brace(B.replace(circ=mutate_mult(B.circ, key, idx))).failed_axioms()


def test_action_shape_invariant():
    from hopfpi.brace import left_action
    act = left_action(brace("trivial", "V4", "proj2"))
    H = algebra("V4", "proj2")
    act.expect(H.dims, H.dims, H.dims, lambda a, b: b)
    with pytest.raises(ShapeError):
        act.expect(H.dims, H.dims, H.dims, lambda a, b: a ^ 1)


# post-Hopf ----------------------------------------------------------

@given(pairs)
@slow
def test_conjugation_is_post_hopf(pair):
    gr = dict(((gg, n), x) for gg, n, x in gallery_pairs())[pair]
    H = algebra(*pair)
    rep, psi = check_post_hopf(H, conjugation_triangle(gr, QQ))
    assert rep.passed and psi is not None


# Rota-Baxter ----------------------------------------------------------

SMALL = [p for p in PAIRS if p[0] in ("Z2", "Z4", "V4", "S3")]


@given(st.sampled_from(SMALL), st.data())
@slow
def test_enumerated_operators_are_rb(pair, data):
    gr = dict(((g, n), x) for g, n, x in gallery_pairs())[pair]
    found = enumerate_group_rb(gr)
    assert found
    f = data.draw(st.sampled_from(found))
    H = algebra(*pair)
    R = linearize_group_rb(gr, f, H=H)
    rep = check_rb(H, R.B)
    assert rep.passed
    assert rep.checked[:2] == ["coalgebra_map", "coalgebra_counit"]


# documents ------------------------------------------------------------

@given(st.sampled_from(names()), st.data())
@settings(max_examples=60, deadline=None)
def test_corrupted_documents_fail_cleanly(name, data):
    body = text(name)
    i = data.draw(st.integers(0, len(body) - 1))
    ch = data.draw(st.sampled_from(list('0123{}[]",:-/x ')))
    bad = body[:i] + ch + body[i + 1:]
    try:
        parse_document(bad)
    except InputError:
        pass


@given(st.sampled_from([n for n in names() if not n.startswith("group_")]))
@settings(max_examples=10, deadline=None)
def test_report_renderings_agree(name):
    status, rep, _ = cli.run(["validate", str(path(name))])
    data = json.loads(json.dumps(rep.to_dict()))
    out = rep.render()
    assert data["pass"] == (status == 0) == ("verdict: PASS" in out)
    for section, body in data["checks"].items():
        assert f"[{section}] {'PASS' if body['pass'] else 'FAIL'}" in out
