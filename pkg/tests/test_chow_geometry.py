"""Chow rings, pullbacks/pushforwards, and the correspondence calculus."""

import random
from fractions import Fraction

import pytest

from motivecalc.chow import (
    ChowClass,
    Correspondence,
    Morphism,
    chow_action_matrix,
    chow_pullback,
    chow_pushforward,
    compose,
    corr_basis,
    corr_degree_range,
    corr_dim,
    corr_space_index,
    corr_from_vector,
    corr_to_vector,
    diagonal_correspondence,
    graph_transpose,
    hyperplane,
    integral,
    solved_identity_correspondence,
)
from motivecalc.errors import UnsupportedMorphismError, VarietyMismatchError
from motivecalc.varieties import POINT, CellularVariety, proj_space

P1 = proj_space(1)
P2 = proj_space(2)
P1xP1 = P1.product(P1)


def random_correspondence(x, y, r, rng):
    basis = corr_basis(x, y, r)
    out = Correspondence.zero(x, y, r)
    for b in basis:
        c = rng.randint(-3, 3)
        if c:
            out = out + b.scale(c)
    return out


# -- pullback / pushforward ---------------------------------------------------


def test_pullback_of_one_is_one():
    f = Morphism.projection(P1xP1, [0])
    assert chow_pullback(f, ChowClass.one(P1)) == ChowClass.one(P1xP1)


def test_pullback_renames_variable():
    f = Morphism.projection(P1xP1, [0])
    assert chow_pullback(f, hyperplane(P1)) == hyperplane(P1xP1, factor=0)
    g = Morphism.projection(P1xP1, [1])
    assert chow_pullback(g, hyperplane(P1)) == hyperplane(P1xP1, factor=1)


def test_pullback_along_diagonal_adds_classes():
    d = Morphism.diagonal(P1)
    h1_plus_h2 = hyperplane(P1xP1, factor=0) + hyperplane(P1xP1, factor=1)
    assert chow_pullback(d, h1_plus_h2) == hyperplane(P1).scale(2)


def test_pullback_is_ring_map():
    rng = random.Random(5)
    d = Morphism.diagonal(P1xP1)
    square = P1xP1.product(P1xP1)
    ring = square.chow_ring(0)
    for _ in range(10):
        a = ChowClass(square, [_random_elt(ring, rng)])
        b = ChowClass(square, [_random_elt(ring, rng)])
        assert chow_pullback(d, a * b) == chow_pullback(d, a) * chow_pullback(d, b)


def _random_elt(ring, rng):
    terms = {}
    for _ in range(rng.randint(0, 4)):
        exp = tuple(rng.randint(0, b - 1) for b in ring.bounds)
        terms[exp] = rng.randint(-4, 4)
    return ring.element(terms)


def test_pushforward_point_cases():
    f = Morphism.projection(P1, [])
    assert f.target == POINT
    assert chow_pushforward(f, hyperplane(P1)) == ChowClass.one(POINT)
    assert chow_pushforward(f, ChowClass.one(P1)) == ChowClass.zero(POINT)


def test_pushforward_extracts_top_coefficient():
    p1xp2 = P1.product(P2)
    f = Morphism.projection(p1xp2, [0])
    ring = p1xp2.chow_ring(0)
    c = ChowClass(p1xp2, [ring.monomial((1, 2))])
    assert chow_pushforward(f, c) == hyperplane(P1)


def test_projection_formula():
    rng = random.Random(13)
    f = Morphism.projection(P1xP1, [0])
    for _ in range(15):
        a = ChowClass(P1, [_random_elt(P1.chow_ring(0), rng)])
        b = ChowClass(P1xP1, [_random_elt(P1xP1.chow_ring(0), rng)])
        lhs = chow_pushforward(f, chow_pullback(f, a) * b)
        rhs = a * chow_pushforward(f, b)
        assert lhs == rhs


def test_pushforward_requires_projection():
    with pytest.raises(UnsupportedMorphismError):
        chow_pushforward(Morphism.diagonal(P1), ChowClass.one(P1.product(P1)))


# -- correspondence composition ----------------------------------------------


def test_diagonal_of_line_is_kuenneth_sum():
    delta = diagonal_correspondence(P1)
    ring = delta.blocks[(0, 0)].ring
    assert delta.blocks[(0, 0)] == ring.element({(0, 1): 1, (1, 0): 1})


def test_diagonal_composes_to_itself():
    for x in (POINT, P1, P2, P1xP1):
        delta = diagonal_correspondence(x)
        assert compose(delta, delta) == delta


def test_identity_law_on_bases():
    for x in (POINT, P1, P1xP1):
        for y in (POINT, P1, P2):
            dx, dy = diagonal_correspondence(x), diagonal_correspondence(y)
            for r in corr_degree_range(x, y):
                for f in corr_basis(x, y, r):
                    assert compose(dx, f) == f
                    assert compose(f, dy) == f


def test_identity_law_on_disjoint_union():
    two_lines = P1.disjoint_union(P1)
    delta = diagonal_correspondence(two_lines)
    for r in corr_degree_range(two_lines, P2):
        for f in corr_basis(two_lines, P2, r):
            assert compose(delta, f) == f


def test_degree_additivity_and_associativity():
    rng = random.Random(31)
    for _ in range(12):
        r, s, t = rng.choice([-1, 0, 1]), rng.choice([0, 1]), rng.choice([-1, 0])
        f = random_correspondence(P1, P1xP1, r, rng)
        g = random_correspondence(P1xP1, P1, s, rng)
        h = random_correspondence(P1, P1, t, rng)
        gf = compose(f, g)
        assert gf.degree == r + s
        assert compose(gf, h) == compose(f, compose(g, h))


def test_composition_is_bilinear():
    rng = random.Random(37)
    f1 = random_correspondence(P1, P2, 0, rng)
    f2 = random_correspondence(P1, P2, 0, rng)
    g = random_correspondence(P2, P1, 1, rng)
    assert compose(f1 + f2, g) == compose(f1, g) + compose(f2, g)


def test_corr_dimension_matches_enumeration():
    # dim Corr^j(P^m, P^n) counts monomials h1^a h2^b with a+b = m+j.
    for m in range(3):
        for n in range(3):
            x, y = proj_space(m), proj_space(n)
            for j in range(-m, n + 1):
                expected = sum(
                    1
                    for a in range(m + 1)
                    for b in range(n + 1)
                    if a + b == m + j
                )
                assert corr_dim(x, y, j) == expected


def test_vectorization_round_trip():
    rng = random.Random(41)
    for r in (-1, 0, 1):
        c = random_correspondence(P1xP1, P1, r, rng)
        idx = corr_space_index(P1xP1, P1, r)
        assert corr_from_vector(P1xP1, P1, r, corr_to_vector(c, idx), idx) == c


# -- transpose and graphs ------------------------------------------------------


def test_transpose_examples():
    delta = diagonal_correspondence(P1)
    assert delta.transpose() == delta
    ring = P1xP1.chow_ring(0)
    one_tensor_h = Correspondence(P1, P1, 0, {(0, 0): ring.monomial((0, 1))})
    assert one_tensor_h.transpose().blocks[(0, 0)] == ring.monomial((1, 0))


def test_transpose_is_involutive():
    rng = random.Random(43)
    for _ in range(10):
        c = random_correspondence(P1xP1, P2, rng.choice([-1, 0, 1]), rng)
        assert c.transpose().transpose() == c


def test_graph_of_identity_is_diagonal():
    for x in (POINT, P1, P2, P1xP1):
        assert graph_transpose(Morphism.identity(x)) == diagonal_correspondence(x)


def test_graph_of_structure_map():
    g = graph_transpose(Morphism.structure_map(P1))
    assert g.source == POINT and g.target == P1 and g.degree == 0
    assert g.blocks[(0, 0)] == g.blocks[(0, 0)].ring.one()


def test_graph_of_point_inclusion():
    g = graph_transpose(Morphism.point_inclusion(P1))
    assert g.source == P1 and g.target == POINT and g.degree == 0
    assert g.blocks[(0, 0)] == P1.chow_ring(0).variable(0)


def test_graph_functoriality_on_chains():
    # For composable library morphisms, the graph construction reverses order.
    diag = Morphism.diagonal(P1)
    proj = Morphism.projection(P1xP1, [1])
    chain = diag.then(proj)  # P1 -> P1xP1 -> P1 equals the identity
    assert chain.images == Morphism.identity(P1).images
    lhs = graph_transpose(chain)
    rhs = compose(graph_transpose(proj), graph_transpose(diag))
    assert lhs == rhs == diagonal_correspondence(P1)
    # A non-trivial chain: pt -> P1 -> pt.
    incl = Morphism.point_inclusion(P1)
    struct = Morphism.structure_map(P1)
    lhs = graph_transpose(incl.then(struct))
    rhs = compose(graph_transpose(struct), graph_transpose(incl))
    assert lhs == rhs == diagonal_correspondence(POINT)


# -- identity-law oracle --------------------------------------------------------


def test_solved_identity_matches_closed_form():
    for x in (POINT, P1, P2, P1xP1, P1.disjoint_union(POINT)):
        assert solved_identity_correspondence(x) == diagonal_correspondence(x)


# -- realization action ----------------------------------------------------------


def test_diagonal_acts_as_identity_on_chow_groups():
    for x in (P1, P2, P1xP1):
        m = chow_action_matrix(diagonal_correspondence(x))
        assert m == m.identity(x.total_chow_rank())


def test_action_respects_composition():
    rng = random.Random(47)
    f = random_correspondence(P1, P1xP1, 0, rng)
    g = random_correspondence(P1xP1, P1, 0, rng)
    mf = chow_action_matrix(f)
    mg = chow_action_matrix(g)
    assert chow_action_matrix(compose(f, g)) == mg * mf


def test_integral_of_point_class():
    assert integral(hyperplane(P1)) == 1
    assert integral(ChowClass.one(P1)) == 0


def test_mismatch_errors():
    with pytest.raises(VarietyMismatchError):
        compose(diagonal_correspondence(P1), diagonal_correspondence(P2))
    with pytest.raises(VarietyMismatchError):
        diagonal_correspondence(P1) + diagonal_correspondence(P2)
