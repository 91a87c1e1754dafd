"""The four motive categories and the bridge between them."""

import random

import pytest

from motivecalc.chow import (
    Correspondence,
    Morphism,
    corr_basis,
    diagonal_correspondence,
)
from motivecalc.errors import (
    MotiveCalcError,
    NonIdempotentError,
    UnsupportedDirectSumError,
)
from motivecalc.ktheory import KCorrespondence, k_basis, k_dim
from motivecalc.motives import (
    ChowMorphism,
    ChowMotive,
    NCMorphism,
    OrbitMorphism,
    OrbitMotive,
    bridge_morphism,
    bridge_motive,
    chow_hom_basis,
    chow_hom_dim,
    direct_sum,
    image_of_idempotent,
    manin_of,
    manin_hom_dims,
    motive_of,
    motive_of_morphism,
    nc_hom_basis,
    nc_hom_dim,
    nc_image_of_idempotent,
    nc_of,
    nc_tensor,
    nc_unit,
    orbit_hom_basis,
    orbit_hom_dim,
    orbit_hom_dims,
    orbit_of,
    summand_inclusion,
    summand_projection,
    tate_motive,
    tensor_motive,
    tensor_morphism,
    theta1,
    theta2_forward,
    twist_isomorphism,
    unit_motive,
)
from motivecalc.varieties import POINT, proj_space

P1 = proj_space(1)
P2 = proj_space(2)
P1xP1 = P1.product(P1)


def line_summand_idempotents():
    """The two orthogonal idempotents 1 (x) h and h (x) 1 on M(P1)."""
    ring = P1xP1.chow_ring(0)
    m = motive_of(P1)
    e1 = ChowMorphism(m, m, Correspondence(P1, P1, 0, {(0, 0): ring.monomial((0, 1))}))
    e2 = ChowMorphism(m, m, Correspondence(P1, P1, 0, {(0, 0): ring.monomial((1, 0))}))
    return m, e1, e2


# -- basic constructors ---------------------------------------------------------


def test_unit_motive_is_point_with_identity():
    u = unit_motive()
    assert u.variety == POINT and u.twist == 0
    assert chow_hom_dim(u, u) == 1


def test_projector_idempotency_is_checked():
    ring = P1xP1.chow_ring(0)
    not_idem = Correspondence(P1, P1, 0, {(0, 0): ring.element({(0, 1): 2})})
    with pytest.raises(NonIdempotentError):
        ChowMotive(P1, not_idem, 0)


def test_motive_of_identity_morphism():
    f = motive_of_morphism(Morphism.identity(P1))
    assert f == ChowMorphism.identity(motive_of(P1))


def test_motive_functor_reverses_composition():
    # M(g o f) = M(f) o M(g) for the chain diagonal-then-projection on P1.
    diag = Morphism.diagonal(P1)
    proj = Morphism.projection(P1xP1, [0])
    chain = diag.then(proj)
    lhs = motive_of_morphism(chain)
    rhs = motive_of_morphism(proj).then(motive_of_morphism(diag))
    assert lhs == rhs
    struct = Morphism.structure_map(P2)
    incl = Morphism.point_inclusion(P2)
    lhs = motive_of_morphism(incl.then(struct))
    rhs = motive_of_morphism(struct).then(motive_of_morphism(incl))
    assert lhs == rhs


# -- tensor ------------------------------------------------------------------------


def test_tensor_with_unit_is_identity_on_the_nose():
    a = motive_of(P1xP1)
    assert tensor_motive(a, unit_motive()) == a
    assert tensor_motive(unit_motive(), a) == a


def test_tate_twists_cancel():
    assert tensor_motive(tate_motive(1), tate_motive(-1)) == unit_motive()


def test_tensor_of_line_motives_is_product_motive():
    assert tensor_motive(motive_of(P1), motive_of(P1)) == motive_of(P1xP1)


def test_tensor_morphism_interchange():
    rng = random.Random(5)
    m1 = motive_of(P1)
    fs = chow_hom_basis(m1, m1)
    for _ in range(6):
        f, g, fp, gp = (rng.choice(fs) for _ in range(4))
        lhs = tensor_morphism(f, g).then(tensor_morphism(fp, gp))
        rhs = tensor_morphism(f.then(fp), g.then(gp))
        assert lhs == rhs


# -- direct sums ---------------------------------------------------------------------


def test_direct_sum_of_units():
    s = direct_sum(unit_motive(), unit_motive())
    assert s.variety.ncomponents == 2
    assert chow_hom_dim(s, s) == 4


def test_direct_sum_hom_additivity():
    a, b = motive_of(P1), motive_of(P2)
    s = direct_sum(a, b)
    c = motive_of(P1)
    assert chow_hom_dim(s, c) == chow_hom_dim(a, c) + chow_hom_dim(b, c)
    assert chow_hom_dim(c, s) == chow_hom_dim(c, a) + chow_hom_dim(c, b)


def test_direct_sum_biproduct_laws():
    a, b = motive_of(P1), unit_motive()
    inc_a = summand_inclusion(a, b, 0)
    inc_b = summand_inclusion(a, b, 1)
    pr_a = summand_projection(a, b, 0)
    pr_b = summand_projection(a, b, 1)
    assert inc_a.then(pr_a) == ChowMorphism.identity(a)
    assert inc_b.then(pr_b) == ChowMorphism.identity(b)
    assert inc_a.then(pr_b).is_zero()
    total = direct_sum(a, b)
    roundtrip = pr_a.then(inc_a) + pr_b.then(inc_b)
    assert roundtrip == ChowMorphism.identity(total)


def test_mixed_twist_sum_is_rejected():
    with pytest.raises(UnsupportedDirectSumError):
        direct_sum(unit_motive(), tate_motive(1))


# -- idempotents and summands ----------------------------------------------------------


def test_image_of_identity_and_zero():
    a = motive_of(P1)
    assert image_of_idempotent(ChowMorphism.identity(a)) == a
    zero = ChowMorphism(a, a, Correspondence.zero(P1, P1, 0), validate=False)
    cut = image_of_idempotent(zero)
    assert cut.is_zero()
    assert chow_hom_dim(cut, cut) == 0


def test_line_motive_splits_into_two_summands():
    m, e1, e2 = line_summand_idempotents()
    assert e1.then(e1) == e1
    assert e2.then(e2) == e2
    assert e1.then(e2).is_zero() and e2.then(e1).is_zero()
    assert e1 + e2 == ChowMorphism.identity(m)
    summand = image_of_idempotent(e1)
    assert chow_hom_dim(summand, summand) == 1


def test_idempotent_completion_bookkeeping():
    # dim End(image(e)) + mixed terms + dim End(image(1-e)) fills End(M(P1)).
    m, e1, e2 = line_summand_idempotents()
    s1, s2 = image_of_idempotent(e1), image_of_idempotent(e2)
    total = chow_hom_dim(m, m)
    mixed = chow_hom_dim(s1, s2) + chow_hom_dim(s2, s1)
    assert chow_hom_dim(s1, s1) + chow_hom_dim(s2, s2) + mixed == total


# -- orbit category ----------------------------------------------------------------------


def test_orbit_hom_of_units():
    u = orbit_of(unit_motive())
    assert orbit_hom_dims(u, u) == {0: 1}


def test_orbit_hom_dimensions_for_line():
    a = orbit_of(motive_of(P1))
    assert orbit_hom_dims(a, a) == {-1: 1, 0: 2, 1: 1}
    assert orbit_hom_dim(a, a) == 4
    u = orbit_of(unit_motive())
    assert orbit_hom_dim(a, u) == 2


def test_twist_isomorphism_composes_to_identity():
    for m in (0, 1, -2):
        a = motive_of(P1)
        fwd, back = twist_isomorphism(a, m)
        assert fwd.then(back) == OrbitMorphism.identity(orbit_of(a))
        twisted = ChowMotive(P1, a.projector, m, validate=False)
        assert back.then(fwd) == OrbitMorphism.identity(orbit_of(twisted))


def test_orbit_composition_collects_grades():
    a = orbit_of(motive_of(P1))
    basis = orbit_hom_basis(a, a)
    by_grade = {tuple(f.parts): f for f in basis}
    f = by_grade[(-1,)]
    g = by_grade[(1,)]
    composed = f.then(g)
    assert set(composed.parts) <= {0}


def test_orbit_tensor_grade_additivity_and_interchange():
    rng = random.Random(11)
    a = orbit_of(motive_of(P1))
    u = orbit_of(unit_motive())
    basis_aa = orbit_hom_basis(a, a)
    basis_uu = orbit_hom_basis(u, u)
    for f in basis_aa:
        for g in basis_uu:
            t = f.tensor(g)
            assert set(t.parts) == {
                j + k for j in f.parts for k in g.parts
            } or t.is_zero()
    for _ in range(8):
        f, fp = rng.choice(basis_aa), rng.choice(basis_aa)
        g, gp = rng.choice(basis_uu), rng.choice(basis_uu)
        lhs = f.tensor(g).then(fp.tensor(gp))
        rhs = f.then(fp).tensor(g.then(gp))
        assert lhs == rhs


def test_projection_functor_is_monoidal_in_grade_zero():
    a = motive_of(P1)
    fs = chow_hom_basis(a, a)
    for f in fs:
        for g in fs:
            plain = tensor_morphism(f, g)
            orb = OrbitMorphism.from_chow(f).tensor(OrbitMorphism.from_chow(g))
            assert orb.parts.get(0, None) == plain.corr or (
                plain.corr.is_zero() and 0 not in orb.parts
            )


# -- twistless motives and theta1 -----------------------------------------------------------


def test_theta1_preserves_hom_dimensions():
    for x in (POINT, P1, P2):
        for y in (POINT, P1):
            a, b = manin_of(x), manin_of(y)
            manin_total = sum(manin_hom_dims(a, b).values())
            orbit_total = orbit_hom_dim(theta1(a), theta1(b))
            assert manin_total == orbit_total


def test_manin_hom_dims_of_line():
    dims = manin_hom_dims(manin_of(P1), manin_of(P1))
    assert dims == {-1: 1, 0: 2, 1: 1}


# -- K-theoretic motives ----------------------------------------------------------------------


def test_nc_unit_has_scalar_endomorphisms():
    u = nc_unit()
    assert nc_hom_dim(u, u) == 1


def test_nc_hom_dimensions_match_k_theory():
    for x, y in [(P1, P1), (P1, P2), (P1xP1, POINT)]:
        assert nc_hom_dim(nc_of(x), nc_of(y)) == k_dim(x, y)


def test_nc_tensor_matches_product():
    assert nc_tensor(nc_of(P1), nc_of(P1)) == nc_of(P1xP1)


def test_nc_idempotent_cut():
    ring = P1xP1.k_ring(0)
    n = nc_of(P1)
    e = NCMorphism.cut(
        n, n, KCorrespondence(P1, P1, {(0, 0): ring.element({(0, 1): 1})})
    )
    e_motive = nc_image_of_idempotent(e)
    assert nc_hom_dim(e_motive, e_motive) == 1


# -- the bridge -----------------------------------------------------------------------------


def test_bridge_sends_variety_motives_to_k_diagonals():
    for x in (POINT, P1, P2, P1xP1):
        assert bridge_motive(motive_of(x)) == nc_of(x)


def test_bridge_collapses_twists():
    for m in (-2, 0, 3):
        assert bridge_motive(tate_motive(m)) == nc_unit()


def test_bridge_preserves_identity_and_composition():
    rng = random.Random(13)
    for x, y, z in [(P1, P1, P1), (POINT, P1, P2), (P1, P2, POINT)]:
        a, b, c = orbit_of(motive_of(x)), orbit_of(motive_of(y)), orbit_of(motive_of(z))
        assert bridge_morphism(OrbitMorphism.identity(a)) == NCMorphism.identity(nc_of(x))
        fs = orbit_hom_basis(a, b)
        gs = orbit_hom_basis(b, c)
        for _ in range(6):
            f, g = rng.choice(fs), rng.choice(gs)
            assert bridge_morphism(f.then(g)) == bridge_morphism(f).then(bridge_morphism(g))


def test_bridge_matches_theta2_forward():
    # Bridging is inverse to the Riemann-Roch transform on every Hom space.
    a, b = orbit_of(motive_of(P1)), orbit_of(motive_of(P2))
    for kc in k_basis(P1, P2):
        orbit_f = theta2_forward(kc, a, b)
        assert bridge_morphism(orbit_f).kcorr == kc
