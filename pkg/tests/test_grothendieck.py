"""Grothendieck-ring classes, the ledger, and the four measures."""

import pytest

from motivecalc.errors import LedgerError
from motivecalc.grothendieck import (
    LaurentPolynomial,
    VarLedger,
    build_standard_ledger,
    chow_class,
    chow_measure,
    hodge_diamond,
    hodge_euler,
    hodge_euler_measure,
    ledger_check,
    mod_q_minus_1_check,
    nc_class,
    nc_measure,
    point_count_measure,
    standard_ledger,
)
from motivecalc.motives import (
    direct_sum,
    motive_of,
    nc_of,
    tate_motive,
    tensor_motive,
    unit_motive,
)
from motivecalc.series import L
from motivecalc.varieties import POINT, proj_space

P1 = proj_space(1)
P2 = proj_space(2)
P1xP1 = P1.product(P1)


# -- classes ------------------------------------------------------------------


def test_class_of_unit_is_one():
    assert chow_class(unit_motive()) == LaurentPolynomial.constant(1)


def test_class_of_projective_spaces():
    for n in range(4):
        expected = LaurentPolynomial({i: 1 for i in range(n + 1)})
        assert chow_class(motive_of(proj_space(n))) == expected


def test_class_of_tate_twists():
    assert chow_class(tate_motive(1)) == LaurentPolynomial.monomial(-1)
    assert chow_class(tate_motive(-1)) == L


def test_class_is_multiplicative_and_additive():
    a, b = motive_of(P1), motive_of(P2)
    assert chow_class(tensor_motive(a, b)) == chow_class(a) * chow_class(b)
    assert chow_class(direct_sum(a, b)) == chow_class(a) + chow_class(b)
    assert chow_class(tensor_motive(a, a)) == chow_class(motive_of(P1xP1))


def test_nc_classes():
    assert nc_class(nc_of(POINT)) == 1
    assert nc_class(nc_of(P1)) == 2
    assert nc_class(nc_of(P2)) == 3
    assert nc_class(nc_of(P1xP1)) == 4


def test_nc_class_is_tate_collapse():
    from motivecalc.motives import chow_to_nc

    for m in (unit_motive(), motive_of(P1), motive_of(P2), tate_motive(2)):
        assert nc_class(chow_to_nc(m)) == chow_class(m).at_one()


def test_hodge_diamond_of_plane():
    assert hodge_diamond(motive_of(P2)) == {(0, 0): 1, (1, 1): 1, (2, 2): 1}
    assert hodge_euler(motive_of(P1)) == 2


# -- ledger mechanics ------------------------------------------------------------


def test_sealing_rules():
    ledger = VarLedger()
    ledger.register_symbol("pt", motive=unit_motive())
    with pytest.raises(LedgerError):
        chow_measure(ledger).of_symbol("pt")
    ledger.seal()
    assert chow_measure(ledger).of_symbol("pt") == LaurentPolynomial.constant(1)
    with pytest.raises(LedgerError):
        ledger.register_symbol("late")


def test_unknown_symbol_is_rejected():
    ledger = standard_ledger()
    with pytest.raises(LedgerError):
        chow_measure(ledger).of_symbol("nonsense")


def test_inconsistent_relation_is_rejected_at_registration():
    ledger = VarLedger()
    ledger.register_symbol("pt", motive=unit_motive())
    ledger.register_symbol("P1", motive=motive_of(P1))
    with pytest.raises(LedgerError):
        ledger.register_relation([(1, ["P1"])], [(1, ["pt"])])


def test_relations_using_unknown_symbols_fail():
    ledger = VarLedger()
    ledger.register_symbol("pt", motive=unit_motive())
    with pytest.raises(LedgerError):
        ledger.register_relation([(1, ["pt"])], [(1, ["mystery"])])


# -- measures ------------------------------------------------------------------------


def test_line_decomposition_under_all_measures():
    ledger = standard_ledger()
    side_p1 = [(1, ["P1"])]
    side_cells = [(1, ["A0"]), (1, ["A1"])]
    assert chow_measure(ledger).of_side(side_p1) == 1 + L
    assert chow_measure(ledger).of_side(side_cells) == 1 + L
    assert nc_measure(ledger).of_side(side_p1) == 2 == nc_measure(ledger).of_side(side_cells)
    for q in (2, 3, 5):
        mu = point_count_measure(ledger, q)
        assert mu.of_side(side_p1) == q + 1 == mu.of_side(side_cells)
    chi = hodge_euler_measure(ledger)
    assert chi.of_side(side_p1) == 2 == chi.of_side(side_cells)


def test_measure_values_on_plane():
    ledger = standard_ledger()
    assert chow_measure(ledger).of_symbol("P2") == LaurentPolynomial({0: 1, 1: 1, 2: 1})
    assert nc_measure(ledger).of_symbol("P2") == 3
    assert point_count_measure(ledger, 2).of_symbol("P2") == 7
    assert point_count_measure(ledger, 3).of_symbol("P2") == 13
    assert hodge_euler_measure(ledger).of_symbol("P1") == 2


def test_all_measures_satisfy_all_relations():
    ledger = standard_ledger()
    measures = [
        chow_measure(ledger),
        nc_measure(ledger),
        hodge_euler_measure(ledger),
    ] + [point_count_measure(ledger, q) for q in (2, 3, 4, 5, 7, 8, 9)]
    for mu in measures:
        verdict = ledger_check(mu)
        assert verdict.ok, verdict.failures


def test_mod_q_minus_1():
    ledger = standard_ledger()
    v = mod_q_minus_1_check(ledger, "P1", 5)
    assert v.point_count == 6 and v.nc_value == 2
    assert v.congruent and not v.equal_on_the_nose
    assert mod_q_minus_1_check(ledger, "pt", 7).equal_on_the_nose
    for q in (2, 3, 4, 5, 7, 8, 9):
        v = mod_q_minus_1_check(ledger, "P2", q)
        assert v.congruent
    # P^2 over F_2: 7 = 3 + 4 with q - 1 = 1; over F_3: 13 vs 3 mod 2.
    assert mod_q_minus_1_check(ledger, "P2", 3).point_count == 13


def test_symmetric_power_registry():
    ledger = standard_ledger()
    assert ledger.symmetric_power_symbol("P1", 3) == "P3"
    assert ledger.symmetric_power_symbol("pt", 5) == "pt"
    assert ledger.symmetric_power_symbol("P2", 2) == "S2_P2"
    with pytest.raises(LedgerError):
        ledger.symmetric_power_symbol("P1xP1", 2)


def test_plane_symmetric_power_classes():
    # class(Sym^n M(P2)) evaluated at L -> 1 is C(n+2, 2).
    from math import comb

    ledger = standard_ledger()
    mu = nc_measure(ledger)
    for n in range(1, 5):
        assert mu.of_symbol(f"S{n}_P2") == comb(n + 2, 2)
