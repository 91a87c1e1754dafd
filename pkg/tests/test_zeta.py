"""Intrinsic and measure-valued zeta series."""

from itertools import combinations_with_replacement
from math import comb

import pytest

from motivecalc.errors import LedgerError
from motivecalc.grothendieck import (
    chow_measure,
    nc_measure,
    point_count_measure,
    standard_ledger,
)
from motivecalc.motives import (
    chow_to_nc,
    motive_of,
    nc_direct_sum,
    nc_of,
    nc_unit,
    unit_motive,
)
from motivecalc.series import LaurentPolynomial
from motivecalc.zeta import (
    closed_form_check,
    theorem4_check,
    zeta_intrinsic,
    zeta_kapranov,
)
from motivecalc.varieties import POINT, proj_space

P1 = proj_space(1)
P2 = proj_space(2)


def laurent_range(n):
    return LaurentPolynomial({i: 1 for i in range(n + 1)})


# -- intrinsic series ----------------------------------------------------------


def test_intrinsic_of_unit():
    z = zeta_intrinsic(nc_unit(), 6)
    assert z.coefficients() == [1] * 7


def test_intrinsic_of_nc_line():
    z = zeta_intrinsic(nc_of(P1), 5)
    assert z.coefficients() == [1, 2, 3, 4, 5, 6]


def test_intrinsic_of_chow_line():
    z = zeta_intrinsic(motive_of(P1), 4, categorical_order=4)
    assert z.coefficients() == [laurent_range(n) for n in range(5)]


def test_intrinsic_of_chow_plane_small():
    z = zeta_intrinsic(motive_of(P2), 3, categorical_order=3)
    # Coefficient n is the class of Sym^n, with rank C(n+2, 2) at L -> 1.
    for n, c in enumerate(z.coefficients()):
        assert c.at_one() == comb(n + 2, 2)


def test_intrinsic_constant_term_is_one():
    for m in (nc_unit(), nc_of(P2), motive_of(P1)):
        z = zeta_intrinsic(m, 3, categorical_order=2)
        first = z.coefficients()[0]
        assert first == 1 or first == LaurentPolynomial.constant(1)


def test_nc_multiplicativity_over_direct_sums():
    a, b = nc_of(P1), nc_unit()
    zab = zeta_intrinsic(nc_direct_sum(a, b), 6, categorical_order=2)
    za = zeta_intrinsic(a, 6, categorical_order=2)
    zb = zeta_intrinsic(b, 6, categorical_order=2)
    assert zab.series == za.series * zb.series


# -- measure-valued series ----------------------------------------------------------


def test_kapranov_of_point_any_measure():
    ledger = standard_ledger()
    for mu in (nc_measure(ledger), point_count_measure(ledger, 3)):
        z = zeta_kapranov(ledger, "pt", mu, 8)
        assert z.coefficients() == [1] * 9


def test_kapranov_of_line_nc_measure():
    ledger = standard_ledger()
    z = zeta_kapranov(ledger, "P1", nc_measure(ledger), 5)
    assert z.coefficients() == [1, 2, 3, 4, 5, 6]


def test_kapranov_of_line_chow_measure():
    ledger = standard_ledger()
    z = zeta_kapranov(ledger, "P1", chow_measure(ledger), 5)
    assert z.coefficients() == [laurent_range(n) for n in range(6)]


def test_kapranov_missing_powers():
    ledger = standard_ledger()
    with pytest.raises(LedgerError):
        zeta_kapranov(ledger, "P1xP1", nc_measure(ledger), 3)


def _monic_polys(q, degree):
    """Coefficient tuples (a_0..a_{d-1}) of monic degree-d polys over F_q."""
    from itertools import product

    return [tuple(c) for c in product(range(q), repeat=degree)]


def _poly_mul(a, b, q):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] = (out[i + j] + x * y) % q
    return tuple(out)


def _irreducible_monics(q, max_degree):
    """Brute-force irreducible monic polynomials over F_q by trial products."""
    monic = {
        d: [coeffs + (1,) for coeffs in _monic_polys(q, d)] for d in range(1, max_degree + 1)
    }
    reducible = {d: set() for d in range(1, max_degree + 1)}
    for d1 in range(1, max_degree):
        for d2 in range(d1, max_degree - d1 + 1):
            for f in monic[d1]:
                for g in monic[d2]:
                    prod = _poly_mul(f, g, q)
                    if len(prod) - 1 <= max_degree:
                        reducible[len(prod) - 1].add(prod)
    return {
        d: [f for f in monic[d] if f not in reducible[d]] for d in monic
    }


def test_symmetric_powers_of_line_by_point_counting():
    # S^n(P1) = P^n is a registered ledger fact; verify it independently.
    # Points of S^n(P1) over F_q are degree-n effective divisors: multisets
    # of closed points (irreducible monic polynomials, plus the point at
    # infinity) with total degree n.  Brute-force the irreducibles and
    # count; the result must be #P^n(F_q) = 1 + q + ... + q^n.
    for q in (2, 3):
        irr = _irreducible_monics(q, 4)
        # Closed points listed with their degrees; infinity has degree 1.
        degrees = [1] + [d for d in irr for _ in irr[d]]
        for n in range(5):
            count = _count_multisets_with_total(degrees, n)
            assert count == sum(q**i for i in range(n + 1))


def _count_multisets_with_total(degrees, total):
    ways = [1] + [0] * total
    for d in degrees:
        for t in range(d, total + 1):
            ways[t] += ways[t - d]
    return ways[total]


# -- the comparison checks ------------------------------------------------------------


def test_theorem4_for_point_line_plane():
    ledger = standard_ledger()
    for symbol, order in (("pt", 8), ("P1", 5), ("P2", 5)):
        verdict = theorem4_check(ledger, symbol, order)
        assert verdict.ok, verdict.describe()


def test_theorem4_line_closed_form():
    ledger = standard_ledger()
    verdict = theorem4_check(ledger, "P1", 5)
    assert list(verdict.intrinsic) == [1, 2, 3, 4, 5, 6]


def test_closed_form_checks():
    ledger = standard_ledger()
    assert closed_form_check(ledger, "pt", 6).ok
    v = closed_form_check(ledger, "P1", 6)
    assert v.ok and v.exponent == 2
    v = closed_form_check(ledger, "P1xP1", 5)
    assert v.ok and v.exponent == 4
