"""Rational K-theory of cellular varieties and the Riemann-Roch transform.

K0 of a product of projective spaces is presented in the shifted
variables v_i = u_i - 1, where u_i is the class of the hyperplane line
bundle of the i-th factor:

    K0(P^{n1} x ... x P^{nk})_Q = Q[v1..vk]/(v^{n+1}).

In these coordinates each u_i = 1 + v_i is a unit (v_i is nilpotent), and
a line bundle O(a1..ak) is the product of (1 + v_i)^{a_i}, with negative
powers expanded by the finite geometric series.

Pushforward to a point is the Euler characteristic.  On the monomial
basis it has the closed form chi(P^n, v^j) = C(n, j): this is the j-th
finite difference of a -> C(a+n, n), the Euler characteristic of O(a),
so it reproduces chi(O(a)) = C(a+n, n) for every integer a and kills the
defining ideal structurally (C(n, j) = 0 for j > n).

Composition of K-correspondences is pullback, product, pushforward, the
K0 shadow of the alternating sum of Tor terms.  The diagonal K-class is
not hard-coded: it is solved from the two-sided identity law on the
monomial basis, and doubles as an internal consistency oracle.

The Riemann-Roch transform ch(alpha) * Td(target), split into homogeneous
pieces, is the degree-graded bridge between K-correspondences and Chow
correspondences; it is a Q-linear bijection on every Hom space here, with
exact inverse by linear solve.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Sequence

from .chow import (
    ChowClass,
    Correspondence,
    corr_degree_range,
    corr_space_index,
    corr_from_vector,
    corr_to_vector,
)
from .errors import MotiveCalcError, UnsupportedMorphismError, VarietyMismatchError
from .linalg import RationalMatrix
from .quotient import Exponent, QuotientRing, RingElement
from .varieties import CellularVariety, _chow_ring, _k_ring
from .chow import Morphism


# ---------------------------------------------------------------------------
# K-classes
# ---------------------------------------------------------------------------


class KClass:
    """An element of K0(X)_Q, one shifted-variable ring element per component."""

    __slots__ = ("variety", "parts")

    def __init__(self, variety: CellularVariety, parts: Sequence[RingElement]):
        parts = tuple(parts)
        if len(parts) != variety.ncomponents:
            raise VarietyMismatchError("one ring element per component required")
        for i, part in enumerate(parts):
            if part.ring != variety.k_ring(i):
                raise VarietyMismatchError(
                    f"component {i} of {variety} expects ring {variety.k_ring(i)!r}"
                )
        self.variety = variety
        self.parts = parts

    @staticmethod
    def one(variety: CellularVariety) -> "KClass":
        return KClass(variety, [variety.k_ring(i).one() for i in range(variety.ncomponents)])

    @staticmethod
    def zero(variety: CellularVariety) -> "KClass":
        return KClass(variety, [variety.k_ring(i).zero() for i in range(variety.ncomponents)])

    def _check(self, other: "KClass") -> None:
        if self.variety != other.variety:
            raise VarietyMismatchError("K-classes live on different varieties")

    def __add__(self, other: "KClass") -> "KClass":
        self._check(other)
        return KClass(self.variety, [a + b for a, b in zip(self.parts, other.parts)])

    def __sub__(self, other: "KClass") -> "KClass":
        self._check(other)
        return KClass(self.variety, [a - b for a, b in zip(self.parts, other.parts)])

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        self._check(other)
        return KClass(self.variety, [a * b for a, b in zip(self.parts, other.parts)])

    __rmul__ = __mul__

    def scale(self, scalar) -> "KClass":
        return KClass(self.variety, [p.scale(scalar) for p in self.parts])

    def is_zero(self) -> bool:
        return all(p.is_zero() for p in self.parts)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, KClass)
            and self.variety == other.variety
            and self.parts == other.parts
        )

    def __repr__(self) -> str:
        inner = "; ".join(repr(p) for p in self.parts)
        return f"KClass({inner} on {self.variety})"


def line_bundle(variety: CellularVariety, twists: Sequence[int], component: int = 0) -> KClass:
    """[O(a1..ak)] supported on one component, zero on the others."""
    parts = [variety.k_ring(i).zero() for i in range(variety.ncomponents)]
    ring = variety.k_ring(component)
    if len(twists) != ring.nvars:
        raise VarietyMismatchError("one twist per projective factor required")
    elt = ring.one()
    for i, a in enumerate(twists):
        elt = elt * _unit_power(ring, i, a)
    parts[component] = elt
    return KClass(variety, parts)


def _unit_power(ring: QuotientRing, var: int, a: int) -> RingElement:
    """(1 + v_var)^a inside the truncated ring, for any integer a."""
    v = ring.variable(var)
    bound = ring.bounds[var]
    out = ring.zero()
    for j in range(bound):
        out = out + (v**j).scale(comb_int(a, j))
    return out


def comb_int(a: int, j: int) -> int:
    """Binomial coefficient C(a, j) as a polynomial in a (any integer a)."""
    num = 1
    for t in range(j):
        num *= a - t
    return num // factorial(j)


# -- pullback / pushforward ---------------------------------------------------


def k_pullback(f: Morphism, c: KClass) -> KClass:
    if c.variety != f.target:
        raise VarietyMismatchError("K-class does not live on the morphism target")
    src_ring = f.source.k_ring(0)
    return KClass(f.source, [c.parts[0].remap(src_ring, f.images)])


def k_pushforward(f: Morphism, c: KClass) -> KClass:
    """Pushforward along a factor projection: chi(P^n, v^j) = C(n, j) per dropped factor."""
    if not f.is_projection():
        raise UnsupportedMorphismError("K-pushforward requires a factor projection")
    if c.variety != f.source:
        raise VarietyMismatchError("K-class does not live on the morphism source")
    dims = f.source.components[0]
    kept = f.images
    dropped = [i for i in range(len(dims)) if i not in kept]
    tgt_ring = f.target.k_ring(0)
    out: dict[Exponent, Fraction] = {}
    for exp, coeff in c.parts[0].terms.items():
        weight = coeff
        for i in dropped:
            weight *= comb(dims[i], exp[i])
        if weight == 0:
            continue
        key = tuple(exp[i] for i in kept)
        s = out.get(key, Fraction(0)) + weight
        if s == 0:
            out.pop(key, None)
        else:
            out[key] = s
    return KClass(f.target, [tgt_ring.element(out)])


def euler_characteristic(c: KClass) -> Fraction:
    """chi(X, c): pushforward to the point, summed over components."""
    total = Fraction(0)
    for i, part in enumerate(c.parts):
        dims = c.variety.components[i]
        for exp, coeff in part.terms.items():
            weight = coeff
            for d, e in zip(dims, exp):
                weight *= comb(d, e)
            total += weight
    return total


# ---------------------------------------------------------------------------
# K-correspondences
# ---------------------------------------------------------------------------


def _k_block_ring(x: CellularVariety, y: CellularVariety, i: int, j: int) -> QuotientRing:
    return _k_ring(x.components[i] + y.components[j])


class KCorrespondence:
    """A class in K0(X x Y)_Q seen as a generalized morphism from X to Y."""

    __slots__ = ("source", "target", "blocks")

    def __init__(self, source, target, blocks, validate: bool = True):
        self.source = source
        self.target = target
        clean: dict[tuple[int, int], RingElement] = {}
        for (i, j), elt in blocks.items():
            if elt.is_zero():
                continue
            if validate and elt.ring != _k_block_ring(source, target, i, j):
                raise VarietyMismatchError(
                    f"block ({i},{j}) lives in the wrong K-ring for {source} x {target}"
                )
            clean[(i, j)] = elt
        self.blocks = clean

    @staticmethod
    def zero(source, target) -> "KCorrespondence":
        return KCorrespondence(source, target, {}, validate=False)

    def is_zero(self) -> bool:
        return not self.blocks

    def _check_linear(self, other: "KCorrespondence") -> None:
        if self.source != other.source or self.target != other.target:
            raise VarietyMismatchError("K-correspondences must share source and target")

    def __add__(self, other: "KCorrespondence") -> "KCorrespondence":
        self._check_linear(other)
        out = dict(self.blocks)
        for key, elt in other.blocks.items():
            out[key] = out[key] + elt if key in out else elt
        return KCorrespondence(self.source, self.target, out, validate=False)

    def __sub__(self, other: "KCorrespondence") -> "KCorrespondence":
        return self + other.scale(-1)

    def scale(self, scalar) -> "KCorrespondence":
        return KCorrespondence(
            self.source,
            self.target,
            {k: e.scale(scalar) for k, e in self.blocks.items()},
            validate=False,
        )

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, KCorrespondence)
            and self.source == other.source
            and self.target == other.target
            and self.blocks == other.blocks
        )

    def then(self, g: "KCorrespondence") -> "KCorrespondence":
        """g o self: pull both to X x Y x Z, multiply, push out the middle.

        The pushforward weight over a middle variable of dimension n is
        C(n, e) on exponent e, which vanishes for e > n, so terms killed
        by truncation contribute nothing and the result is well defined
        on representatives.
        """
        if self.target != g.source:
            raise VarietyMismatchError(
                f"cannot compose: middle varieties {self.target} and {g.source} differ"
            )
        x, y, z = self.source, self.target, g.target
        out_blocks: dict[tuple[int, int], dict[Exponent, Fraction]] = {}
        g_index: dict[tuple[int, int], dict[Exponent, list]] = {}
        for (j, k), elt in g.blocks.items():
            ky = len(y.components[j])
            idx: dict[Exponent, list] = {}
            for exp, coeff in elt.terms.items():
                idx.setdefault(exp[:ky], []).append((exp[ky:], coeff))
            g_index[(j, k)] = idx
        for (i, j), f_elt in self.blocks.items():
            kx = len(x.components[i])
            mid_dims = y.components[j]
            f_grouped: dict[Exponent, list] = {}
            for exp, coeff in f_elt.terms.items():
                f_grouped.setdefault(exp[kx:], []).append((exp[:kx], coeff))
            for (jj, k), idx in g_index.items():
                if jj != j:
                    continue
                acc = out_blocks.setdefault((i, k), {})
                for y1, f_terms in f_grouped.items():
                    for y2, g_terms in idx.items():
                        weight = 1
                        for n, e1, e2 in zip(mid_dims, y1, y2):
                            weight *= comb_int(n, e1 + e2)
                            if weight == 0:
                                break
                        if weight == 0:
                            continue
                        for xpart, cf in f_terms:
                            for zpart, cg in g_terms:
                                key = xpart + zpart
                                s = acc.get(key, Fraction(0)) + cf * cg * weight
                                if s == 0:
                                    acc.pop(key, None)
                                else:
                                    acc[key] = s
        blocks = {
            key: _k_block_ring(x, z, *key).element(terms)
            for key, terms in out_blocks.items()
        }
        return KCorrespondence(x, z, blocks, validate=False)

    def external(self, other: "KCorrespondence") -> "KCorrespondence":
        """Kuenneth external product with the same reordering as Chow classes."""
        x, y = self.source, self.target
        z, w = other.source, other.target
        src = x.product(z)
        tgt = y.product(w)
        blocks: dict[tuple[int, int], RingElement] = {}
        for (i, j), f_elt in self.blocks.items():
            for (k, l), g_elt in other.blocks.items():
                si = x.product_index(z, i, k)
                tj = y.product_index(w, j, l)
                ring = _k_block_ring(src, tgt, si, tj)
                nx = len(x.components[i])
                nz = len(z.components[k])
                ny = len(y.components[j])
                f_map = list(range(nx)) + [nx + nz + t for t in range(ny)]
                g_map = [nx + t for t in range(nz)] + [
                    nx + nz + ny + t for t in range(len(w.components[l]))
                ]
                blocks[(si, tj)] = f_elt.remap(ring, f_map) * g_elt.remap(ring, g_map)
        return KCorrespondence(src, tgt, blocks, validate=False)

    def transpose(self) -> "KCorrespondence":
        x, y = self.source, self.target
        blocks: dict[tuple[int, int], RingElement] = {}
        for (i, j), elt in self.blocks.items():
            kx = len(x.components[i])
            ky = len(y.components[j])
            ring = _k_block_ring(y, x, j, i)
            images = [ky + t for t in range(kx)] + list(range(ky))
            blocks[(j, i)] = elt.remap(ring, images)
        return KCorrespondence(y, x, blocks, validate=False)

    def __repr__(self) -> str:
        return (
            f"KCorrespondence({self.source} -> {self.target}, "
            f"{sum(len(e.terms) for e in self.blocks.values())} terms)"
        )


def k_compose(f: KCorrespondence, g: KCorrespondence) -> KCorrespondence:
    """g o f for f: X -> Y and g: Y -> Z."""
    return f.then(g)


# -- bases and vectorization ----------------------------------------------------


def k_space_index(x: CellularVariety, y: CellularVariety):
    out = []
    for i in range(x.ncomponents):
        for j in range(y.ncomponents):
            ring = _k_block_ring(x, y, i, j)
            for exp in ring.monomials():
                out.append(((i, j), exp))
    return out


def k_dim(x: CellularVariety, y: CellularVariety) -> int:
    return len(k_space_index(x, y))


def k_basis(x: CellularVariety, y: CellularVariety) -> list[KCorrespondence]:
    basis = []
    for (i, j), exp in k_space_index(x, y):
        ring = _k_block_ring(x, y, i, j)
        basis.append(KCorrespondence(x, y, {(i, j): ring.monomial(exp)}, validate=False))
    return basis


def k_to_vector(c: KCorrespondence, index=None) -> list[Fraction]:
    if index is None:
        index = k_space_index(c.source, c.target)
    vec = []
    for key, exp in index:
        elt = c.blocks.get(key)
        vec.append(elt.coefficient(exp) if elt is not None else Fraction(0))
    return vec


def k_from_vector(x, y, vector, index=None) -> KCorrespondence:
    if index is None:
        index = k_space_index(x, y)
    terms: dict[tuple[int, int], dict[Exponent, Fraction]] = {}
    for ((key, exp), coeff) in zip(index, vector):
        if coeff:
            terms.setdefault(key, {})[exp] = Fraction(coeff)
    blocks = {key: _k_block_ring(x, y, *key).element(t) for key, t in terms.items()}
    return KCorrespondence(x, y, blocks, validate=False)


# ---------------------------------------------------------------------------
# The diagonal K-class, solved rather than hard-coded
# ---------------------------------------------------------------------------


def solved_identity_k_correspondence(x: CellularVariety) -> KCorrespondence:
    """The two-sided identity of the Tor-composition, found by linear solve.

    Exhaustive over the full monomial End basis, so only sensible for
    small varieties; k_diagonal assembles larger diagonals from solved
    single-factor pieces and keeps this as its consistency oracle.
    """
    unknowns = k_basis(x, x)
    index = k_space_index(x, x)
    rows: list[list[Fraction]] = []
    rhs: list[Fraction] = []
    for f in k_basis(x, x):
        for composite in (lambda b: f.then(b), lambda b: b.then(f)):
            columns = [k_to_vector(composite(b), index) for b in unknowns]
            target = k_to_vector(f, index)
            for row_idx in range(len(index)):
                rows.append([col[row_idx] for col in columns])
                rhs.append(target[row_idx])
    solution = RationalMatrix(rows).solve(rhs)
    if solution is None:
        raise MotiveCalcError(f"no identity K-correspondence exists on {x}")
    return k_from_vector(x, x, solution, index)


@lru_cache(maxsize=None)
def _solved_diagonal_of_proj_space(n: int) -> RingElement:
    """The solved identity K-class of P^n, as a two-variable ring element."""
    from .varieties import proj_space

    corr = solved_identity_k_correspondence(proj_space(n))
    return corr.blocks[(0, 0)]


@lru_cache(maxsize=None)
def _k_diagonal_component(comp: tuple[int, ...]) -> RingElement:
    """Diagonal K-class of one product component: factor diagonals multiplied."""
    ring = _k_ring(comp + comp)
    k = len(comp)
    elt = ring.one()
    for f, n in enumerate(comp):
        piece = _solved_diagonal_of_proj_space(n)
        elt = elt * piece.remap(ring, [f, k + f])
    return elt


@lru_cache(maxsize=None)
def k_diagonal(x: CellularVariety) -> KCorrespondence:
    """The identity K-correspondence of X.

    The irreducible ingredients (diagonals of single projective spaces)
    are solved from the identity law, never hard-coded; products take
    external products of factor diagonals and disjoint unions are block
    diagonal.  The identity law for the assembled class is exercised by
    the tests on multi-factor and multi-component varieties.
    """
    blocks = {
        (i, i): _k_diagonal_component(comp) for i, comp in enumerate(x.components)
    }
    return KCorrespondence(x, x, blocks, validate=False)


# ---------------------------------------------------------------------------
# Chern character and Todd class
# ---------------------------------------------------------------------------


def _expm1_class(ring: QuotientRing, var: int) -> RingElement:
    """exp(h_var) - 1 truncated at the nilpotency bound."""
    h = ring.variable(var)
    out = ring.zero()
    power = ring.one()
    for k in range(1, ring.bounds[var]):
        power = power * h
        out = out + power.scale(Fraction(1, factorial(k)))
    return out


def _ch_element(elt: RingElement, component: tuple[int, ...]) -> RingElement:
    chow_ring = _chow_ring(component)
    images = [_expm1_class(chow_ring, i) for i in range(chow_ring.nvars)]
    return elt.substitute(chow_ring, images)


def chern_character(c: KClass) -> ChowClass:
    """The ring isomorphism u_i -> exp(h_i), i.e. v_i -> exp(h_i) - 1."""
    parts = [
        _ch_element(part, c.variety.components[i]) for i, part in enumerate(c.parts)
    ]
    return ChowClass(c.variety, parts)


@lru_cache(maxsize=None)
def _todd_coefficients(order: int) -> tuple[Fraction, ...]:
    """Coefficients of h/(1 - e^{-h}) through degree `order`.

    Computed as the reciprocal of (1 - e^{-h})/h = sum (-h)^k/(k+1)!.
    """
    denominator = [Fraction((-1) ** k, factorial(k + 1)) for k in range(order + 1)]
    out = [Fraction(1)]
    for n in range(1, order + 1):
        acc = Fraction(0)
        for i in range(1, n + 1):
            acc += denominator[i] * out[n - i]
        out.append(-acc)
    return tuple(out)


@lru_cache(maxsize=None)
def todd_class(x: CellularVariety) -> ChowClass:
    """Td(X): per factor P^n the truncation of (h/(1-e^{-h}))^{n+1}, multiplied out."""
    parts = []
    for comp in x.components:
        ring = _chow_ring(comp)
        elt = ring.one()
        for i, n in enumerate(comp):
            coeffs = _todd_coefficients(n)
            h = ring.variable(i)
            series = ring.zero()
            power = ring.one()
            for d in range(n + 1):
                series = series + power.scale(coeffs[d])
                power = power * h
            elt = elt * series ** (n + 1)
        parts.append(elt)
    return ChowClass(x, parts)


# ---------------------------------------------------------------------------
# The Riemann-Roch transform and its inverse
# ---------------------------------------------------------------------------


def grr_transform(c: KCorrespondence) -> dict[int, Correspondence]:
    """ch(c) * (Todd class of the target pulled back), split by degree.

    Returns the map degree -> Correspondence; absent degrees are zero.
    """
    x, y = c.source, c.target
    graded: dict[int, dict[tuple[int, int], RingElement]] = {}
    for (i, j), elt in c.blocks.items():
        comp = x.components[i] + y.components[j]
        ring = _chow_ring(comp)
        ch_part = _ch_element(elt, comp)
        kx = len(x.components[i])
        todd_elt = _todd_on_block(y, j, ring, kx)
        total = ch_part * todd_elt
        d_i = sum(x.components[i])
        for deg in sorted(total.degrees()):
            piece = total.graded_part(deg)
            graded.setdefault(deg - d_i, {})[(i, j)] = piece
    out = {}
    for r, blocks in graded.items():
        out[r] = Correspondence(x, y, r, blocks)
    return out


def _todd_on_block(y: CellularVariety, j: int, block_ring: QuotientRing, kx: int) -> RingElement:
    """Td(Y_j) injected into the block ring at the target variable positions."""
    todd = todd_class(y).parts[j]
    images = [kx + t for t in range(len(y.components[j]))]
    return todd.remap(block_ring, images)


@lru_cache(maxsize=None)
def grr_matrix(x: CellularVariety, y: CellularVariety) -> RationalMatrix:
    """Matrix of the transform from the K-monomial basis to the graded Chow basis."""
    k_index = k_space_index(x, y)
    chow_index = []
    for r in corr_degree_range(x, y):
        chow_index.extend((r, entry) for entry in corr_space_index(x, y, r))
    columns = []
    for b in k_basis(x, y):
        graded = grr_transform(b)
        col = []
        for r, (key, exp) in chow_index:
            piece = graded.get(r)
            if piece is None:
                col.append(Fraction(0))
                continue
            elt = piece.blocks.get(key)
            col.append(elt.coefficient(exp) if elt is not None else Fraction(0))
        columns.append(col)
    return RationalMatrix.from_columns(columns)


@lru_cache(maxsize=None)
def grr_matrix_inverse(x: CellularVariety, y: CellularVariety) -> RationalMatrix:
    return grr_matrix(x, y).inverse()


def grr_inverse(x: CellularVariety, y: CellularVariety, graded: dict[int, Correspondence]) -> KCorrespondence:
    """The unique K-correspondence whose transform equals the graded family."""
    chow_vec: list[Fraction] = []
    for r in corr_degree_range(x, y):
        piece = graded.get(r)
        if piece is None:
            chow_vec.extend([Fraction(0)] * len(corr_space_index(x, y, r)))
        else:
            chow_vec.extend(corr_to_vector(piece))
    alpha = grr_matrix_inverse(x, y).apply(chow_vec)
    return k_from_vector(x, y, alpha)


# ---------------------------------------------------------------------------
# Action on the K-theory realization
# ---------------------------------------------------------------------------


def k_realization_index(x: CellularVariety):
    out = []
    for i in range(x.ncomponents):
        for exp in x.k_ring(i).monomials():
            out.append((i, exp))
    return out


def k_action_columns(c: KCorrespondence) -> list[dict[int, Fraction]]:
    """Sparse columns of the action of c: K0(X) -> K0(Y).

    The action is alpha -> pushforward to Y of c * (pullback of alpha),
    with the binomial-weighted pushforward over the source factors.
    """
    x, y = c.source, c.target
    src_index = k_realization_index(x)
    tgt_pos = {key: pos for pos, key in enumerate(k_realization_index(y))}
    columns = []
    for (i, a_exp) in src_index:
        dims = x.components[i]
        bounds = tuple(d + 1 for d in dims)
        col: dict[int, Fraction] = {}
        for (ii, j), elt in c.blocks.items():
            if ii != i:
                continue
            kx = len(dims)
            for exp, coeff in elt.terms.items():
                dead = False
                weight = coeff
                for t in range(kx):
                    e = exp[t] + a_exp[t]
                    if e >= bounds[t]:
                        dead = True
                        break
                    weight *= comb(dims[t], e)
                    if weight == 0:
                        dead = True
                        break
                if dead:
                    continue
                row = tgt_pos[(j, exp[kx:])]
                s = col.get(row, Fraction(0)) + weight
                if s == 0:
                    col.pop(row, None)
                else:
                    col[row] = s
        columns.append(col)
    return columns


def k_action_matrix(c: KCorrespondence) -> RationalMatrix:
    cols = k_action_columns(c)
    nrows = len(k_realization_index(c.target))
    return RationalMatrix.from_columns(
        [[col.get(i, Fraction(0)) for i in range(nrows)] for col in cols]
    )
