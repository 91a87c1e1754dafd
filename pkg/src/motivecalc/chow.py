"""Chow classes, the morphism library, and the correspondence calculus.

Conventions
-----------
A class on a variety holds one quotient-ring element per component; the
ring of a component P^{n1} x ... x P^{nk} is Q[h1..hk]/(h^{n+1}).

A correspondence from X to Y of degree r is stored as a sparse block map
(i, j) -> element of the Chow ring of X_i x Y_j, each block homogeneous
of total degree dim(X_i) + r.  Variables of a block are ordered source
factors first, then target factors.

Composition of f: X -> Y with g: Y -> Z pulls both back to X x Y x Z,
multiplies, and pushes forward along the projection to X x Z (the
projection that forgets the middle).  Pushing forward to X x Z means
extracting the coefficient of the top monomial in the Y variables, so the
implementation indexes g's terms by their Y-exponents and looks up the
complement of each f term; this keeps composition linear in the number of
stored terms rather than quadratic.

Pushforwards along factor projections take the coefficient of the top
power of every dropped variable; pullbacks are variable remappings.  Both
are ring-level operations from quotient.RingElement.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from .errors import (
    MotiveCalcError,
    UnsupportedMorphismError,
    VarietyMismatchError,
)
from .linalg import RationalMatrix
from .quotient import Exponent, QuotientRing, RingElement
from .varieties import CellularVariety, POINT, _chow_ring


# ---------------------------------------------------------------------------
# Chow classes
# ---------------------------------------------------------------------------


class ChowClass:
    """An element of the rational Chow ring, one ring element per component."""

    __slots__ = ("variety", "parts")

    def __init__(self, variety: CellularVariety, parts: Sequence[RingElement]):
        parts = tuple(parts)
        if len(parts) != variety.ncomponents:
            raise VarietyMismatchError("one ring element per component required")
        for i, part in enumerate(parts):
            if part.ring != variety.chow_ring(i):
                raise VarietyMismatchError(
                    f"component {i} of {variety} expects ring {variety.chow_ring(i)!r}"
                )
        self.variety = variety
        self.parts = parts

    @staticmethod
    def one(variety: CellularVariety) -> "ChowClass":
        return ChowClass(variety, [variety.chow_ring(i).one() for i in range(variety.ncomponents)])

    @staticmethod
    def zero(variety: CellularVariety) -> "ChowClass":
        return ChowClass(variety, [variety.chow_ring(i).zero() for i in range(variety.ncomponents)])

    def _check(self, other: "ChowClass") -> None:
        if self.variety != other.variety:
            raise VarietyMismatchError("classes live on different varieties")

    def __add__(self, other: "ChowClass") -> "ChowClass":
        self._check(other)
        return ChowClass(self.variety, [a + b for a, b in zip(self.parts, other.parts)])

    def __sub__(self, other: "ChowClass") -> "ChowClass":
        self._check(other)
        return ChowClass(self.variety, [a - b for a, b in zip(self.parts, other.parts)])

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        self._check(other)
        return ChowClass(self.variety, [a * b for a, b in zip(self.parts, other.parts)])

    __rmul__ = __mul__

    def scale(self, scalar) -> "ChowClass":
        return ChowClass(self.variety, [p.scale(scalar) for p in self.parts])

    def graded_part(self, d: int) -> "ChowClass":
        return ChowClass(self.variety, [p.graded_part(d) for p in self.parts])

    def is_zero(self) -> bool:
        return all(p.is_zero() for p in self.parts)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, ChowClass)
            and self.variety == other.variety
            and self.parts == other.parts
        )

    def __repr__(self) -> str:
        if self.variety.ncomponents == 1:
            return f"ChowClass({self.parts[0]!r} on {self.variety})"
        inner = "; ".join(repr(p) for p in self.parts)
        return f"ChowClass({inner} on {self.variety})"


def hyperplane(variety: CellularVariety, factor: int = 0, component: int = 0) -> ChowClass:
    """The hyperplane class of one projective-space factor."""
    parts = [variety.chow_ring(i).zero() for i in range(variety.ncomponents)]
    parts[component] = variety.chow_ring(component).variable(factor)
    return ChowClass(variety, parts)


def integral(c: ChowClass) -> Fraction:
    """Pushforward to the point: sum of top-degree coefficients over components."""
    total = Fraction(0)
    for i, part in enumerate(c.parts):
        top = tuple(d for d in c.variety.components[i])
        total += part.coefficient(top)
    return total


# ---------------------------------------------------------------------------
# The closed morphism library
# ---------------------------------------------------------------------------


class Morphism:
    """A morphism between single-component varieties from the closed library.

    The supported maps are exactly those whose pullback sends each
    hyperplane class of the target to a hyperplane class of the source or
    to zero: identities, factor projections, diagonals, structure maps to
    the point, and linear point inclusions.  images[j] names the source
    factor whose hyperplane class pulls back from target factor j (None
    means the pullback of that hyperplane class is zero, as for a point
    inclusion).
    """

    __slots__ = ("source", "target", "images", "label")

    def __init__(self, source: CellularVariety, target: CellularVariety, images, label=""):
        if not (source.is_single_component() and target.is_single_component()):
            raise UnsupportedMorphismError(
                "the morphism library only covers single-component varieties"
            )
        images = tuple(images)
        if len(images) != len(target.components[0]):
            raise UnsupportedMorphismError("one image per target factor required")
        k = len(source.components[0])
        for i in images:
            if i is not None and not (0 <= i < k):
                raise UnsupportedMorphismError(f"factor index {i} out of range")
        for j, i in enumerate(images):
            if i is not None and source.components[0][i] != target.components[0][j]:
                raise UnsupportedMorphismError(
                    "matched factors must be projective spaces of equal dimension"
                )
        self.source = source
        self.target = target
        self.images = images
        self.label = label or "morphism"

    @staticmethod
    def identity(x: CellularVariety) -> "Morphism":
        k = len(x.components[0])
        return Morphism(x, x, range(k), f"id_{x}")

    @staticmethod
    def projection(source: CellularVariety, kept: Sequence[int]) -> "Morphism":
        dims = source.components[0]
        target = CellularVariety([tuple(dims[i] for i in kept)])
        return Morphism(source, target, kept, f"proj{tuple(kept)}")

    @staticmethod
    def diagonal(x: CellularVariety) -> "Morphism":
        k = len(x.components[0])
        return Morphism(x, x.product(x), list(range(k)) * 2, f"diag_{x}")

    @staticmethod
    def structure_map(x: CellularVariety) -> "Morphism":
        return Morphism(x, POINT, (), f"{x} -> pt")

    @staticmethod
    def point_inclusion(target: CellularVariety) -> "Morphism":
        k = len(target.components[0])
        return Morphism(POINT, target, (None,) * k, f"pt -> {target}")

    def then(self, g: "Morphism") -> "Morphism":
        """The composite g o self (apply self first)."""
        if self.target != g.source:
            raise VarietyMismatchError("morphisms do not compose")
        images = tuple(
            None if j is None else self.images[j] for j in g.images
        )
        return Morphism(self.source, g.target, images, f"{g.label} o {self.label}")

    def is_projection(self) -> bool:
        seen = [i for i in self.images if i is not None]
        return len(seen) == len(self.images) and len(set(seen)) == len(seen)

    def __repr__(self) -> str:
        return f"Morphism({self.label}: {self.source} -> {self.target})"


def chow_pullback(f: Morphism, c: ChowClass) -> ChowClass:
    """f^*: classes on the target of f become classes on its source."""
    if c.variety != f.target:
        raise VarietyMismatchError("class does not live on the morphism target")
    src_ring = f.source.chow_ring(0)
    return ChowClass(f.source, [c.parts[0].remap(src_ring, f.images)])


def chow_pushforward(f: Morphism, c: ChowClass) -> ChowClass:
    """f_*: only factor projections are proper pushforwards in the library."""
    if not f.is_projection():
        raise UnsupportedMorphismError("pushforward requires a factor projection")
    if c.variety != f.source:
        raise VarietyMismatchError("class does not live on the morphism source")
    dims = f.source.components[0]
    kept = f.images
    dropped = [i for i in range(len(dims)) if i not in kept]
    tgt_ring = f.target.chow_ring(0)
    out: dict[Exponent, Fraction] = {}
    for exp, coeff in c.parts[0].terms.items():
        if any(exp[i] != dims[i] for i in dropped):
            continue
        key = tuple(exp[i] for i in kept)
        out[key] = out.get(key, Fraction(0)) + coeff
    return ChowClass(f.target, [tgt_ring.element(out)])


# ---------------------------------------------------------------------------
# Correspondences
# ---------------------------------------------------------------------------


def _block_ring(x: CellularVariety, y: CellularVariety, i: int, j: int) -> QuotientRing:
    return _chow_ring(x.components[i] + y.components[j])


class Correspondence:
    """A degree-graded cycle class on X x Y, the morphisms of Chow motives."""

    __slots__ = ("source", "target", "degree", "blocks")

    def __init__(self, source, target, degree, blocks, validate: bool = True):
        self.source = source
        self.target = target
        self.degree = int(degree)
        clean: dict[tuple[int, int], RingElement] = {}
        for (i, j), elt in blocks.items():
            if elt.is_zero():
                continue
            if validate:
                if elt.ring != _block_ring(source, target, i, j):
                    raise VarietyMismatchError(
                        f"block ({i},{j}) lives in the wrong ring for {source} x {target}"
                    )
                if not elt.is_homogeneous(source.dim(i) + self.degree):
                    raise MotiveCalcError(
                        f"block ({i},{j}) must be homogeneous of degree "
                        f"{source.dim(i) + self.degree}"
                    )
            clean[(i, j)] = elt
        self.blocks = clean

    @staticmethod
    def zero(source, target, degree=0) -> "Correspondence":
        return Correspondence(source, target, degree, {}, validate=False)

    def is_zero(self) -> bool:
        return not self.blocks

    def _check_linear(self, other: "Correspondence") -> None:
        if (
            self.source != other.source
            or self.target != other.target
            or self.degree != other.degree
        ):
            raise VarietyMismatchError(
                "correspondences must share source, target and degree to be added"
            )

    def __add__(self, other: "Correspondence") -> "Correspondence":
        self._check_linear(other)
        out = dict(self.blocks)
        for key, elt in other.blocks.items():
            out[key] = out[key] + elt if key in out else elt
        return Correspondence(self.source, self.target, self.degree, out, validate=False)

    def __sub__(self, other: "Correspondence") -> "Correspondence":
        return self + other.scale(-1)

    def scale(self, scalar) -> "Correspondence":
        return Correspondence(
            self.source,
            self.target,
            self.degree,
            {k: e.scale(scalar) for k, e in self.blocks.items()},
            validate=False,
        )

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Correspondence)
            and self.source == other.source
            and self.target == other.target
            and self.degree == other.degree
            and self.blocks == other.blocks
        )

    def then(self, g: "Correspondence") -> "Correspondence":
        """The composite g o self: apply self (X -> Y) first, then g (Y -> Z)."""
        if self.target != g.source:
            raise VarietyMismatchError(
                f"cannot compose: middle varieties {self.target} and {g.source} differ"
            )
        x, y, z = self.source, self.target, g.target
        out_blocks: dict[tuple[int, int], dict[Exponent, Fraction]] = {}
        # Index g's terms per block by their Y-exponent part.
        g_index: dict[tuple[int, int], dict[Exponent, list]] = {}
        for (j, k), elt in g.blocks.items():
            ky = len(y.components[j])
            idx: dict[Exponent, list] = {}
            for exp, coeff in elt.terms.items():
                idx.setdefault(exp[:ky], []).append((exp[ky:], coeff))
            g_index[(j, k)] = idx
        for (i, j), f_elt in self.blocks.items():
            kx = len(x.components[i])
            top = y.components[j]
            for (jj, k), idx in g_index.items():
                if jj != j:
                    continue
                acc = out_blocks.setdefault((i, k), {})
                for exp, cf in f_elt.terms.items():
                    xpart, ypart = exp[:kx], exp[kx:]
                    complement = tuple(t - e for t, e in zip(top, ypart))
                    for zpart, cg in idx.get(complement, ()):
                        key = xpart + zpart
                        s = acc.get(key, Fraction(0)) + cf * cg
                        if s == 0:
                            acc.pop(key, None)
                        else:
                            acc[key] = s
        blocks = {
            key: _block_ring(x, z, *key).element(terms)
            for key, terms in out_blocks.items()
        }
        return Correspondence(x, z, self.degree + g.degree, blocks)

    def transpose(self) -> "Correspondence":
        """Swap the two factor groups; degree shifts by dim(source) - dim(target)."""
        x, y = self.source, self.target
        new_degree = None
        blocks: dict[tuple[int, int], RingElement] = {}
        for (i, j), elt in self.blocks.items():
            kx = len(x.components[i])
            ring = _block_ring(y, x, j, i)
            ky = len(y.components[j])
            # Source vars move after target vars.
            images = [ky + t for t in range(kx)] + list(range(ky))
            blocks[(j, i)] = elt.remap(ring, images)
            r = x.dim(i) + self.degree - y.dim(j)
            if new_degree is None:
                new_degree = r
            elif new_degree != r:
                raise MotiveCalcError(
                    "transpose is only defined when all blocks shift degree equally"
                )
        if new_degree is None:
            new_degree = self.degree + x.dim(0) - y.dim(0)
        return Correspondence(y, x, new_degree, blocks)

    def external(self, other: "Correspondence") -> "Correspondence":
        """Kuenneth external product (X x Z) -> (Y x W) with reordered factors."""
        x, y = self.source, self.target
        z, w = other.source, other.target
        src = x.product(z)
        tgt = y.product(w)
        blocks: dict[tuple[int, int], RingElement] = {}
        for (i, j), f_elt in self.blocks.items():
            for (k, l), g_elt in other.blocks.items():
                si = x.product_index(z, i, k)
                tj = y.product_index(w, j, l)
                ring = _block_ring(src, tgt, si, tj)
                nx = len(x.components[i])
                nz = len(z.components[k])
                ny = len(y.components[j])
                f_map = list(range(nx)) + [nx + nz + t for t in range(ny)]
                g_map = [nx + t for t in range(nz)] + [
                    nx + nz + ny + t for t in range(len(w.components[l]))
                ]
                blocks[(si, tj)] = f_elt.remap(ring, f_map) * g_elt.remap(ring, g_map)
        return Correspondence(src, tgt, self.degree + other.degree, blocks)

    def __repr__(self) -> str:
        return (
            f"Correspondence({self.source} -> {self.target}, degree {self.degree}, "
            f"{sum(len(e.terms) for e in self.blocks.values())} terms)"
        )


def compose(f: Correspondence, g: Correspondence) -> Correspondence:
    """g o f for f: X -> Y and g: Y -> Z."""
    return f.then(g)


# ---------------------------------------------------------------------------
# Diagonals and graphs
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def diagonal_correspondence(x: CellularVariety) -> Correspondence:
    """Closed-form Kuenneth diagonal: the identity of every composition law."""
    blocks = {}
    for i, comp in enumerate(x.components):
        ring = _block_ring(x, x, i, i)
        k = len(comp)
        elt = ring.one()
        for f, n in enumerate(comp):
            factor_sum = ring.zero()
            for a in range(n + 1):
                exp = [0] * (2 * k)
                exp[f] = a
                exp[k + f] = n - a
                factor_sum = factor_sum + ring.monomial(tuple(exp))
            elt = elt * factor_sum
        blocks[(i, i)] = elt
    return Correspondence(x, x, 0, blocks)


def graph_transpose(f: Morphism) -> Correspondence:
    """The class of the transposed graph of a library morphism.

    For f: X -> Y this is a degree-0 correspondence from Y to X, computed
    as the pullback of the diagonal of Y along f x id_Y, then transposed.
    """
    x, y = f.source, f.target
    kx = len(x.components[0])
    ky = len(y.components[0])
    delta = diagonal_correspondence(y).blocks[(0, 0)]
    # Remap the diagonal on Y x Y to X x Y: first copy through f, second as-is.
    ring_xy = _block_ring(x, y, 0, 0)
    images = [f.images[j] for j in range(ky)] + [kx + j for j in range(ky)]
    graph = delta.remap(ring_xy, images)
    as_corr = Correspondence(x, y, y.dim(0) - x.dim(0), {(0, 0): graph})
    return as_corr.transpose()


# ---------------------------------------------------------------------------
# Hom-space bases and vectorization
# ---------------------------------------------------------------------------


def corr_space_index(x: CellularVariety, y: CellularVariety, r: int):
    """Ordered list of (block, exponent) spanning Corr^r(X, Y)."""
    out = []
    for i in range(x.ncomponents):
        d = x.dim(i) + r
        for j in range(y.ncomponents):
            ring = _block_ring(x, y, i, j)
            for exp in ring.monomials():
                if sum(exp) == d:
                    out.append(((i, j), exp))
    return out


def corr_dim(x: CellularVariety, y: CellularVariety, r: int) -> int:
    return len(corr_space_index(x, y, r))


def corr_degree_range(x: CellularVariety, y: CellularVariety) -> list[int]:
    lo = -max(x.dims())
    hi = max(y.dims())
    return [r for r in range(lo, hi + 1) if corr_dim(x, y, r)]


def corr_basis(x: CellularVariety, y: CellularVariety, r: int) -> list[Correspondence]:
    basis = []
    for (i, j), exp in corr_space_index(x, y, r):
        ring = _block_ring(x, y, i, j)
        basis.append(
            Correspondence(x, y, r, {(i, j): ring.monomial(exp)}, validate=False)
        )
    return basis


def corr_to_vector(c: Correspondence, index=None) -> list[Fraction]:
    if index is None:
        index = corr_space_index(c.source, c.target, c.degree)
    vec = []
    for key, exp in index:
        elt = c.blocks.get(key)
        vec.append(elt.coefficient(exp) if elt is not None else Fraction(0))
    return vec


def corr_from_vector(x, y, r, vector, index=None) -> Correspondence:
    if index is None:
        index = corr_space_index(x, y, r)
    terms: dict[tuple[int, int], dict[Exponent, Fraction]] = {}
    for ((key, exp), coeff) in zip(index, vector):
        if coeff:
            terms.setdefault(key, {})[exp] = Fraction(coeff)
    blocks = {key: _block_ring(x, y, *key).element(t) for key, t in terms.items()}
    return Correspondence(x, y, r, blocks, validate=False)


# ---------------------------------------------------------------------------
# Identity-law oracle
# ---------------------------------------------------------------------------


def solved_identity_correspondence(x: CellularVariety) -> Correspondence:
    """Recompute the diagonal by solving the two-sided identity law.

    Independent of diagonal_correspondence: sets up the linear system
    'd o f = f and f o d = f for every basis correspondence f' over the
    monomial basis of Corr^0(X, X) and solves it exactly.
    """
    unknowns = corr_basis(x, x, 0)
    rows: list[list[Fraction]] = []
    rhs: list[Fraction] = []
    for r in corr_degree_range(x, x):
        index = corr_space_index(x, x, r)
        for f in corr_basis(x, x, r):
            for composite in (lambda b: f.then(b), lambda b: b.then(f)):
                columns = [corr_to_vector(composite(b), index) for b in unknowns]
                target = corr_to_vector(f, index)
                for row_idx in range(len(index)):
                    rows.append([col[row_idx] for col in columns])
                    rhs.append(target[row_idx])
    solution = RationalMatrix(rows).solve(rhs)
    if solution is None:
        raise MotiveCalcError(f"no identity correspondence exists on {x}")
    return corr_from_vector(x, x, 0, solution)


# ---------------------------------------------------------------------------
# Action on the Chow realization
# ---------------------------------------------------------------------------


def chow_realization_index(x: CellularVariety):
    """Basis of the total Chow ring: (component, exponent), graded order."""
    out = []
    for i in range(x.ncomponents):
        for exp in x.chow_ring(i).monomials():
            out.append((i, exp))
    out.sort(key=lambda t: (sum(t[1]), t[0], t[1]))
    return out


def chow_action_columns(c: Correspondence) -> list[dict[int, Fraction]]:
    """Sparse columns of the action of c on total Chow groups.

    Column order follows chow_realization_index(source); row indices refer
    to chow_realization_index(target).  The action sends a cycle class a
    to the pushforward to Y of c * (pullback of a to X x Y).
    """
    x, y = c.source, c.target
    src_index = chow_realization_index(x)
    tgt_pos = {key: pos for pos, key in enumerate(chow_realization_index(y))}
    # Per block, group terms by their X-exponent part.
    block_index: dict[tuple[int, int], dict[Exponent, list]] = {}
    for (i, j), elt in c.blocks.items():
        kx = len(x.components[i])
        idx: dict[Exponent, list] = {}
        for exp, coeff in elt.terms.items():
            idx.setdefault(exp[:kx], []).append((exp[kx:], coeff))
        block_index[(i, j)] = idx
    columns = []
    for (i, a_exp) in src_index:
        top = x.components[i]
        complement = tuple(t - e for t, e in zip(top, a_exp))
        col: dict[int, Fraction] = {}
        for (ii, j), idx in block_index.items():
            if ii != i:
                continue
            for ypart, coeff in idx.get(complement, ()):
                row = tgt_pos[(j, ypart)]
                s = col.get(row, Fraction(0)) + coeff
                if s == 0:
                    col.pop(row, None)
                else:
                    col[row] = s
        columns.append(col)
    return columns


def chow_action_matrix(c: Correspondence) -> RationalMatrix:
    cols = chow_action_columns(c)
    nrows = len(chow_realization_index(c.target))
    return RationalMatrix.from_columns(
        [[col.get(i, Fraction(0)) for i in range(nrows)] for col in cols]
    )


def chow_graded_ranks(c: Correspondence) -> dict[int, int]:
    """Ranks of a degree-0 endo-correspondence on each graded Chow piece."""
    if c.source != c.target or c.degree != 0:
        raise MotiveCalcError("graded ranks require a degree-0 endo-correspondence")
    index = chow_realization_index(c.source)
    columns = chow_action_columns(c)
    by_degree: dict[int, list[int]] = {}
    for pos, (i, exp) in enumerate(index):
        by_degree.setdefault(sum(exp), []).append(pos)
    ranks = {}
    for d, positions in by_degree.items():
        sub = [[Fraction(0)] * len(positions) for _ in positions]
        pos_map = {p: t for t, p in enumerate(positions)}
        for col_t, p in enumerate(positions):
            for row, val in columns[p].items():
                # Degree-0 correspondences preserve the grading.
                sub[pos_map[row]][col_t] = val
        ranks[d] = RationalMatrix(sub).rank()
    return ranks
