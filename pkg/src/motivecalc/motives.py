"""Motive categories over the cellular universe and the functors between them.

Four categories are realized, all with Hom spaces that are concrete
finite-dimensional Q-vector spaces:

* Chow motives: triples (X, p, m) with p an exact idempotent degree-0
  correspondence and m an integer twist.  Hom((X,p,m),(Y,q,n)) is the
  cut space q o Corr^{n-m}(X,Y) o p.
* Twistless (Manin-style) motives: pairs (X, p) whose Hom spaces sum the
  correspondence spaces over all degrees.
* The orbit category: same objects as Chow motives, morphisms graded by
  an integer j with the j-piece living in Hom(A, B twisted by j).
  Tate twists become isomorphic here; the isomorphism is the projector
  itself placed in the appropriate grade.
* K-theoretic (non-commutative) motives: pairs (X, p) with p an exact
  idempotent K-correspondence and Hom spaces cut from K0(X x Y)_Q with
  the Tor-composition.

The bridge takes a Chow motive through the orbit category into the
K-theoretic world: forget the twist, then apply the inverse of the
Riemann-Roch transform on every Hom space.  Its correctness is not
assumed anywhere; the checks module and the test suite verify dimension
equality and composition preservation exhaustively on the test universe.

Everything is immutable; Hom-space data is recomputed per call and cached
at module level where profitable (pure functions of hashable arguments).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping, Sequence

from .chow import (
    Correspondence,
    Morphism,
    corr_basis,
    corr_degree_range,
    corr_dim,
    corr_space_index,
    corr_to_vector,
    diagonal_correspondence,
    graph_transpose,
)
from .errors import (
    MotiveCalcError,
    NonIdempotentError,
    UnsupportedDirectSumError,
    VarietyMismatchError,
)
from .ktheory import (
    KCorrespondence,
    grr_inverse,
    grr_transform,
    k_basis,
    k_compose,
    k_diagonal,
    k_space_index,
    k_to_vector,
)
from .linalg import RationalMatrix
from .varieties import CellularVariety, POINT


# ---------------------------------------------------------------------------
# Chow motives
# ---------------------------------------------------------------------------


class ChowMotive:
    """A cellular variety with an idempotent projector and a Tate twist."""

    __slots__ = ("variety", "projector", "twist")

    def __init__(self, variety, projector: Correspondence, twist: int = 0,
                 validate: bool = True):
        if projector.source != variety or projector.target != variety:
            raise VarietyMismatchError("projector must be an endo-correspondence")
        if projector.degree != 0:
            raise MotiveCalcError("projectors have degree 0")
        if validate and projector.then(projector) != projector:
            raise NonIdempotentError(f"projector on {variety} is not idempotent")
        self.variety = variety
        self.projector = projector
        self.twist = int(twist)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, ChowMotive)
            and self.variety == other.variety
            and self.projector == other.projector
            and self.twist == other.twist
        )

    def __hash__(self):
        return hash((self.variety, self.twist, len(self.projector.blocks)))

    def is_zero(self) -> bool:
        return self.projector.is_zero()

    def __repr__(self) -> str:
        return f"ChowMotive({self.variety}, twist {self.twist})"


def motive_of(x: CellularVariety) -> ChowMotive:
    """The motive (X, diagonal, 0) of a cellular variety."""
    return ChowMotive(x, diagonal_correspondence(x), 0, validate=False)


def unit_motive() -> ChowMotive:
    return motive_of(POINT)


def tate_motive(twist: int = 1) -> ChowMotive:
    """Twisted point motives; twist -1 gives the class called L downstream."""
    return ChowMotive(POINT, diagonal_correspondence(POINT), twist, validate=False)


class ChowMorphism:
    """A correspondence cut down by the projectors of its source and target."""

    __slots__ = ("source", "target", "corr")

    def __init__(self, source: ChowMotive, target: ChowMotive, corr: Correspondence,
                 validate: bool = True):
        expected = target.twist - source.twist
        if corr.degree != expected:
            raise MotiveCalcError(
                f"morphism degree must be {expected}, got {corr.degree}"
            )
        if corr.source != source.variety or corr.target != target.variety:
            raise VarietyMismatchError("correspondence does not match the motives")
        if validate:
            cut = source.projector.then(corr).then(target.projector)
            if cut != corr:
                raise MotiveCalcError("class is not compatible with the projectors")
        self.source = source
        self.target = target
        self.corr = corr

    @staticmethod
    def cut(source: ChowMotive, target: ChowMotive, corr: Correspondence) -> "ChowMorphism":
        """Project an arbitrary correspondence into the Hom space."""
        cut = source.projector.then(corr).then(target.projector)
        return ChowMorphism(source, target, cut, validate=False)

    @staticmethod
    def identity(motive: ChowMotive) -> "ChowMorphism":
        return ChowMorphism(motive, motive, motive.projector, validate=False)

    def then(self, g: "ChowMorphism") -> "ChowMorphism":
        if self.target != g.source:
            raise VarietyMismatchError("motive morphisms do not compose")
        return ChowMorphism(self.source, g.target, self.corr.then(g.corr), validate=False)

    def __add__(self, other: "ChowMorphism") -> "ChowMorphism":
        if self.source != other.source or self.target != other.target:
            raise VarietyMismatchError("morphisms must share source and target")
        return ChowMorphism(self.source, self.target, self.corr + other.corr, validate=False)

    def scale(self, scalar) -> "ChowMorphism":
        return ChowMorphism(self.source, self.target, self.corr.scale(scalar), validate=False)

    def is_zero(self) -> bool:
        return self.corr.is_zero()

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, ChowMorphism)
            and self.source == other.source
            and self.target == other.target
            and self.corr == other.corr
        )

    def __repr__(self) -> str:
        return f"ChowMorphism({self.source!r} -> {self.target!r})"


def motive_of_morphism(f: Morphism) -> ChowMorphism:
    """Contravariant image of a library morphism: M(f): M(Y) -> M(X)."""
    return ChowMorphism(
        motive_of(f.target), motive_of(f.source), graph_transpose(f), validate=False
    )


def tensor_motive(a: ChowMotive, b: ChowMotive) -> ChowMotive:
    return ChowMotive(
        a.variety.product(b.variety),
        a.projector.external(b.projector),
        a.twist + b.twist,
        validate=False,
    )


def tensor_morphism(f: ChowMorphism, g: ChowMorphism) -> ChowMorphism:
    return ChowMorphism(
        tensor_motive(f.source, g.source),
        tensor_motive(f.target, g.target),
        f.corr.external(g.corr),
        validate=False,
    )


def tensor_power(a: ChowMotive, n: int) -> ChowMotive:
    if n < 1:
        raise MotiveCalcError("tensor powers need n >= 1")
    out = a
    for _ in range(n - 1):
        out = tensor_motive(out, a)
    return out


def _shift_blocks(corr_blocks, row_shift: int, col_shift: int):
    return {(i + row_shift, j + col_shift): elt for (i, j), elt in corr_blocks.items()}


def direct_sum(a: ChowMotive, b: ChowMotive) -> ChowMotive:
    """Biproduct on the disjoint union; requires equal twists.

    Mixed twists have no biproduct here: pass to the orbit category
    (orbit_of), where all twists of a motive become isomorphic.
    """
    if a.twist != b.twist:
        raise UnsupportedDirectSumError(
            "direct sums need equal twists; in the orbit category twists are "
            "identified, so apply orbit_of first"
        )
    union = a.variety.disjoint_union(b.variety)
    shift = a.variety.ncomponents
    blocks = dict(a.projector.blocks)
    blocks.update(_shift_blocks(b.projector.blocks, shift, shift))
    return ChowMotive(union, Correspondence(union, union, 0, blocks, validate=False),
                      a.twist, validate=False)


def summand_inclusion(a: ChowMotive, b: ChowMotive, which: int) -> ChowMorphism:
    """The biproduct inclusion of a (which=0) or b (which=1) into a (+) b."""
    total = direct_sum(a, b)
    part = a if which == 0 else b
    col_shift = 0 if which == 0 else a.variety.ncomponents
    blocks = _shift_blocks(part.projector.blocks, 0, col_shift)
    corr = Correspondence(part.variety, total.variety, 0, blocks, validate=False)
    return ChowMorphism(part, total, corr, validate=False)


def summand_projection(a: ChowMotive, b: ChowMotive, which: int) -> ChowMorphism:
    """The biproduct projection from a (+) b onto one summand."""
    total = direct_sum(a, b)
    part = a if which == 0 else b
    row_shift = 0 if which == 0 else a.variety.ncomponents
    blocks = _shift_blocks(part.projector.blocks, row_shift, 0)
    corr = Correspondence(total.variety, part.variety, 0, blocks, validate=False)
    return ChowMorphism(total, part, corr, validate=False)


def image_of_idempotent(e: ChowMorphism) -> ChowMotive:
    """The direct summand cut out by an idempotent endomorphism."""
    if e.source != e.target:
        raise MotiveCalcError("idempotents are endomorphisms")
    if e.then(e) != e:
        raise NonIdempotentError("endomorphism is not idempotent")
    return ChowMotive(e.source.variety, e.corr, e.source.twist, validate=False)


# -- Hom spaces ---------------------------------------------------------------


def _chow_cut_data(a: ChowMotive, b: ChowMotive, degree: int):
    index = corr_space_index(a.variety, b.variety, degree)
    columns = []
    cuts = []
    for basis_corr in corr_basis(a.variety, b.variety, degree):
        cut = a.projector.then(basis_corr).then(b.projector)
        cuts.append(cut)
        columns.append(corr_to_vector(cut, index))
    return index, columns, cuts


def chow_hom_dim(a: ChowMotive, b: ChowMotive) -> int:
    degree = b.twist - a.twist
    _, columns, _ = _chow_cut_data(a, b, degree)
    if not columns:
        return 0
    return RationalMatrix.from_columns(columns).rank()


def chow_hom_basis(a: ChowMotive, b: ChowMotive) -> list[ChowMorphism]:
    """A basis of the cut Hom space, as honest motive morphisms."""
    degree = b.twist - a.twist
    _, columns, cuts = _chow_cut_data(a, b, degree)
    picked: list[int] = []
    if columns:
        m = RationalMatrix.from_columns(columns)
        _, pivots = m._rref([[] for _ in range(m.nrows)])
        picked = pivots
    return [ChowMorphism(a, b, cuts[i], validate=False) for i in picked]


# ---------------------------------------------------------------------------
# Twistless motives
# ---------------------------------------------------------------------------


class ManinMotive:
    """A pair (X, p): a Chow motive that has forgotten its twist."""

    __slots__ = ("variety", "projector")

    def __init__(self, variety, projector: Correspondence, validate: bool = True):
        base = ChowMotive(variety, projector, 0, validate=validate)
        self.variety = base.variety
        self.projector = base.projector

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, ManinMotive)
            and self.variety == other.variety
            and self.projector == other.projector
        )

    def __repr__(self) -> str:
        return f"ManinMotive({self.variety})"


def manin_of(x: CellularVariety) -> ManinMotive:
    return ManinMotive(x, diagonal_correspondence(x), validate=False)


def manin_hom_dims(a: ManinMotive, b: ManinMotive) -> dict[int, int]:
    """Dimensions of the degree-graded pieces of the twistless Hom space."""
    am = ChowMotive(a.variety, a.projector, 0, validate=False)
    bm = ChowMotive(b.variety, b.projector, 0, validate=False)
    out = {}
    for r in corr_degree_range(a.variety, b.variety):
        d = chow_hom_dim(
            am, ChowMotive(b.variety, b.projector, r, validate=False)
        )
        if d:
            out[r] = d
    return out


def theta1(a: ManinMotive) -> "OrbitMotive":
    """Twistless motives embed in the orbit category at twist zero.

    Identity on morphisms; fully faithful by construction, essentially
    surjective because twist_isomorphism provides (X,p,0) ~ (X,p,m).
    """
    return OrbitMotive(ChowMotive(a.variety, a.projector, 0, validate=False))


# ---------------------------------------------------------------------------
# The orbit category (Tate twists collapsed)
# ---------------------------------------------------------------------------


class OrbitMotive:
    """Same objects as Chow motives; Hom spaces graded over all twists."""

    __slots__ = ("base",)

    def __init__(self, base: ChowMotive):
        self.base = base

    def __eq__(self, other) -> bool:
        return isinstance(other, OrbitMotive) and self.base == other.base

    def __repr__(self) -> str:
        return f"OrbitMotive({self.base!r})"


def orbit_of(a: ChowMotive) -> OrbitMotive:
    return OrbitMotive(a)


class OrbitMorphism:
    """A finite family j -> correspondence of degree (twist gap + j)."""

    __slots__ = ("source", "target", "parts")

    def __init__(self, source: OrbitMotive, target: OrbitMotive,
                 parts: Mapping[int, Correspondence]):
        gap = target.base.twist - source.base.twist
        clean: dict[int, Correspondence] = {}
        for j, corr in parts.items():
            if corr.is_zero():
                continue
            if corr.degree != gap + j:
                raise MotiveCalcError(
                    f"grade-{j} part must have degree {gap + j}, got {corr.degree}"
                )
            clean[int(j)] = corr
        self.source = source
        self.target = target
        self.parts = clean

    @staticmethod
    def identity(a: OrbitMotive) -> "OrbitMorphism":
        return OrbitMorphism(a, a, {0: a.base.projector})

    @staticmethod
    def from_chow(f: ChowMorphism) -> "OrbitMorphism":
        """The projection functor on morphisms: concentrated in grade 0."""
        j = 0
        return OrbitMorphism(
            OrbitMotive(f.source), OrbitMotive(f.target), {j: f.corr}
        )

    def is_zero(self) -> bool:
        return not self.parts

    def __add__(self, other: "OrbitMorphism") -> "OrbitMorphism":
        if self.source != other.source or self.target != other.target:
            raise VarietyMismatchError("orbit morphisms must share source and target")
        parts = dict(self.parts)
        for j, corr in other.parts.items():
            parts[j] = parts[j] + corr if j in parts else corr
        return OrbitMorphism(self.source, self.target, parts)

    def scale(self, scalar) -> "OrbitMorphism":
        return OrbitMorphism(
            self.source, self.target,
            {j: c.scale(scalar) for j, c in self.parts.items()},
        )

    def then(self, g: "OrbitMorphism") -> "OrbitMorphism":
        """Composition collects grades additively."""
        if self.target != g.source:
            raise VarietyMismatchError("orbit morphisms do not compose")
        acc: dict[int, Correspondence] = {}
        for j, f_part in self.parts.items():
            for k, g_part in g.parts.items():
                comp = f_part.then(g_part)
                if comp.is_zero():
                    continue
                l = j + k
                acc[l] = acc[l] + comp if l in acc else comp
        return OrbitMorphism(self.source, g.target, acc)

    def tensor(self, other: "OrbitMorphism") -> "OrbitMorphism":
        """Grade-additive bilinear tensor; sign-free because cycle classes commute."""
        src = OrbitMotive(tensor_motive(self.source.base, other.source.base))
        tgt = OrbitMotive(tensor_motive(self.target.base, other.target.base))
        acc: dict[int, Correspondence] = {}
        for r, f_part in self.parts.items():
            for s, g_part in other.parts.items():
                piece = f_part.external(g_part)
                if piece.is_zero():
                    continue
                l = r + s
                acc[l] = acc[l] + piece if l in acc else piece
        return OrbitMorphism(src, tgt, acc)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, OrbitMorphism)
            and self.source == other.source
            and self.target == other.target
            and self.parts == other.parts
        )

    def __repr__(self) -> str:
        return f"OrbitMorphism(grades {sorted(self.parts)})"


def orbit_grade_range(a: OrbitMotive, b: OrbitMotive) -> list[int]:
    gap = b.base.twist - a.base.twist
    return [r - gap for r in corr_degree_range(a.base.variety, b.base.variety)]


def orbit_hom_dims(a: OrbitMotive, b: OrbitMotive) -> dict[int, int]:
    """Nonzero graded dimensions of the orbit Hom space."""
    out = {}
    for j in orbit_grade_range(a, b):
        target_j = ChowMotive(
            b.base.variety, b.base.projector, b.base.twist + j, validate=False
        )
        d = chow_hom_dim(a.base, target_j)
        if d:
            out[j] = d
    return out


def orbit_hom_dim(a: OrbitMotive, b: OrbitMotive) -> int:
    return sum(orbit_hom_dims(a, b).values())


def orbit_hom_basis(a: OrbitMotive, b: OrbitMotive) -> list[OrbitMorphism]:
    out = []
    for j in orbit_grade_range(a, b):
        target_j = ChowMotive(
            b.base.variety, b.base.projector, b.base.twist + j, validate=False
        )
        for f in chow_hom_basis(a.base, target_j):
            out.append(OrbitMorphism(a, b, {j: f.corr}))
    return out


def twist_isomorphism(a: ChowMotive, new_twist: int) -> tuple[OrbitMorphism, OrbitMorphism]:
    """The pair of mutually inverse orbit morphisms (X,p,m) <-> (X,p,m')."""
    source = OrbitMotive(a)
    target = OrbitMotive(
        ChowMotive(a.variety, a.projector, new_twist, validate=False)
    )
    forward = OrbitMorphism(source, target, {a.twist - new_twist: a.projector})
    backward = OrbitMorphism(target, source, {new_twist - a.twist: a.projector})
    return forward, backward


# ---------------------------------------------------------------------------
# K-theoretic (non-commutative) motives
# ---------------------------------------------------------------------------


class NCMotive:
    """A pair (X, p) with p an idempotent K-correspondence."""

    __slots__ = ("variety", "projector")

    def __init__(self, variety, projector: KCorrespondence, validate: bool = True):
        if projector.source != variety or projector.target != variety:
            raise VarietyMismatchError("projector must be an endo-K-correspondence")
        if validate and projector.then(projector) != projector:
            raise NonIdempotentError(f"K-projector on {variety} is not idempotent")
        self.variety = variety
        self.projector = projector

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, NCMotive)
            and self.variety == other.variety
            and self.projector == other.projector
        )

    def is_zero(self) -> bool:
        return self.projector.is_zero()

    def __repr__(self) -> str:
        return f"NCMotive({self.variety})"


def nc_of(x: CellularVariety) -> NCMotive:
    return NCMotive(x, k_diagonal(x), validate=False)


def nc_unit() -> NCMotive:
    return nc_of(POINT)


class NCMorphism:
    """A K-correspondence cut down by the projectors of its endpoints."""

    __slots__ = ("source", "target", "kcorr")

    def __init__(self, source: NCMotive, target: NCMotive, kcorr: KCorrespondence,
                 validate: bool = True):
        if kcorr.source != source.variety or kcorr.target != target.variety:
            raise VarietyMismatchError("K-correspondence does not match the motives")
        if validate:
            cut = source.projector.then(kcorr).then(target.projector)
            if cut != kcorr:
                raise MotiveCalcError("class is not compatible with the K-projectors")
        self.source = source
        self.target = target
        self.kcorr = kcorr

    @staticmethod
    def cut(source: NCMotive, target: NCMotive, kcorr: KCorrespondence) -> "NCMorphism":
        cut = source.projector.then(kcorr).then(target.projector)
        return NCMorphism(source, target, cut, validate=False)

    @staticmethod
    def identity(motive: NCMotive) -> "NCMorphism":
        return NCMorphism(motive, motive, motive.projector, validate=False)

    def then(self, g: "NCMorphism") -> "NCMorphism":
        if self.target != g.source:
            raise VarietyMismatchError("NC morphisms do not compose")
        return NCMorphism(self.source, g.target, self.kcorr.then(g.kcorr), validate=False)

    def __add__(self, other: "NCMorphism") -> "NCMorphism":
        if self.source != other.source or self.target != other.target:
            raise VarietyMismatchError("morphisms must share source and target")
        return NCMorphism(self.source, self.target, self.kcorr + other.kcorr, validate=False)

    def scale(self, scalar) -> "NCMorphism":
        return NCMorphism(self.source, self.target, self.kcorr.scale(scalar), validate=False)

    def tensor(self, other: "NCMorphism") -> "NCMorphism":
        return NCMorphism(
            nc_tensor(self.source, other.source),
            nc_tensor(self.target, other.target),
            self.kcorr.external(other.kcorr),
            validate=False,
        )

    def is_zero(self) -> bool:
        return self.kcorr.is_zero()

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, NCMorphism)
            and self.source == other.source
            and self.target == other.target
            and self.kcorr == other.kcorr
        )

    def __repr__(self) -> str:
        return f"NCMorphism({self.source!r} -> {self.target!r})"


def nc_tensor(a: NCMotive, b: NCMotive) -> NCMotive:
    return NCMotive(
        a.variety.product(b.variety),
        a.projector.external(b.projector),
        validate=False,
    )


def nc_tensor_power(a: NCMotive, n: int) -> NCMotive:
    if n < 1:
        raise MotiveCalcError("tensor powers need n >= 1")
    out = a
    for _ in range(n - 1):
        out = nc_tensor(out, a)
    return out


def nc_direct_sum(a: NCMotive, b: NCMotive) -> NCMotive:
    union = a.variety.disjoint_union(b.variety)
    shift = a.variety.ncomponents
    blocks = dict(a.projector.blocks)
    blocks.update(_shift_blocks(b.projector.blocks, shift, shift))
    return NCMotive(union, KCorrespondence(union, union, blocks, validate=False),
                    validate=False)


def nc_image_of_idempotent(e: NCMorphism) -> NCMotive:
    if e.source != e.target:
        raise MotiveCalcError("idempotents are endomorphisms")
    if e.then(e) != e:
        raise NonIdempotentError("endomorphism is not idempotent")
    return NCMotive(e.source.variety, e.kcorr, validate=False)


def _nc_cut_data(a: NCMotive, b: NCMotive):
    index = k_space_index(a.variety, b.variety)
    columns = []
    cuts = []
    for basis_corr in k_basis(a.variety, b.variety):
        cut = a.projector.then(basis_corr).then(b.projector)
        cuts.append(cut)
        columns.append(k_to_vector(cut, index))
    return index, columns, cuts


def nc_hom_dim(a: NCMotive, b: NCMotive) -> int:
    _, columns, _ = _nc_cut_data(a, b)
    if not columns:
        return 0
    return RationalMatrix.from_columns(columns).rank()


def nc_hom_basis(a: NCMotive, b: NCMotive) -> list[NCMorphism]:
    _, columns, cuts = _nc_cut_data(a, b)
    picked: list[int] = []
    if columns:
        m = RationalMatrix.from_columns(columns)
        _, pivots = m._rref([[] for _ in range(m.nrows)])
        picked = pivots
    return [NCMorphism(a, b, cuts[i], validate=False) for i in picked]


# ---------------------------------------------------------------------------
# The bridge: orbit category -> K-theoretic motives
# ---------------------------------------------------------------------------


def theta2_forward(kc: KCorrespondence, source: OrbitMotive, target: OrbitMotive) -> OrbitMorphism:
    """The Riemann-Roch transform packaged as an orbit morphism."""
    graded = grr_transform(kc)
    gap = target.base.twist - source.base.twist
    return OrbitMorphism(source, target, {r - gap: c for r, c in graded.items()})


def theta2_motive(n: NCMotive) -> ManinMotive:
    """Forward image of a K-motive whose transform is concentrated in degree 0."""
    graded = grr_transform(n.projector)
    if set(graded) - {0}:
        raise MotiveCalcError(
            "the transform of this K-projector is not homogeneous of degree 0; "
            "only the inverse direction handles general projectors"
        )
    piece = graded.get(0, Correspondence.zero(n.variety, n.variety, 0))
    return ManinMotive(n.variety, piece, validate=False)


def bridge_motive(a: ChowMotive) -> NCMotive:
    """R on objects: forget the twist, pull the projector through the transform."""
    kc = grr_inverse(a.variety, a.variety, {0: a.projector})
    return NCMotive(a.variety, kc)


def bridge_morphism(f: OrbitMorphism) -> NCMorphism:
    """R on morphisms: sum the graded family and invert the transform."""
    a, b = f.source.base, f.target.base
    gap = b.twist - a.twist
    graded = {gap + j: corr for j, corr in f.parts.items()}
    kc = grr_inverse(a.variety, b.variety, graded)
    return NCMorphism(bridge_motive(a), bridge_motive(b), kc, validate=False)


def chow_to_nc(a: ChowMotive) -> NCMotive:
    """The composite functor on objects (twist collapse then bridge)."""
    return bridge_motive(a)
