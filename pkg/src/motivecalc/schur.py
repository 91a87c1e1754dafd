"""Schur functors on motives: tensor powers, symmetric-group actions, cuts.

A permutation acts on the n-th tensor power of a motive by the
correspondence that pairs source slot a with target slot sigma(a) through
a copy of the diagonal.  No signs appear anywhere: algebraic cycle
classes commute, so the symmetry constraint is the plain factor swap.

The Schur cut for a partition lam uses the central idempotent z_lam of
the group algebra: the summand it cuts from N^(x)n is the lam-isotypic
part, which vanishes exactly when the classical Schur functor does.  Its
vanishing is decided by an exact zero test on the idempotent's
correspondence class; independent confirmation comes from the rank of
its action on the realization (total Chow groups on the Chow side,
K-theory on the other), which the acceptance suite compares against
closed-form binomial counts.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product as _cartesian

from .chow import (
    Correspondence,
    chow_action_columns,
    chow_graded_ranks,
    chow_realization_index,
    diagonal_correspondence,
)
from .errors import MotiveCalcError
from .ktheory import (
    KCorrespondence,
    k_action_columns,
    k_diagonal,
    k_realization_index,
)
from .linalg import rank_of_sparse_rows
from .motives import (
    ChowMorphism,
    ChowMotive,
    NCMorphism,
    NCMotive,
    image_of_idempotent,
    nc_image_of_idempotent,
    nc_tensor_power,
    tensor_power,
)
from .quotient import RingElement
from .symmetric import (
    GroupAlgebraElement,
    Partition,
    Perm,
    central_idempotent,
    inverse_perm,
    partitions_of,
    sign_partition,
    trivial_partition,
)
from .varieties import CellularVariety


# ---------------------------------------------------------------------------
# Permutation correspondences on powers of a variety
# ---------------------------------------------------------------------------


def _power_variety(x: CellularVariety, n: int) -> CellularVariety:
    out = x
    for _ in range(n - 1):
        out = out.product(x)
    return out


def _mixed_radix(indices: tuple[int, ...], base: int) -> int:
    out = 0
    for i in indices:
        out = out * base + i
    return out


def _slot_offsets(x: CellularVariety, comp_tuple: tuple[int, ...]) -> list[int]:
    offsets = [0]
    for c in comp_tuple:
        offsets.append(offsets[-1] + len(x.components[c]))
    return offsets


def _permutation_blocks(x, n, sigma, diag_blocks, ring_of):
    """Shared block construction for Chow and K permutation correspondences."""
    sigma_inv = inverse_perm(sigma)
    ncomp = x.ncomponents
    blocks = {}
    for t in _cartesian(range(ncomp), repeat=n):
        u = tuple(t[sigma_inv[b]] for b in range(n))
        src_idx = _mixed_radix(t, ncomp)
        tgt_idx = _mixed_radix(u, ncomp)
        src_off = _slot_offsets(x, t)
        tgt_off = _slot_offsets(x, u)
        total_src = src_off[-1]
        ring = ring_of(src_idx, tgt_idx)
        elt = ring.one()
        for a in range(n):
            piece = diag_blocks[t[a]]
            k = len(x.components[t[a]])
            images = [src_off[a] + i for i in range(k)] + [
                total_src + tgt_off[sigma[a]] + i for i in range(k)
            ]
            elt = elt * piece.remap(ring, images)
        blocks[(src_idx, tgt_idx)] = elt
    return blocks


def permutation_correspondence(x: CellularVariety, sigma: Perm) -> Correspondence:
    """The factor-permuting correspondence on X^n for a permutation of n slots."""
    n = len(sigma)
    power = _power_variety(x, n)
    diag = diagonal_correspondence(x)
    diag_blocks = {i: diag.blocks[(i, i)] for i in range(x.ncomponents)}
    blocks = _permutation_blocks(
        x, n, sigma, diag_blocks, lambda s, t: _chow_block_ring(power, s, t)
    )
    return Correspondence(power, power, 0, blocks, validate=False)


def _chow_block_ring(power: CellularVariety, s: int, t: int):
    from .varieties import _chow_ring

    return _chow_ring(power.components[s] + power.components[t])


def _k_block_ring_of(power: CellularVariety, s: int, t: int):
    from .varieties import _k_ring

    return _k_ring(power.components[s] + power.components[t])


def k_permutation_correspondence(x: CellularVariety, sigma: Perm) -> KCorrespondence:
    n = len(sigma)
    power = _power_variety(x, n)
    diag = k_diagonal(x)
    diag_blocks = {i: diag.blocks[(i, i)] for i in range(x.ncomponents)}
    blocks = _permutation_blocks(
        x, n, sigma, diag_blocks, lambda s, t: _k_block_ring_of(power, s, t)
    )
    return KCorrespondence(power, power, blocks, validate=False)


# ---------------------------------------------------------------------------
# Actions on tensor powers of motives
# ---------------------------------------------------------------------------


def permutation_action(n_motive, sigma: Perm):
    """The endomorphism of N^(x)n induced by a slot permutation."""
    n = len(sigma)
    if isinstance(n_motive, ChowMotive):
        power = tensor_power(n_motive, n)
        corr = permutation_correspondence(n_motive.variety, sigma)
        return ChowMorphism.cut(power, power, corr)
    if isinstance(n_motive, NCMotive):
        power = nc_tensor_power(n_motive, n)
        corr = k_permutation_correspondence(n_motive.variety, sigma)
        return NCMorphism.cut(power, power, corr)
    raise MotiveCalcError(f"unsupported motive type {type(n_motive).__name__}")


def group_algebra_action(n_motive, elem: GroupAlgebraElement):
    """Linear extension of the permutation action to group-algebra elements."""
    n = elem.n
    if isinstance(n_motive, ChowMotive):
        power = tensor_power(n_motive, n)
        total = Correspondence.zero(power.variety, power.variety, 0)
        for perm, coeff in elem.terms.items():
            total = total + permutation_correspondence(n_motive.variety, perm).scale(coeff)
        return ChowMorphism.cut(power, power, total)
    if isinstance(n_motive, NCMotive):
        power = nc_tensor_power(n_motive, n)
        total = KCorrespondence.zero(power.variety, power.variety)
        for perm, coeff in elem.terms.items():
            total = total + k_permutation_correspondence(n_motive.variety, perm).scale(coeff)
        return NCMorphism.cut(power, power, total)
    raise MotiveCalcError(f"unsupported motive type {type(n_motive).__name__}")


def schur_idempotent(lam: Partition, n_motive):
    """The cut endomorphism p^(x)n o action(z_lam) o p^(x)n, exactly idempotent."""
    e = group_algebra_action(n_motive, central_idempotent(lam))
    if not e.is_zero() and e.then(e) != e:
        raise MotiveCalcError(
            f"Schur idempotent for {lam} failed its exactness check"
        )
    return e


def schur_cut(lam: Partition, n_motive):
    """The direct summand of N^(x)n selected by the partition lam."""
    e = schur_idempotent(lam, n_motive)
    if isinstance(n_motive, ChowMotive):
        return image_of_idempotent(e)
    return nc_image_of_idempotent(e)


def sym_cut(n: int, n_motive):
    return schur_cut(trivial_partition(n), n_motive)


def alt_cut(n: int, n_motive):
    return schur_cut(sign_partition(n), n_motive)


def schur_vanishes(lam: Partition, n_motive) -> bool:
    """Exact zero test on the idempotent's correspondence class."""
    return schur_idempotent(lam, n_motive).is_zero()


# ---------------------------------------------------------------------------
# Realization ranks
# ---------------------------------------------------------------------------


def schur_rank(lam: Partition, n_motive) -> int:
    """Rank of the cut idempotent acting on the realization.

    Chow side: block-diagonal over the grading (degree-0 correspondences
    preserve it), so ranks are summed per graded piece.  K side: a single
    sparse exact elimination.
    """
    e = schur_idempotent(lam, n_motive)
    if isinstance(n_motive, ChowMotive):
        return sum(chow_graded_ranks(e.corr).values())
    columns = k_action_columns(e.kcorr)
    return rank_of_sparse_rows([dict(c) for c in columns])


def sym_rank(n: int, n_motive) -> int:
    return schur_rank(trivial_partition(n), n_motive)


def alt_rank(n: int, n_motive) -> int:
    return schur_rank(sign_partition(n), n_motive)


# ---------------------------------------------------------------------------
# Finiteness searches
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SchurVerdict:
    finite: bool
    witness: Partition | None
    bound: int

    def describe(self) -> str:
        if self.finite:
            return f"annihilated by the Schur functor of {self.witness}"
        return f"no vanishing Schur functor up to tensor power {self.bound}"


@dataclass(frozen=True)
class KimuraVerdict:
    even_dimension: int | None
    bound: int

    @property
    def finite(self) -> bool:
        return self.even_dimension is not None

    def describe(self) -> str:
        if self.finite:
            return f"evenly finite dimensional of dimension {self.even_dimension}"
        return f"no vanishing alternating power up to {self.bound}"


def is_schur_finite(n_motive, bound: int) -> SchurVerdict:
    """Search partitions by size, then lexicographically, for a vanishing cut."""
    if bound < 1:
        raise MotiveCalcError("the search bound must be at least 1")
    for n in range(1, bound + 1):
        for lam in partitions_of(n):
            if schur_vanishes(lam, n_motive):
                return SchurVerdict(True, lam, bound)
    return SchurVerdict(False, None, bound)


def kimura_witness(n_motive, bound: int) -> KimuraVerdict:
    """Smallest n with Alt^{n+1}(N) = 0; for Tate-type objects the odd part is 0.

    A vanishing alternating power makes N evenly finite dimensional, hence
    Kimura-finite, hence Schur-finite.
    """
    if bound < 1:
        raise MotiveCalcError("the search bound must be at least 1")
    for k in range(1, bound + 2):
        if schur_vanishes(sign_partition(k), n_motive):
            return KimuraVerdict(k - 1, bound)
    return KimuraVerdict(None, bound)
