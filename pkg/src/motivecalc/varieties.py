"""Cellular varieties: finite disjoint unions of products of projective spaces.

A variety is stored as a tuple of components, each component a tuple of
factor dimensions; the empty tuple () is a point.  So

    point()                -> ((),)
    proj_space(2)          -> ((2,),)
    proj_space(1) x proj_space(1)  -> ((1, 1),)
    proj_space(1) + proj_space(1)  -> ((1,), (1,))   (disjoint union)

Products distribute over components in lexicographic order (left index
outer), which makes the product associative on the nose after the factor
tuples concatenate.  Names are display-only and never participate in
equality.
"""

from __future__ import annotations

from functools import lru_cache

from .quotient import QuotientRing

Component = tuple[int, ...]


class CellularVariety:
    """A finite disjoint union of products of projective spaces."""

    __slots__ = ("components", "name")

    def __init__(self, components, name: str = ""):
        comps = tuple(tuple(int(d) for d in comp) for comp in components)
        for comp in comps:
            if any(d < 0 for d in comp):
                raise ValueError(f"negative factor dimension in {comps}")
        self.components = comps
        self.name = name or _default_name(comps)

    # Equality and hashing ignore the name on purpose.
    def __eq__(self, other) -> bool:
        return isinstance(other, CellularVariety) and self.components == other.components

    def __hash__(self) -> int:
        return hash(self.components)

    def __repr__(self) -> str:
        return self.name

    @property
    def ncomponents(self) -> int:
        return len(self.components)

    def dim(self, i: int) -> int:
        return sum(self.components[i])

    def dims(self) -> list[int]:
        return [self.dim(i) for i in range(self.ncomponents)]

    def is_point(self) -> bool:
        return self.components == ((),)

    def is_single_component(self) -> bool:
        return self.ncomponents == 1

    def is_equidimensional(self) -> bool:
        return len(set(self.dims())) <= 1

    def chow_ring(self, i: int) -> QuotientRing:
        return _chow_ring(self.components[i])

    def k_ring(self, i: int) -> QuotientRing:
        return _k_ring(self.components[i])

    def product(self, other: "CellularVariety") -> "CellularVariety":
        comps = [a + b for a in self.components for b in other.components]
        return CellularVariety(comps, f"{self.name} x {other.name}")

    def disjoint_union(self, other: "CellularVariety") -> "CellularVariety":
        return CellularVariety(
            self.components + other.components, f"{self.name} u {other.name}"
        )

    def product_index(self, other: "CellularVariety", i: int, j: int) -> int:
        """Component index of X_i x Y_j inside X x Y."""
        return i * other.ncomponents + j

    def total_chow_rank(self) -> int:
        """dim_Q of the whole Chow ring (= number of cells)."""
        total = 0
        for comp in self.components:
            n = 1
            for d in comp:
                n *= d + 1
            total += n
        return total

    def chow_rank(self, i: int, degree: int) -> int:
        """dim_Q of the degree-d graded piece of component i's Chow ring."""
        ring = self.chow_ring(i)
        return sum(1 for e in ring.monomials() if sum(e) == degree)


@lru_cache(maxsize=None)
def _chow_ring(component: Component) -> QuotientRing:
    return QuotientRing([d + 1 for d in component], "h")


@lru_cache(maxsize=None)
def _k_ring(component: Component) -> QuotientRing:
    return QuotientRing([d + 1 for d in component], "v")


def _default_name(comps) -> str:
    def comp_name(comp: Component) -> str:
        if not comp:
            return "pt"
        return " x ".join(f"P{d}" for d in comp)

    return " u ".join(comp_name(c) for c in comps)


def point() -> CellularVariety:
    return CellularVariety([()], "pt")


def proj_space(n: int) -> CellularVariety:
    return CellularVariety([(n,)], f"P{n}")


def product_of_proj_spaces(dims) -> CellularVariety:
    return CellularVariety([tuple(dims)])


POINT = point()
