"""Partitions, symmetric-group characters, and the rational group algebra.

Characters of irreducible representations are computed by the
Murnaghan-Nakayama rule on beta-sets: removing a border strip of length k
from a partition corresponds to lowering one beta-number by k, with the
sign read off from how many beta-numbers are jumped over.  Values are
memoized; nothing is shipped as a table.

The hook length formula is implemented separately so the tests can use it
as an independent oracle for dimensions.

Central idempotents z_lam = (dim/n!) * sum_s chi(s^{-1}) s cut the
isotypic components of tensor powers.  They are canonical (no tableau
choice), exactly idempotent, pairwise orthogonal and sum to 1; all of
that is verified by convolution arithmetic in the tests.

Permutations are tuples in one-line notation; composition (a * b)(i) =
a[b[i]] applies b first.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import permutations as _itertools_permutations
from math import factorial
from typing import Iterable, Iterator, Mapping

Perm = tuple[int, ...]


class Partition:
    """A weakly decreasing tuple of positive integers."""

    __slots__ = ("parts",)

    def __init__(self, parts: Iterable[int]):
        parts = tuple(int(p) for p in parts)
        if any(p <= 0 for p in parts):
            raise ValueError(f"partition parts must be positive: {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"partition parts must be weakly decreasing: {parts}")
        self.parts = parts

    @property
    def n(self) -> int:
        return sum(self.parts)

    def __eq__(self, other) -> bool:
        return isinstance(other, Partition) and self.parts == other.parts

    def __hash__(self) -> int:
        return hash(self.parts)

    def __repr__(self) -> str:
        return f"({','.join(map(str, self.parts))})"

    def conjugate(self) -> "Partition":
        if not self.parts:
            return self
        cols = [0] * self.parts[0]
        for p in self.parts:
            for i in range(p):
                cols[i] += 1
        return Partition(cols)

    def hook_lengths(self) -> list[int]:
        conj = self.conjugate().parts
        hooks = []
        for i, row in enumerate(self.parts):
            for j in range(row):
                hooks.append(row - j + conj[j] - i - 1)
        return hooks

    def dimension(self) -> int:
        """Dimension of the irreducible representation, by hook lengths."""
        d = factorial(self.n)
        for h in self.hook_lengths():
            d //= h
        return d


def partitions_of(n: int) -> list[Partition]:
    """All partitions of n in ascending lexicographic order of part tuples."""

    def gen(remaining: int, cap: int) -> Iterator[tuple[int, ...]]:
        if remaining == 0:
            yield ()
            return
        for first in range(min(remaining, cap), 0, -1):
            for rest in gen(remaining - first, first):
                yield (first,) + rest

    return [Partition(p) for p in sorted(gen(n, n))]


def trivial_partition(n: int) -> Partition:
    return Partition([n])


def sign_partition(n: int) -> Partition:
    return Partition([1] * n)


# ---------------------------------------------------------------------------
# Permutations
# ---------------------------------------------------------------------------


def identity_perm(n: int) -> Perm:
    return tuple(range(n))


def compose_perm(a: Perm, b: Perm) -> Perm:
    """(a * b)(i) = a[b[i]]: apply b first, then a."""
    return tuple(a[b[i]] for i in range(len(a)))


def inverse_perm(a: Perm) -> Perm:
    out = [0] * len(a)
    for i, v in enumerate(a):
        out[v] = i
    return tuple(out)


def all_permutations(n: int) -> list[Perm]:
    return [tuple(p) for p in _itertools_permutations(range(n))]


def cycle_type(a: Perm) -> Partition:
    seen = [False] * len(a)
    lengths = []
    for start in range(len(a)):
        if seen[start]:
            continue
        length = 0
        i = start
        while not seen[i]:
            seen[i] = True
            i = a[i]
            length += 1
        lengths.append(length)
    lengths.sort(reverse=True)
    return Partition(lengths)


def perm_sign(a: Perm) -> int:
    return (-1) ** (len(a) - len(cycle_type(a).parts))


def transposition(n: int, i: int, j: int) -> Perm:
    out = list(range(n))
    out[i], out[j] = out[j], out[i]
    return tuple(out)


# ---------------------------------------------------------------------------
# Murnaghan-Nakayama characters
# ---------------------------------------------------------------------------


def _beta_set(parts: tuple[int, ...]) -> tuple[int, ...]:
    length = len(parts)
    return tuple(parts[i] + (length - 1 - i) for i in range(length))


def _partition_from_beta(beta: tuple[int, ...]) -> tuple[int, ...]:
    desc = sorted(beta, reverse=True)
    length = len(desc)
    parts = tuple(desc[i] - (length - 1 - i) for i in range(length))
    return tuple(p for p in parts if p > 0)


@lru_cache(maxsize=None)
def _mn_character(lam: tuple[int, ...], mu: tuple[int, ...]) -> int:
    if not mu:
        return 1 if not lam else 0
    k = mu[0]
    rest = mu[1:]
    beta = _beta_set(lam)
    beta_set = set(beta)
    total = 0
    for b in beta:
        low = b - k
        if low < 0 or low in beta_set:
            continue
        height = sum(1 for x in beta if low < x < b)
        new_beta = tuple(x for x in beta if x != b) + (low,)
        new_lam = _partition_from_beta(new_beta)
        total += (-1) ** height * _mn_character(new_lam, rest)
    return total


def character(lam: Partition, mu: Partition) -> int:
    """Irreducible character value chi_lam on the conjugacy class of type mu."""
    if lam.n != mu.n:
        raise ValueError(f"partition sizes differ: |{lam}| != |{mu}|")
    return _mn_character(lam.parts, tuple(sorted(mu.parts, reverse=True)))


# ---------------------------------------------------------------------------
# The rational group algebra of a symmetric group
# ---------------------------------------------------------------------------


class GroupAlgebraElement:
    """A finite Q-linear combination of permutations of {0..n-1}."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Mapping[Perm, object] | None = None):
        self.n = int(n)
        data: dict[Perm, Fraction] = {}
        if terms:
            for perm, coeff in terms.items():
                perm = tuple(perm)
                if len(perm) != self.n or sorted(perm) != list(range(self.n)):
                    raise ValueError(f"{perm} is not a permutation of 0..{self.n - 1}")
                c = Fraction(coeff)
                if c:
                    data[perm] = data.get(perm, Fraction(0)) + c
        self.terms = {p: c for p, c in data.items() if c}

    @staticmethod
    def identity(n: int) -> "GroupAlgebraElement":
        return GroupAlgebraElement(n, {identity_perm(n): 1})

    @staticmethod
    def of_permutation(perm: Perm) -> "GroupAlgebraElement":
        return GroupAlgebraElement(len(perm), {tuple(perm): 1})

    def _check(self, other: "GroupAlgebraElement") -> None:
        if self.n != other.n:
            raise ValueError("group algebra elements of different symmetric groups")

    def __add__(self, other: "GroupAlgebraElement") -> "GroupAlgebraElement":
        self._check(other)
        out = dict(self.terms)
        for p, c in other.terms.items():
            out[p] = out.get(p, Fraction(0)) + c
        return GroupAlgebraElement(self.n, out)

    def __sub__(self, other: "GroupAlgebraElement") -> "GroupAlgebraElement":
        return self + other.scale(-1)

    def scale(self, scalar) -> "GroupAlgebraElement":
        return GroupAlgebraElement(
            self.n, {p: c * Fraction(scalar) for p, c in self.terms.items()}
        )

    def __mul__(self, other: "GroupAlgebraElement") -> "GroupAlgebraElement":
        """Convolution: (sum a_s s)(sum b_t t) = sum a_s b_t (s t)."""
        self._check(other)
        out: dict[Perm, Fraction] = {}
        for s, a in self.terms.items():
            for t, b in other.terms.items():
                st = compose_perm(s, t)
                v = out.get(st, Fraction(0)) + a * b
                if v == 0:
                    out.pop(st, None)
                else:
                    out[st] = v
        return GroupAlgebraElement(self.n, out)

    def is_idempotent(self) -> bool:
        return self * self == self

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, GroupAlgebraElement)
            and self.n == other.n
            and self.terms == other.terms
        )

    def __repr__(self) -> str:
        return f"GroupAlgebraElement(S_{self.n}, {len(self.terms)} terms)"


@lru_cache(maxsize=None)
def central_idempotent(lam: Partition) -> GroupAlgebraElement:
    """z_lam = (dim/n!) sum_s chi_lam(s^{-1}) s, the isotypic projector."""
    n = lam.n
    dim = lam.dimension()
    scale = Fraction(dim, factorial(n))
    terms: dict[Perm, Fraction] = {}
    for perm in all_permutations(n):
        chi = character(lam, cycle_type(inverse_perm(perm)))
        if chi:
            terms[perm] = scale * chi
    return GroupAlgebraElement(n, terms)


def symmetrizer(n: int) -> GroupAlgebraElement:
    """The averaging idempotent (1/n!) sum_s s; equals z_(n)."""
    scale = Fraction(1, factorial(n))
    return GroupAlgebraElement(n, {p: scale for p in all_permutations(n)})


def antisymmetrizer(n: int) -> GroupAlgebraElement:
    """The signed averaging idempotent; equals z_(1,...,1)."""
    scale = Fraction(1, factorial(n))
    return GroupAlgebraElement(
        n, {p: scale * perm_sign(p) for p in all_permutations(n)}
    )
