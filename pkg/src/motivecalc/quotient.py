"""Truncated multivariate polynomial rings over the rationals.

A ring is Q[x1..xk]/(x1^b1, ..., xk^bk): every variable is nilpotent with
an individual bound.  Elements are sparse dictionaries mapping exponent
tuples to Fraction coefficients; any monomial whose exponents reach a
bound is identically zero, so multiplication truncates on the fly.

This is exactly what Chow rings and K-theory rings of products of
projective spaces look like: A*(P^n) = Q[h]/(h^{n+1}) and, after the
substitution v = u - 1, K0(P^n)_Q = Q[v]/(v^{n+1}).

All arithmetic is exact; no floating point anywhere.  Elements are
immutable once built, so they can be shared and cached freely.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .errors import IncompatibleRingsError

Exponent = tuple[int, ...]


class QuotientRing:
    """Descriptor of a truncated polynomial ring.

    bounds[i] is the truncation exponent of variable i: x_i^bounds[i] = 0.
    The prefix is only used for printing ("h" for Chow rings, "v" for
    K-theory rings) but participates in equality so the two kinds of ring
    can never be mixed by accident.
    """

    __slots__ = ("prefix", "bounds")

    def __init__(self, bounds: Sequence[int], prefix: str = "x"):
        bounds = tuple(int(b) for b in bounds)
        if any(b < 1 for b in bounds):
            raise ValueError(f"truncation bounds must be >= 1, got {bounds}")
        self.bounds = bounds
        self.prefix = prefix

    @property
    def nvars(self) -> int:
        return len(self.bounds)

    def var_name(self, i: int) -> str:
        return f"{self.prefix}{i + 1}"

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, QuotientRing)
            and self.bounds == other.bounds
            and self.prefix == other.prefix
        )

    def __hash__(self) -> int:
        return hash((self.prefix, self.bounds))

    def __repr__(self) -> str:
        rels = ", ".join(f"{self.var_name(i)}^{b}" for i, b in enumerate(self.bounds))
        return f"Q[{self.prefix}1..{self.prefix}{self.nvars}]/({rels})" if self.bounds else "Q"

    # -- element constructors ------------------------------------------------

    def zero(self) -> "RingElement":
        return RingElement(self, {})

    def one(self) -> "RingElement":
        return self.constant(1)

    def constant(self, value) -> "RingElement":
        c = Fraction(value)
        if c == 0:
            return self.zero()
        return RingElement(self, {(0,) * self.nvars: c})

    def variable(self, i: int) -> "RingElement":
        return self.monomial(tuple(1 if j == i else 0 for j in range(self.nvars)), 1)

    def monomial(self, exponent: Exponent, coeff=1) -> "RingElement":
        c = Fraction(coeff)
        exponent = tuple(exponent)
        if len(exponent) != self.nvars:
            raise ValueError(f"exponent {exponent} has wrong arity for {self!r}")
        if c == 0 or self.exceeds(exponent):
            return self.zero()
        return RingElement(self, {exponent: c})

    def element(self, terms: Mapping[Exponent, object]) -> "RingElement":
        out: dict[Exponent, Fraction] = {}
        for exp, coeff in terms.items():
            exp = tuple(exp)
            c = Fraction(coeff)
            if c == 0 or self.exceeds(exp):
                continue
            out[exp] = out.get(exp, Fraction(0)) + c
        return RingElement(self, {e: c for e, c in out.items() if c != 0})

    def exceeds(self, exponent: Exponent) -> bool:
        bounds = self.bounds
        for i, e in enumerate(exponent):
            if e >= bounds[i]:
                return True
        return False

    def monomials(self) -> Iterable[Exponent]:
        """All surviving monomial exponents, ordered by (total degree, exponent)."""
        exps: list[Exponent] = [()]
        for b in self.bounds:
            exps = [e + (i,) for e in exps for i in range(b)]
        return sorted(exps, key=lambda e: (sum(e), e))


class RingElement:
    """Immutable sparse element of a QuotientRing.

    The term map never stores zero coefficients or out-of-bound exponents.
    """

    __slots__ = ("ring", "terms")

    def __init__(self, ring: QuotientRing, terms: dict[Exponent, Fraction]):
        self.ring = ring
        self.terms = terms

    # -- basic queries --------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def constant_term(self) -> Fraction:
        return self.terms.get((0,) * self.ring.nvars, Fraction(0))

    def coefficient(self, exponent: Exponent) -> Fraction:
        return self.terms.get(tuple(exponent), Fraction(0))

    def degrees(self) -> set[int]:
        return {sum(e) for e in self.terms}

    def graded_part(self, d: int) -> "RingElement":
        return RingElement(self.ring, {e: c for e, c in self.terms.items() if sum(e) == d})

    def is_homogeneous(self, d: int) -> bool:
        return all(sum(e) == d for e in self.terms)

    # -- arithmetic ------------------------------------------------------------

    def _check(self, other: "RingElement") -> None:
        if self.ring != other.ring:
            raise IncompatibleRingsError(f"cannot combine {self.ring!r} and {other.ring!r}")

    def __add__(self, other: "RingElement") -> "RingElement":
        self._check(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, Fraction(0)) + c
            if s == 0:
                out.pop(e, None)
            else:
                out[e] = s
        return RingElement(self.ring, out)

    def __neg__(self) -> "RingElement":
        return RingElement(self.ring, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "RingElement") -> "RingElement":
        return self + (-other)

    def scale(self, scalar) -> "RingElement":
        s = Fraction(scalar)
        if s == 0:
            return self.ring.zero()
        return RingElement(self.ring, {e: c * s for e, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        self._check(other)
        bounds = self.ring.bounds
        out: dict[Exponent, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                dead = False
                for i, v in enumerate(e):
                    if v >= bounds[i]:
                        dead = True
                        break
                if dead:
                    continue
                s = out.get(e, Fraction(0)) + c1 * c2
                if s == 0:
                    out.pop(e, None)
                else:
                    out[e] = s
        return RingElement(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "RingElement":
        if n < 0:
            raise ValueError("negative powers are not defined in a quotient ring")
        result = self.ring.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, RingElement)
            and self.ring == other.ring
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.ring, tuple(sorted(self.terms.items()))))

    # -- ring maps ------------------------------------------------------------

    def remap(self, target: QuotientRing, images: Sequence[int | None]) -> "RingElement":
        """Apply the ring map sending variable j to target variable images[j].

        images[j] = None sends variable j to zero.  Collisions (two source
        variables mapped to the same target variable) add exponents, so
        this covers projections, factor reorderings and diagonals alike.
        """
        if len(images) != self.ring.nvars:
            raise ValueError("images must assign every variable of the source ring")
        bounds = target.bounds
        out: dict[Exponent, Fraction] = {}
        for exp, coeff in self.terms.items():
            new = [0] * target.nvars
            dead = False
            for j, e in enumerate(exp):
                if e == 0:
                    continue
                i = images[j]
                if i is None:
                    dead = True
                    break
                new[i] += e
                if new[i] >= bounds[i]:
                    dead = True
                    break
            if dead:
                continue
            key = tuple(new)
            s = out.get(key, Fraction(0)) + coeff
            if s == 0:
                out.pop(key, None)
            else:
                out[key] = s
        return RingElement(target, out)

    def substitute(self, target: QuotientRing, images: Sequence["RingElement"]) -> "RingElement":
        """General ring map: variable j goes to the element images[j]."""
        if len(images) != self.ring.nvars:
            raise ValueError("images must assign every variable of the source ring")
        # Cache powers of each image as they are needed.
        powers: list[dict[int, RingElement]] = [{0: target.one()} for _ in images]

        def power(j: int, e: int) -> RingElement:
            cache = powers[j]
            if e not in cache:
                cache[e] = power(j, e - 1) * images[j]
            return cache[e]

        total = target.zero()
        for exp, coeff in self.terms.items():
            term = target.constant(coeff)
            for j, e in enumerate(exp):
                if e:
                    term = term * power(j, e)
            total = total + term
        return total

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        bits = []
        for exp, coeff in sorted(self.terms.items(), key=lambda t: (sum(t[0]), t[0])):
            mono = "*".join(
                self.ring.var_name(i) + (f"^{e}" if e > 1 else "")
                for i, e in enumerate(exp)
                if e
            )
            if not mono:
                bits.append(str(coeff))
            elif coeff == 1:
                bits.append(mono)
            elif coeff == -1:
                bits.append(f"-{mono}")
            else:
                bits.append(f"{coeff}*{mono}")
        return " + ".join(bits).replace("+ -", "- ")
