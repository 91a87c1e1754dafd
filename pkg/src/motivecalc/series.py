"""Laurent polynomials in one symbol and truncated formal power series.

LaurentPolynomial is Z[L, L^-1]: a sparse map from integer exponents to
integer coefficients.  It is the value ring of the Chow-side motivic
measure, with L the class of the inverse Tate twist, so that a product
of n projective lines has class (1 + L)^n.

TruncatedSeries holds the coefficients c_0..c_T of a power series in t
over a coefficient ring chosen at construction time (integers, rationals
or Laurent polynomials).  Sums, products and reciprocals of units agree
with the true series through degree T; everything beyond T is discarded
eagerly.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import NotInvertibleError


class LaurentPolynomial:
    """Sparse Laurent polynomial with integer coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        data: dict[int, int] = {}
        if terms:
            for e, c in dict(terms).items():
                c = int(c)
                if c:
                    data[int(e)] = data.get(int(e), 0) + c
        self.terms = {e: c for e, c in data.items() if c}

    @staticmethod
    def constant(c: int) -> "LaurentPolynomial":
        return LaurentPolynomial({0: c})

    @staticmethod
    def monomial(exp: int, coeff: int = 1) -> "LaurentPolynomial":
        return LaurentPolynomial({exp: coeff})

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other):
        other = _as_laurent(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return LaurentPolynomial(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPolynomial({e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-_as_laurent(other))

    def __rsub__(self, other):
        return _as_laurent(other) + (-self)

    def __mul__(self, other):
        other = _as_laurent(other)
        out: dict[int, int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = e1 + e2
                out[e] = out.get(e, 0) + c1 * c2
        return LaurentPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("use unit_inverse for negative powers")
        result = LaurentPolynomial.constant(1)
        for _ in range(n):
            result = result * self
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPolynomial.constant(other)
        return isinstance(other, LaurentPolynomial) and self.terms == other.terms

    def __hash__(self):
        return hash(tuple(sorted(self.terms.items())))

    def evaluate(self, value):
        """Evaluate at L = value; exact, returns int when the result is integral."""
        total = Fraction(0)
        v = Fraction(value)
        for e, c in self.terms.items():
            total += c * v**e
        if total.denominator == 1:
            return int(total)
        return total

    def at_one(self) -> int:
        return sum(self.terms.values())

    def is_unit(self) -> bool:
        return len(self.terms) == 1 and abs(next(iter(self.terms.values()))) == 1

    def unit_inverse(self) -> "LaurentPolynomial":
        if not self.is_unit():
            raise NotInvertibleError(f"{self} is not a unit of Z[L, L^-1]")
        ((e, c),) = self.terms.items()
        return LaurentPolynomial({-e: c})

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        bits = []
        for e in sorted(self.terms):
            c = self.terms[e]
            if e == 0:
                bits.append(str(c))
                continue
            var = "L" if e == 1 else f"L^{e}"
            if c == 1:
                bits.append(var)
            elif c == -1:
                bits.append(f"-{var}")
            else:
                bits.append(f"{c}*{var}")
        return " + ".join(bits).replace("+ -", "- ")


def _as_laurent(value) -> LaurentPolynomial:
    if isinstance(value, LaurentPolynomial):
        return value
    if isinstance(value, int):
        return LaurentPolynomial.constant(value)
    raise TypeError(f"cannot coerce {value!r} into a Laurent polynomial")


L = LaurentPolynomial.monomial(1)


class CoefficientRing:
    """Tiny adapter giving TruncatedSeries its ring operations."""

    def __init__(self, name, zero, one, add, neg, mul, unit_inverse, coerce):
        self.name = name
        self.zero = zero
        self.one = one
        self.add = add
        self.neg = neg
        self.mul = mul
        self.unit_inverse = unit_inverse
        self.coerce = coerce

    def __repr__(self):
        return f"CoefficientRing({self.name})"


def _int_unit_inverse(c):
    if c in (1, -1):
        return c
    raise NotInvertibleError(f"{c} is not a unit of Z")


def _fraction_unit_inverse(c):
    if c == 0:
        raise NotInvertibleError("0 is not invertible")
    return Fraction(1) / c


INTEGERS = CoefficientRing(
    "Z", 0, 1, lambda a, b: a + b, lambda a: -a, lambda a, b: a * b,
    _int_unit_inverse, int,
)
RATIONALS = CoefficientRing(
    "Q", Fraction(0), Fraction(1), lambda a, b: a + b, lambda a: -a,
    lambda a, b: a * b, _fraction_unit_inverse, Fraction,
)
LAURENT = CoefficientRing(
    "Z[L,L^-1]", LaurentPolynomial(), LaurentPolynomial.constant(1),
    lambda a, b: a + b, lambda a: -a, lambda a, b: a * b,
    lambda a: a.unit_inverse(), _as_laurent,
)


class TruncatedSeries:
    """Power series in t known exactly through degree `order`."""

    __slots__ = ("ring", "order", "coefficients")

    def __init__(self, ring: CoefficientRing, order: int, coefficients):
        if order < 0:
            raise ValueError("order must be >= 0")
        coeffs = [ring.coerce(c) for c in coefficients]
        if len(coeffs) > order + 1:
            coeffs = coeffs[: order + 1]
        while len(coeffs) < order + 1:
            coeffs.append(ring.zero)
        self.ring = ring
        self.order = order
        self.coefficients = coeffs

    @staticmethod
    def constant(ring: CoefficientRing, order: int, value) -> "TruncatedSeries":
        return TruncatedSeries(ring, order, [value])

    @staticmethod
    def one_minus(ring: CoefficientRing, order: int, value) -> "TruncatedSeries":
        """The polynomial 1 - value*t as a truncated series."""
        return TruncatedSeries(ring, order, [ring.one, ring.neg(ring.coerce(value))])

    def _check(self, other: "TruncatedSeries") -> None:
        if self.ring is not other.ring or self.order != other.order:
            raise ValueError("series must share base ring and truncation order")

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check(other)
        add = self.ring.add
        return TruncatedSeries(
            self.ring, self.order,
            [add(a, b) for a, b in zip(self.coefficients, other.coefficients)],
        )

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check(other)
        add, neg = self.ring.add, self.ring.neg
        return TruncatedSeries(
            self.ring, self.order,
            [add(a, neg(b)) for a, b in zip(self.coefficients, other.coefficients)],
        )

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check(other)
        add, mul, zero = self.ring.add, self.ring.mul, self.ring.zero
        out = [zero] * (self.order + 1)
        for i, a in enumerate(self.coefficients):
            if a == zero:
                continue
            for j in range(self.order + 1 - i):
                b = other.coefficients[j]
                if b == zero:
                    continue
                out[i + j] = add(out[i + j], mul(a, b))
        return TruncatedSeries(self.ring, self.order, out)

    def reciprocal(self) -> "TruncatedSeries":
        """Multiplicative inverse through the truncation order.

        Requires the constant coefficient to be a unit of the base ring.
        """
        inv0 = self.ring.unit_inverse(self.coefficients[0])
        add, mul, neg, zero = self.ring.add, self.ring.mul, self.ring.neg, self.ring.zero
        out = [inv0]
        for n in range(1, self.order + 1):
            acc = zero
            for i in range(1, n + 1):
                acc = add(acc, mul(self.coefficients[i], out[n - i]))
            out.append(mul(neg(inv0), acc))
        return TruncatedSeries(self.ring, self.order, out)

    def __pow__(self, n: int) -> "TruncatedSeries":
        base = self if n >= 0 else self.reciprocal()
        result = TruncatedSeries.constant(self.ring, self.order, self.ring.one)
        for _ in range(abs(n)):
            result = result * base
        return result

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, TruncatedSeries)
            and self.ring is other.ring
            and self.order == other.order
            and self.coefficients == other.coefficients
        )

    def __repr__(self) -> str:
        bits = [f"({c})*t^{i}" if i else f"({c})" for i, c in enumerate(self.coefficients)]
        return " + ".join(bits) + f" + O(t^{self.order + 1})"
