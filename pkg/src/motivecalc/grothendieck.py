"""Grothendieck-ring classes, the variety-class ledger, motivic measures.

The class of a Chow motive lands in Laurent polynomials in the symbol L,
where L is the class of the twisted point motive (spec k, id, -1): the
projector of a Tate-type motive splits over the grading, and the rank of
its action on the codimension-j Chow piece contributes rank * L^j (then
the whole class shifts by L^{-twist}).  So a projective n-space has class
1 + L + ... + L^n and the affine-cell symbol A^n gets class L^n.

The class of a K-theoretic motive is a single integer: the rank of its
projector acting on K0.  Collapsing L to 1 recovers it from the Chow
class; that equality is an acceptance check, not an assumption.

The ledger is a generators-and-relations bookkeeping device for classes
of varieties: symbols, integer-linear relations between products of
symbols, and optional backing data (a motive, a point-count polynomial).
Relations are verified against the Chow-class measure at registration
time and re-verified against every measure by ledger_check; nothing is
derived from a presentation of the full Grothendieck ring of varieties,
which is out of reach.

A measure is a ring homomorphism out of the ledger: it evaluates symbols
and extends over the registered relations multiplicatively/additively.
The four shipped measures: Chow class (Laurent-valued), K-theoretic rank
(integer), finite-field point count (integer, L -> q), and the Hodge
Euler characteristic (integer, via the diagonal Hodge diamond).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .chow import chow_graded_ranks
from .errors import LedgerError, MotiveCalcError
from .ktheory import k_action_columns
from .linalg import rank_of_sparse_rows
from .motives import ChowMotive, NCMotive, motive_of
from .series import LaurentPolynomial
from .varieties import CellularVariety, POINT, proj_space


# ---------------------------------------------------------------------------
# Classes in the Grothendieck rings of the motive categories
# ---------------------------------------------------------------------------


def chow_class(motive: ChowMotive) -> LaurentPolynomial:
    """The Laurent polynomial sum of graded projector ranks, twisted by L^{-m}."""
    ranks = chow_graded_ranks(motive.projector)
    return LaurentPolynomial({j - motive.twist: r for j, r in ranks.items() if r})


def nc_class(motive: NCMotive) -> int:
    """The rank of the projector acting on K0 of the underlying variety."""
    columns = k_action_columns(motive.projector)
    return rank_of_sparse_rows([dict(c) for c in columns])


def hodge_diamond(motive: ChowMotive) -> dict[tuple[int, int], int]:
    """Hodge numbers of a cellular motive: concentrated on the diagonal."""
    ranks = chow_graded_ranks(motive.projector)
    return {(p, p): r for p, r in ranks.items() if r}


def hodge_euler(motive: ChowMotive) -> int:
    """sum over (p, q) of (-1)^{q-p} h^{p,q}; the Hochschild Euler number."""
    return sum((-1) ** (q - p) * h for (p, q), h in hodge_diamond(motive).items())


# ---------------------------------------------------------------------------
# The ledger
# ---------------------------------------------------------------------------

Term = tuple[int, tuple[str, ...]]
Side = tuple[Term, ...]


def _normalize_side(side) -> Side:
    out = []
    for coeff, syms in side:
        out.append((int(coeff), tuple(sorted(syms))))
    return tuple(out)


@dataclass(frozen=True)
class Relation:
    lhs: Side
    rhs: Side

    def symbols(self) -> set[str]:
        return {s for side in (self.lhs, self.rhs) for _, syms in side for s in syms}

    def __repr__(self) -> str:
        def fmt(side: Side) -> str:
            if not side:
                return "0"
            bits = []
            for coeff, syms in side:
                prod = "*".join(syms) if syms else "1"
                bits.append(f"{coeff}*{prod}" if coeff != 1 else prod)
            return " + ".join(bits)

        return f"[{fmt(self.lhs)} = {fmt(self.rhs)}]"


class SymbolEntry:
    """Backing data of one ledger symbol."""

    __slots__ = ("name", "motive", "chow_value", "point_count")

    def __init__(self, name: str, motive: ChowMotive | None = None,
                 chow_value: LaurentPolynomial | None = None,
                 point_count: LaurentPolynomial | None = None):
        self.name = name
        self.motive = motive
        if motive is not None and chow_value is None:
            chow_value = chow_class(motive)
        self.chow_value = chow_value
        self.point_count = point_count


class VarLedger:
    """Named variety classes with registered scissor-type relations.

    Registration happens during a build phase; seal() freezes the ledger,
    after which evaluation is allowed and further registration is not.
    """

    def __init__(self):
        self.entries: dict[str, SymbolEntry] = {}
        self.relations: list[Relation] = []
        self.sym_powers: dict[tuple[str, int], str] = {}
        self.sealed = False

    # -- registration ---------------------------------------------------------

    def _require_open(self) -> None:
        if self.sealed:
            raise LedgerError("the ledger is sealed; no further registration")

    def register_symbol(self, name: str, motive: ChowMotive | None = None,
                        chow_value: LaurentPolynomial | None = None,
                        point_count: LaurentPolynomial | None = None) -> None:
        self._require_open()
        if name in self.entries:
            raise LedgerError(f"symbol {name!r} is already registered")
        self.entries[name] = SymbolEntry(name, motive, chow_value, point_count)

    def register_relation(self, lhs, rhs) -> None:
        """Register an integer-linear relation between products of symbols.

        If every symbol involved carries a Chow value, the relation is
        checked against the Chow-class measure immediately and rejected
        on failure.
        """
        self._require_open()
        relation = Relation(_normalize_side(lhs), _normalize_side(rhs))
        for s in relation.symbols():
            if s not in self.entries:
                raise LedgerError(f"relation uses unregistered symbol {s!r}")
        values = {s: self.entries[s].chow_value for s in relation.symbols()}
        if all(v is not None for v in values.values()):
            left = _evaluate_side(relation.lhs, values.__getitem__)
            right = _evaluate_side(relation.rhs, values.__getitem__)
            if left != right:
                raise LedgerError(
                    f"relation {relation!r} is violated by the Chow-class measure: "
                    f"{left} != {right}"
                )
        self.relations.append(relation)

    def register_symmetric_power(self, base: str, n: int, power_symbol: str) -> None:
        self._require_open()
        for s in (base, power_symbol):
            if s not in self.entries:
                raise LedgerError(f"unregistered symbol {s!r}")
        self.sym_powers[(base, n)] = power_symbol

    def seal(self) -> None:
        self.sealed = True

    # -- lookups ----------------------------------------------------------------

    def _require_sealed(self) -> None:
        if not self.sealed:
            raise LedgerError("seal the ledger before evaluating measures")

    def entry(self, name: str) -> SymbolEntry:
        if name not in self.entries:
            raise LedgerError(f"unknown ledger symbol {name!r}")
        return self.entries[name]

    def symmetric_power_symbol(self, base: str, n: int) -> str:
        key = (base, n)
        if key not in self.sym_powers:
            raise LedgerError(
                f"symmetric power S^{n}({base}) is not registered in the ledger"
            )
        return self.sym_powers[key]

    def symbol_names(self) -> list[str]:
        return sorted(self.entries)


def _evaluate_side(side: Side, value_of):
    total = None
    for coeff, syms in side:
        term = coeff if not syms else coeff * _product(value_of(s) for s in syms)
        total = term if total is None else total + term
    if total is None:
        return 0
    return total


def _product(values: Iterable):
    out = None
    for v in values:
        out = v if out is None else out * v
    return out


# ---------------------------------------------------------------------------
# Measures
# ---------------------------------------------------------------------------


class MotivicMeasure:
    """A named ring homomorphism out of the ledger."""

    def __init__(self, name: str, ledger: VarLedger, evaluate_symbol, unit):
        self.name = name
        self.ledger = ledger
        self._evaluate_symbol = evaluate_symbol
        self.unit = unit

    def of_symbol(self, name: str):
        self.ledger._require_sealed()
        return self._evaluate_symbol(self.ledger.entry(name))

    def of_side(self, side) -> object:
        self.ledger._require_sealed()
        return _evaluate_side(_normalize_side(side), self.of_symbol)

    def __repr__(self) -> str:
        return f"MotivicMeasure({self.name})"


def chow_measure(ledger: VarLedger) -> MotivicMeasure:
    def eval_symbol(entry: SymbolEntry):
        if entry.chow_value is None:
            raise LedgerError(f"symbol {entry.name!r} has no Chow class")
        return entry.chow_value

    return MotivicMeasure("chow", ledger, eval_symbol, LaurentPolynomial.constant(1))


def nc_measure(ledger: VarLedger) -> MotivicMeasure:
    """Evaluation L -> 1 of the Chow class: the K-theoretic rank measure."""

    def eval_symbol(entry: SymbolEntry):
        if entry.chow_value is None:
            raise LedgerError(f"symbol {entry.name!r} has no Chow class")
        return entry.chow_value.at_one()

    return MotivicMeasure("nc", ledger, eval_symbol, 1)


def point_count_measure(ledger: VarLedger, q: int) -> MotivicMeasure:
    """Counting points over a field with q elements: L -> q."""
    if q < 2:
        raise MotiveCalcError("point counts need a prime power q >= 2")

    def eval_symbol(entry: SymbolEntry):
        poly = entry.point_count if entry.point_count is not None else entry.chow_value
        if poly is None:
            raise LedgerError(f"symbol {entry.name!r} has no point-count data")
        value = poly.evaluate(q)
        if not isinstance(value, int):
            raise LedgerError(f"point count of {entry.name!r} is not integral")
        return value

    return MotivicMeasure(f"count(q={q})", ledger, eval_symbol, 1)


def hodge_euler_measure(ledger: VarLedger) -> MotivicMeasure:
    """The alternating sum of Hodge numbers, via each symbol's motive."""

    def eval_symbol(entry: SymbolEntry):
        if entry.motive is not None:
            return hodge_euler(entry.motive)
        if entry.chow_value is not None:
            # Formal cells: the class L^n carries the single Hodge number
            # h^{n,n} = 1 with compact supports, so evaluate at L = 1.
            return entry.chow_value.at_one()
        raise LedgerError(f"symbol {entry.name!r} has no Hodge data")

    return MotivicMeasure("chi", ledger, eval_symbol, 1)


@dataclass(frozen=True)
class LedgerVerdict:
    measure: str
    checked: int
    failures: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return not self.failures


def ledger_check(measure: MotivicMeasure) -> LedgerVerdict:
    """Verify every registered relation under the given measure, exactly."""
    failures = []
    for relation in measure.ledger.relations:
        lhs = measure.of_side(relation.lhs)
        rhs = measure.of_side(relation.rhs)
        if lhs != rhs:
            failures.append(f"{relation!r}: {lhs} != {rhs}")
    return LedgerVerdict(measure.name, len(measure.ledger.relations), tuple(failures))


@dataclass(frozen=True)
class ModularVerdict:
    symbol: str
    q: int
    point_count: int
    nc_value: int

    @property
    def congruent(self) -> bool:
        return (self.point_count - self.nc_value) % (self.q - 1) == 0

    @property
    def equal_on_the_nose(self) -> bool:
        return self.point_count == self.nc_value

    def describe(self) -> str:
        base = (
            f"#{self.symbol}(F_{self.q}) = {self.point_count}, "
            f"K-theoretic class = {self.nc_value}: "
        )
        if not self.congruent:
            return base + f"NOT congruent mod {self.q - 1}"
        if self.equal_on_the_nose:
            return base + "equal"
        return (
            base
            + f"congruent mod {self.q - 1} but different, so point counting "
            "does not factor through the K-theoretic class"
        )


def mod_q_minus_1_check(ledger: VarLedger, symbol: str, q: int) -> ModularVerdict:
    """Compare the point count with the K-theoretic class modulo q - 1."""
    count = point_count_measure(ledger, q).of_symbol(symbol)
    ncval = nc_measure(ledger).of_symbol(symbol)
    return ModularVerdict(symbol, q, count, ncval)


# ---------------------------------------------------------------------------
# The built-in ledger
# ---------------------------------------------------------------------------

_MAX_DEGREE = 5


def build_standard_ledger(p2_powers_up_to: int = 5) -> VarLedger:
    """Symbols and relations for the desk-scale universe.

    Affine cells A^n are formal symbols with class L^n; projective spaces,
    the product of two lines, and symmetric powers of the line and plane
    are motive-backed.  Symmetric powers of the line are the projective
    spaces themselves (a registered fact, verified independently by
    finite-field point counting in the tests); symmetric powers of the
    plane are backed by the categorical symmetric-power motives.
    """
    from .schur import sym_cut  # local import to avoid a cycle

    ledger = VarLedger()
    ledger.register_symbol("pt", motive=motive_of(POINT))
    L = LaurentPolynomial.monomial(1)
    for n in range(_MAX_DEGREE + 1):
        ledger.register_symbol(f"A{n}", chow_value=L**n)
    for n in range(_MAX_DEGREE + 1):
        ledger.register_symbol(f"P{n}", motive=motive_of(proj_space(n)))
    p1 = proj_space(1)
    ledger.register_symbol("P1xP1", motive=motive_of(p1.product(p1)))

    # Scissor relations: P^n = A^0 + ... + A^n.
    for n in range(_MAX_DEGREE + 1):
        ledger.register_relation(
            [(1, [f"P{n}"])], [(1, [f"A{i}"]) for i in range(n + 1)]
        )
    # A^m * A^n = A^{m+n}.
    for m in range(1, _MAX_DEGREE):
        for n in range(m, _MAX_DEGREE - m + 1):
            ledger.register_relation(
                [(1, [f"A{m}", f"A{n}"])], [(1, [f"A{m + n}"])]
            )
    # Product varieties multiply.
    ledger.register_relation([(1, ["P1xP1"])], [(1, ["P1", "P1"])])
    ledger.register_relation([(1, ["P0"])], [(1, ["pt"])])

    # Symmetric powers of the point (all of them are the point) and of the line.
    for n in range(1, 13):
        ledger.register_symmetric_power("pt", n, "pt")
    for n in range(1, _MAX_DEGREE + 1):
        ledger.register_symmetric_power("P1", n, f"P{n}")
    # Symmetric powers of the plane, backed by categorical cuts.
    p2_motive = motive_of(proj_space(2))
    for n in range(1, p2_powers_up_to + 1):
        ledger.register_symbol(f"S{n}_P2", motive=sym_cut(n, p2_motive))
        ledger.register_symmetric_power("P2", n, f"S{n}_P2")

    ledger.seal()
    return ledger


_STANDARD: VarLedger | None = None


def standard_ledger() -> VarLedger:
    """The shared sealed built-in ledger (built lazily, then cached)."""
    global _STANDARD
    if _STANDARD is None:
        _STANDARD = build_standard_ledger()
    return _STANDARD
