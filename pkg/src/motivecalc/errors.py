"""Exception hierarchy shared by all motivecalc modules.

Every mathematical precondition failure raises a subclass of
MotiveCalcError; the CLI maps these to exit code 3.  Parse errors and
internal-consistency failures get their own classes because the CLI
reports them with distinct exit codes (2 and 4).
"""


class MotiveCalcError(Exception):
    """Base class for all mathematical precondition failures."""


class IncompatibleRingsError(MotiveCalcError):
    """Operands belong to different truncated polynomial rings."""


class NotInvertibleError(MotiveCalcError):
    """Reciprocal requested of a series/element whose leading term is not a unit."""


class VarietyMismatchError(MotiveCalcError):
    """Source/target varieties do not line up for the requested operation."""


class UnsupportedMorphismError(MotiveCalcError):
    """Morphism descriptor outside the supported closed library."""


class UnsupportedDirectSumError(MotiveCalcError):
    """Direct sum of Chow motives with unequal Tate twists."""


class NonIdempotentError(MotiveCalcError):
    """A projector failed its exact p*p == p check."""


class LedgerError(MotiveCalcError):
    """Variety-class ledger misuse: unknown symbol, sealed/unsealed state, bad relation."""


class ExpressionError(Exception):
    """Syntax or name error in the small motive expression language."""

    def __init__(self, message: str, position: int | None = None):
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)


class InternalConsistencyError(Exception):
    """Two independent computation routes disagreed; always a bug, never user error."""
