"""Exception hierarchy shared by all modules."""


class VeroneseTypeError(Exception):
    """Base class for every error raised by this package."""


class DimensionError(VeroneseTypeError, ValueError):
    """Monomials or index sets living in different numbers of variables."""


class UndefinedInputError(VeroneseTypeError, ValueError):
    """Operation is undefined for the given input (zero ideal, unit ideal, ...)."""


class ZeroIdealError(UndefinedInputError):
    """Parameters with sum of caps below the degree describe the zero ideal."""


class UnitIdealError(UndefinedInputError):
    """Degree zero parameters describe the unit ideal."""


class InvalidBaseSetError(VeroneseTypeError, ValueError):
    """Candidate base set is empty, ragged, negative or of mixed modulus."""


class NotAPolymatroidError(VeroneseTypeError, ValueError):
    """Base set fails the exchange property."""


class NotStrongExchangeError(VeroneseTypeError, ValueError):
    """Base set fails the strong exchange property."""


class PreconditionError(VeroneseTypeError, ValueError):
    """Input is outside the class an operation is defined on."""


class ConsistencyError(VeroneseTypeError, AssertionError):
    """An internal invariant that the mathematics guarantees was violated."""


class BudgetError(VeroneseTypeError, RuntimeError):
    """Brute-force enumeration would exceed its configured budget."""
