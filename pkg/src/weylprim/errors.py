"""Exception types. Each carries a short machine-readable ``code`` used by the CLI."""


class WeylprimError(ValueError):
    code = "error"


class RankMismatchError(WeylprimError):
    code = "rank_mismatch"


class RankUnderflowError(WeylprimError):
    code = "rank_underflow"


class NotDominantError(WeylprimError):
    code = "non_dominant_weight"


class InvalidParameterError(WeylprimError):
    code = "invalid_parameter"


class BudgetExceeded(WeylprimError):
    """Raised when the oracle would construct more lattice vectors than allowed."""

    code = "budget_exceeded"


class MalformedInputError(InvalidParameterError):
    """A weight or root-sum string that does not parse."""

    code = "malformed_input"
