"""Exception hierarchy shared by the whole package."""


class QMError(Exception):
    """Base class for every error raised by qmin."""


class InvalidMintermError(QMError, ValueError):
    pass


class IncompatibleCubeError(QMError, ValueError):
    pass


class RenderError(QMError, ValueError):
    pass


class SpecError(QMError, ValueError):
    """A FunctionSpec violates its invariants."""


class EmptyFunctionError(QMError):
    """on_set and dc_set are both empty; the function is constant 0."""


class ConsistencyError(QMError):
    """Internal invariant broken; indicates a bug rather than bad input."""


class EngineMismatchError(ConsistencyError):
    pass


class BudgetExceededError(QMError):
    pass


class RowLimitError(QMError):
    pass


class OracleLimitError(QMError):
    pass


class ParseError(QMError, ValueError):
    pass
