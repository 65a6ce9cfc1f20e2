"""Exception hierarchy shared by every module."""


class AlgebraError(Exception):
    """Base class for all errors raised by this package."""


class UnknownOp(AlgebraError, KeyError):
    def __str__(self):
        return str(self.args[0]) if self.args else ""


class ArityMismatch(AlgebraError):
    pass


class IndexOutOfRange(AlgebraError, IndexError):
    pass


class ParseError(AlgebraError):
    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.message = message
        self.line = line
        self.column = column


class ClauseSyntaxError(AlgebraError):
    def __init__(self, message: str, position: int, text: str = ""):
        super().__init__(f"position {position}: {message}" + (f" in {text!r}" if text else ""))
        self.message = message
        self.position = position


class UnboundSymbol(AlgebraError):
    pass


class MissingBinding(AlgebraError):
    pass


class PreconditionViolated(AlgebraError):
    """Input does not satisfy a construction's hypotheses; ``failed`` names them."""

    def __init__(self, message: str, failed=()):
        super().__init__(message)
        self.failed = tuple(failed)


class PostconditionViolated(AlgebraError):
    """A construction produced output violating its guarantee (an internal bug)."""


class NotInverse(AlgebraError):
    def __init__(self, message: str, element: int | None = None, count: int | None = None):
        super().__init__(message)
        self.element = element
        self.count = count


class NotClifford(AlgebraError):
    pass


class NoUniqueIdempotent(PreconditionViolated):
    pass


class CapExceeded(AlgebraError):
    pass


class UnknownFilter(AlgebraError):
    pass
