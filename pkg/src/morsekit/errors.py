"""Exception hierarchy shared by all morsekit modules."""


class MorsekitError(Exception):
    """Base class for all errors raised by morsekit."""


class MalformedInputError(MorsekitError):
    """Input data violates a structural precondition (e.g. duplicate vertex)."""


class ParseError(MalformedInputError):
    """A complex file could not be parsed; carries the offending line number."""

    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


class DomainError(MorsekitError):
    """Arguments are well-formed but outside the operation's domain."""


class FormanValidationError(DomainError):
    """A function on simplices is not a Forman discrete Morse function."""

    def __init__(self, message: str, simplex):
        super().__init__(message)
        self.simplex = simplex


class BudgetExceededError(MorsekitError):
    """An enumeration or matrix computation exceeded its configured budget.

    Exponential constructions must fail loudly rather than truncate silently,
    so the count reached is always reported.
    """

    def __init__(self, kind: str, reached: int, budget: int):
        super().__init__(f"{kind} budget exceeded: reached {reached} (budget {budget})")
        self.kind = kind
        self.reached = reached
        self.budget = budget
