"""Exception hierarchy shared across the package.

Math verdicts are never signalled by exceptions: a computation that finishes
returns its answer, and ``ResourceLimitError`` is reserved for aborts caused
by configured budgets (entry blow-up, enumeration runaway), which callers
translate into an "undecided" outcome rather than a true/false one.
"""


class FinmatError(Exception):
    """Base class for all package-specific errors."""


class ParseError(FinmatError):
    """Malformed scalar/word text.  Carries the 0-based offset of the problem."""

    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} (at offset {pos})")
        self.pos = pos


class FieldError(FinmatError):
    """Invalid field construction (reducible minimal polynomial, bad modulus...).

    When a minimal polynomial is rejected as reducible, ``witness`` holds a
    proper factor as a coefficient tuple over the original basis.
    """

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


class SingularMatrixError(FinmatError):
    """A matrix required to be invertible is singular."""


class ResourceLimitError(FinmatError):
    """A configured budget was exhausted (entry blow-up, table overflow...)."""


class MapApplicationError(FinmatError):
    """A congruence map was applied to a matrix outside its domain.

    This indicates a construction bug (wrong map/matrix pairing), never a
    legitimate mathematical outcome.
    """


class AttemptsExhaustedError(FinmatError):
    """Recognition retries ran out without producing a faithful image."""


class InputError(FinmatError):
    """Invalid user input (group files, CLI arguments)."""
