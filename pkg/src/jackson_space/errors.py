"""Exception hierarchy.

Every kernel error derives from :class:`KernelError`; the CLI echoes the
class name of the raised error, so names are part of the interface.
"""


class KernelError(Exception):
    """Base class for domain errors raised by the kernel."""

    @property
    def name(self) -> str:
        return type(self).__name__


class MismatchedOrder(KernelError):
    pass


class DivisionByZero(KernelError, ZeroDivisionError):
    pass


class NotReducible(KernelError):
    """A scalar has a denominator divisible by the residue characteristic."""


class NotPrimitive(KernelError):
    pass


class IndexOutOfRange(KernelError, IndexError):
    pass


class NonTerminating(KernelError):
    """Rewriting exceeded its fuel budget; the presentation is malformed."""


class InvalidModule(KernelError):
    pass


class UnrecognizedFamily(KernelError):
    pass


class FieldTooLarge(KernelError):
    pass


class WrongRegime(KernelError):
    pass


class InconsistentPair(KernelError):
    pass


class LengthMismatch(KernelError):
    pass


class BadPrime(KernelError):
    pass


class ParseError(KernelError):
    """Malformed user input (CLI maps this to exit code 2)."""
