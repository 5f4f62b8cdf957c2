"""Exception hierarchy shared by every module of the package."""


class PosetError(Exception):
    """Base class for all errors raised by posetbounds."""


class CycleError(PosetError, ValueError):
    """The given relation is not acyclic, so it has no strict-order closure."""


class RangeError(PosetError, IndexError):
    """An element index or position lies outside its allowed range."""


class SizeError(PosetError, ValueError):
    """The instance is larger than the guard of an exponential routine."""


class ContractError(PosetError, ValueError):
    """An argument violates the documented precondition of an operation."""


class InternalError(PosetError, RuntimeError):
    """A result the theory guarantees could not be produced.

    Raising this means either a bug or a counterexample to a proven claim;
    callers must never swallow it.
    """
