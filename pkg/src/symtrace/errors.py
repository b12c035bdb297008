"""Exception types shared across the package."""


class SymtraceError(Exception):
    """Base class for all symtrace errors."""


class MissingAssignment(SymtraceError):
    """A polynomial variable has no value in an evaluation mapping."""


class InvalidSymbol(SymtraceError, ValueError):
    """A multiplicity vector does not encode a partition of the declared k."""


class DimensionError(SymtraceError, ValueError):
    """Matrix dimensions are incompatible with the requested operation."""


class BudgetExceeded(SymtraceError):
    """An exhaustive enumeration would exceed its configured work ceiling."""


class ParseError(SymtraceError, ValueError):
    """Malformed input document (matrix file or rational literal)."""
