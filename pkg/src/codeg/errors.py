"""Exception types shared across codeg."""


class CodegError(Exception):
    """Base class for every error raised by codeg."""


class NonExactQuotient(CodegError, ArithmeticError):
    """An order-polynomial quotient left a negative exponent or a non-exact scalar."""


class UnsupportedFamily(CodegError, ValueError):
    """The group family (or parameter combination) has no data or formula."""


class ParseError(CodegError, ValueError):
    """Malformed input text. ``line`` is 1-based when known."""

    def __init__(self, message, line=None, field=None):
        self.line = line
        self.field = field
        where = []
        if line is not None:
            where.append(f"line {line}")
        if field is not None:
            where.append(f"field {field!r}")
        super().__init__(f"{', '.join(where)}: {message}" if where else message)


class InvariantViolation(CodegError, ValueError):
    """A parsed object failed a structural invariant."""

    def __init__(self, invariant, detail=""):
        self.invariant = invariant
        super().__init__(f"{invariant}: {detail}" if detail else invariant)


class NonIntegralCodegree(CodegError, ArithmeticError):
    """chi(1) does not divide |G:ker chi|; the table is corrupt."""


class DataFileError(CodegError, ValueError):
    """A shipped or user-supplied data file is malformed."""
