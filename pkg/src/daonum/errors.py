"""Exception hierarchy shared by the library and the command line."""


class DaoError(Exception):
    """Base class for every error raised by daonum."""


class ContextMismatchError(DaoError, ValueError):
    """Monomials or ideals from different rings were combined."""


class ProperIdealError(DaoError, ValueError):
    """An operation that needs a proper nonzero ideal received (0) or (1)."""


class CapExceededError(DaoError):
    """An enumeration or matrix size went over the configured cap."""


class BudgetExceededError(CapExceededError):
    """The wall-clock budget ran out."""


class ParseError(DaoError, ValueError):
    """Malformed ideal document.  Carries a 1-based line and column."""

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}" + (f", column {column}" if column is not None else "") + ": "
        super().__init__(where + message)
