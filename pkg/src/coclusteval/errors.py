"""Exception hierarchy shared by the library and the CLI.

Input-shaped problems (bad labels, mismatched lengths, unparseable files,
invalid configuration) and computation-shaped problems (undefined index
values, solver capacity limits) are kept on separate branches so the CLI
can map them to distinct exit codes.
"""


class CoclustevalError(Exception):
    """Base class for all errors raised by this package."""


class InputError(CoclustevalError):
    """Base class for errors caused by invalid input."""


class DimensionMismatchError(InputError):
    """Two partitions or grids that must agree in size do not."""


class LabelRangeError(InputError):
    """A cluster label or block id lies outside its declared range."""


class ConfigError(InputError):
    """A simulation or benchmark configuration is inconsistent."""


class ParseError(InputError):
    """A co-partition file could not be parsed.

    Carries the 1-based line number and, when applicable, the 1-based
    token position within that line.
    """

    def __init__(self, message, line=None, token=None):
        self.line = line
        self.token = token
        where = ""
        if line is not None:
            where = f" (line {line}" + (f", token {token})" if token is not None else ")")
        super().__init__(message + where)


class ComputationError(CoclustevalError):
    """Base class for errors arising during index computation."""


class UndefinedIndexError(ComputationError):
    """The requested index has no defined value for this input."""


class CapacityError(ComputationError):
    """The exhaustive solver was asked for more clusters than it permits."""
