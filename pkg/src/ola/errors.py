"""Exception hierarchy shared by the library and the command line."""


class OlaError(Exception):
    """Base class; ``exit_code`` is what the CLI returns for this failure."""

    exit_code = 4


class ParseError(OlaError, ValueError):
    exit_code = 1


class PreconditionError(OlaError, ValueError):
    exit_code = 2


class ResourceBoundError(OlaError, RuntimeError):
    exit_code = 3
