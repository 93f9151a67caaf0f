"""Exception types shared across the package."""


class KnockmarkError(Exception):
    """Base class for all errors raised by this package."""


class CorpusError(KnockmarkError):
    """A corpus or conflict-case file could not be loaded.

    Carries the offending path and, for per-line problems, the 1-based
    line number.
    """

    def __init__(self, message: str, *, path: str | None = None, line: int | None = None):
        self.path = path
        self.line = line
        prefix = ""
        if path is not None:
            prefix = path if line is None else f"{path}:{line}"
            prefix += ": "
        super().__init__(prefix + message)


class EmptyQueryError(KnockmarkError):
    """The query normalized to zero tokens; distinct from 'no results'."""
