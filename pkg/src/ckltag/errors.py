"""Exception types shared across the toolkit."""


class CkltagError(Exception):
    """Base class for all toolkit errors."""


class UnknownTagError(CkltagError):
    """An abbreviation does not resolve to any canonical tag (or alias)."""

    def __init__(self, abbrev: str):
        super().__init__(f"unknown tag abbreviation: {abbrev!r}")
        self.abbrev = abbrev


class RegistryError(CkltagError):
    """The embedded tagset table is malformed; this is a packaging defect."""


class LoadError(CkltagError):
    """A resource file (lexicon, affix table, rule file) failed to load."""

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class ParseError(CkltagError):
    """A CoNLL-U input is structurally invalid."""

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class AddressError(CkltagError):
    """A (document, sentence, token) triple points at nothing."""


class StorageError(CkltagError):
    """The corpus directory could not be read or written."""
