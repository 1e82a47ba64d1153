"""Exception types shared across the package."""


class BumplessError(Exception):
    """Base class for all errors raised by this package."""


class SizeLimitError(BumplessError):
    """An enumeration or polynomial computation exceeded its size guard."""


class InvalidEncodingError(BumplessError):
    """Input fails the defining conditions of its encoding (ASM, corner-sum
    table, ice configuration, tile grid, tableau, ...)."""


class MoveError(BumplessError):
    """A combinatorial move was requested at a position where it does not
    apply (non-removable entry, cell not in the diagram, bad pivot set)."""


class NotVexillaryError(BumplessError):
    """A vexillary-only operation was called on a 2143-containing permutation."""


class NotHeckeError(BumplessError):
    """An operation requiring a top-left justified blank diagram was called
    on a grid whose blanks do not form a partition."""


class InternalError(BumplessError):
    """An internal consistency check failed.  This signals a bug in the
    package, not bad user input."""
