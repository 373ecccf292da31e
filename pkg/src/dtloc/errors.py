"""Exception hierarchy shared by all dtloc modules.

Everything that a well-formed program can trigger at runtime (bad input
documents, wall slopes, unsupported potentials, ...) derives from
``DTLocError`` so the CLI can map it to exit status 1.  Genuine usage
mistakes (bad flags, wrong slope arity) raise ``UsageError`` and exit 2.
"""

from __future__ import annotations


class DTLocError(Exception):
    """Base class for domain errors (CLI exit status 1)."""


class UsageError(DTLocError):
    """Malformed invocation, e.g. slope arity not matching the model (exit 2)."""


class QuiverSyntaxError(DTLocError):
    """Parse failure in a quiver description document, with position info."""

    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class QuiverStructureError(DTLocError):
    """Structurally invalid quiver (non-closed potential word, bad framing, ...)."""


class SlopeError(DTLocError):
    """Slope does not assign weights to all arrows, or is not potential-invariant."""


class WallSlopeError(DTLocError):
    """Slope sits on a wall: some elementary cycle has weight zero."""

    def __init__(self, cycles):
        names = ", ".join(str(c) for c in cycles)
        super().__init__(f"slope lies on a wall: zero-weight elementary cycle(s): {names}")
        self.cycles = tuple(cycles)


class UnsupportedPotentialError(DTLocError):
    """Potential outside the supported class (non-binomial or inhomogeneous relations)."""


class NonConfluentError(DTLocError):
    """Relation rewriting produced an inconsistent atom identification."""


class PosetDepthError(DTLocError):
    """Atom poset was not built deep enough for the requested enumeration."""


class NonIsolatedFixedPointError(DTLocError):
    """A fixed point has invariant directions that do not cancel at class level."""
