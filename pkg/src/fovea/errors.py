"""Exception taxonomy shared across the package.

Two broad families matter for the CLI exit-code contract: ``DataError``
(unreadable, corrupt, or schema-violating inputs) and ``InvariantError``
(inputs that parse fine but violate a domain invariant). Everything else
is a plain ``ValueError``/``OSError`` from the stdlib.
"""

from __future__ import annotations


class FoveaError(Exception):
    """Base class for all package-specific errors."""


class DataError(FoveaError):
    """Input file or payload cannot be read or does not match its schema."""


class InvariantError(FoveaError):
    """A domain invariant was violated by otherwise well-formed data."""


class MalformedScene(DataError):
    """Scene annotation is inconsistent with its feature grid."""


class EmptySupportRegion(InvariantError):
    """A class has no foreground cells anywhere in the support set."""


class EmptyBackground(InvariantError):
    """Ground-truth boxes cover the entire grid; no background cells remain."""


class MissingPrototype(InvariantError):
    """Repository lacks a prototype required for the requested scale or kind."""


class CorruptRepository(DataError):
    """Repository file is truncated, unparseable, or missing required fields."""


class VersionMismatch(DataError):
    """Repository file declares an unsupported format version."""


class MalformedAttention(InvariantError):
    """Attention matrix fails the row-stochasticity or shape checks."""


class EmptyProfile(InvariantError):
    """A distance profile was requested from an empty attention dump."""


class ProfileMismatch(InvariantError):
    """Two profiles cannot be compared because their layer labels differ."""


class NonFiniteLoss(InvariantError):
    """Optimization produced a NaN or infinite loss value."""
