"""Exception types shared across the package.

Every error raised on a bad input or a broken internal invariant derives
from AcforgeError so callers (and the CLI) can map failures to exit codes
without string matching.
"""


class AcforgeError(Exception):
    """Base class for all package errors."""


# --- Gauss code layer ---------------------------------------------------

class MalformedToken(AcforgeError):
    """A token of a Gauss code does not match (O|U)<label><+|->."""


class UnbalancedLabel(AcforgeError):
    """A crossing label does not occur exactly once as O and once as U."""


class DuplicateSign(AcforgeError):
    """The two endpoints of one crossing carry contradictory signs."""


class UnknownArrow(AcforgeError):
    """A crossing label was requested that the diagram does not contain."""


class NotCheckerboard(AcforgeError):
    """An operation requiring even crossing indices got an odd one."""


class NotAlternating(AcforgeError):
    """State resolution is only defined on strictly alternating diagrams."""


# --- Surface-complex layer ----------------------------------------------

class InconsistentOrientation(AcforgeError):
    """Face tracing could not produce opposite-sign arc occurrences."""


class DimensionMismatch(AcforgeError):
    """A chain vector has the wrong length for the complex."""


class NotNullHomologous(AcforgeError):
    """A requested cycle combination is not a boundary in the complex."""


class NonBinarySolution(AcforgeError):
    """A normalized spanning solution has an entry outside {-1, 0, 1}."""


class DisconnectedSubsurface(AcforgeError):
    """A face group does not form a connected subsurface."""


class MultipleBoundaryComponents(AcforgeError):
    """Genus-from-boundary formulas need a single boundary circle."""


class RankMismatch(AcforgeError):
    """The homology basis does not have the rank 1 - chi(F) it must have."""


class CycleNotOnSurface(AcforgeError):
    """A layered cycle steps outside the surface it claims to live on."""


# --- Linking / invariants layer -----------------------------------------

class NotTwoComponents(AcforgeError):
    """Virtual linking numbers need exactly two link components."""


class InvariantViolation(AcforgeError):
    """A constructed Seifert pair violates a defining matrix identity."""


class OmegaEqualsOne(AcforgeError):
    """The signature form is not defined at omega = 1 (u = 0)."""


class DegreeTooLarge(AcforgeError):
    """Factor search is only attempted up to a fixed degree bound."""
