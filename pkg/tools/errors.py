"""
Exception types raised across qtau.

Every concrete error also derives from the builtin a caller would naturally
catch (ValueError for bad input, RuntimeError / AssertionError for internal
failures), so ``except ValueError`` keeps working around library calls.
"""


class QTauError(Exception):
    """Base class for all qtau errors."""


class AlgebraParseError(QTauError, ValueError):
    """Malformed algebra file, unknown vertex/arrow, or non-composable path."""


class AdmissibilityError(QTauError, ValueError):
    """Rewriting or the path basis did not stabilize within the length cap."""


class ShapeError(QTauError, ValueError):
    """Matrix shape does not match the dimension vector."""


class ModuleLiteralError(QTauError, ValueError):
    """Module or pair literal cannot be turned into a representation."""


class ZeroPrefixError(ModuleLiteralError):
    """A uniserial walk has a prefix that reduces to zero in the algebra."""


class DecompositionError(QTauError, RuntimeError):
    """Endomorphism ring does not split over the rationals."""


class MutationError(QTauError, ValueError):
    """Left mutation requested at a summand lying in Fac of the rest."""


class EnumerationIncomplete(QTauError, RuntimeError):
    """An operation needs a complete poset but the node cap was hit."""


class OracleDisagreement(QTauError, AssertionError):
    """Two independent computations of the same quantity disagree."""


class TheoremViolation(QTauError, AssertionError):
    """A structural guarantee failed on concrete data."""


class SplitError(QTauError, ValueError):
    """split_off_S called on a module with Ext^1(S, Y) != 0."""
