# typed errors raised across the library
# NOTE: uncertainty-relation violations are *data* (URReport verdicts), never exceptions.

class CVUncertaintyError(Exception):
    """Base class of every error raised by cv_uncertainty."""

class DimensionMismatchError(CVUncertaintyError, ValueError):
    """Vector / matrix sizes don't agree (e.g. 2n-vectors of different n)."""

class NormalizationError(CVUncertaintyError, ValueError):
    """A wavefunction or density is not normalized within tolerance."""

class ContractViolationError(CVUncertaintyError, ValueError):
    """An operation was called outside its contract (non-CCO pair, alpha out of range, ...)."""

class ConvergenceError(CVUncertaintyError, RuntimeError):
    """An adaptive numerical expansion did not converge within its attempt budget."""

class BracketError(CVUncertaintyError, RuntimeError):
    """A root could not be bracketed, or the target lies outside the function's range."""

class ScenarioConfigError(CVUncertaintyError, ValueError):
    """Invalid scenario configuration; the message carries line / field context."""
