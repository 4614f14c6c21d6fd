"""Exception types shared across the library."""


class BinlatError(Exception):
    """Base class for all library errors."""


class ParseError(BinlatError):
    """Malformed input file or JSON payload."""


class InvariantViolation(BinlatError):
    """Structurally invalid object (bad exponent length, zero binomial, ...)."""


class FiberInfinite(BinlatError):
    """Fiber enumeration requested without a cap on an unpointed kernel."""


class ResourceExceeded(BinlatError):
    """A search exceeded its configured node budget; the answer is Unknown."""


class NotBounded(BinlatError):
    """Witness-character extraction on a class that is not bounded."""


class NotMinimal(BinlatError):
    """Monomial primary component requested for a prime that is not minimal."""


class NeedCutoff(BinlatError):
    """Primary component of an embedded prime requires a monomial cutoff."""


class VerificationFailed(BinlatError):
    """A self-check (intersection or primary certificate) failed."""


class NotMixed(BinlatError):
    """Horn rank analysis requires a mixed lattice basis matrix."""


class NotGraded(BinlatError):
    """Operation requires a graded ideal and the grading check failed."""


class MisereUnsupported(BinlatError):
    """Grundy values and squarefree closed forms need normal play."""


class NotSquarefree(BinlatError):
    """Squarefree closed form requested for a non-squarefree rule set."""


class NotFree(BinlatError):
    """Stratification piece with linearly dependent generators."""


class NotDisjoint(BinlatError):
    """Stratification pieces overlap; the generating function would overcount."""


class OutOfBox(BinlatError):
    """A table-backed query fell outside the certified region."""


class BadOctal(BinlatError):
    """Invalid octal game code."""


class ScalarExtensionError(BinlatError):
    """Character extension would leave the cyclotomic-rational scalar model."""


class StepUnderflow(BinlatError):
    """Integrator step size fell below the configured minimum."""
