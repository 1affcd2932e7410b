"""Exception hierarchy.

Two families matter to callers: FinisError covers bad input and violated
preconditions (CLI exit code 1), InternalInconsistency covers violations of
mathematical guarantees (CLI exit code 2).  If an InternalInconsistency ever
fires, the library has a bug: the asserted statement is a theorem.
"""


class FinisError(Exception):
    """Base class for user-facing errors."""


class InternalInconsistency(Exception):
    """A mathematical guarantee failed to hold; this signals a bug."""


# perm_core
class GroupTooLarge(FinisError):
    """Enumeration exceeded the element cap."""


class ElementNotInGroup(FinisError):
    pass


class NotASubgroup(FinisError):
    pass


class NotNormal(FinisError):
    pass


class NotAnAutomorphism(FinisError):
    pass


class ActionNotConsistent(FinisError):
    """Generator images do not extend to a homomorphism."""


class ParseError(FinisError):
    pass


# ffgroups
class NotAPrimePower(FinisError):
    pass


class TooLarge(FinisError):
    pass


class UnsupportedSpec(FinisError):
    pass


# structure
class TooManyClasses(FinisError):
    pass


class TrivialGroup(FinisError):
    pass


class NotSolvable(FinisError):
    pass


class HTooLarge(FinisError):
    pass


# sylow_fusion
class NotPrime(FinisError):
    pass


class NotConjugate(FinisError):
    pass


class NotCentral(FinisError):
    pass


class PreconditionViolated(FinisError):
    pass


class DepthExceeded(FinisError):
    pass


# hall
class NotHall(FinisError):
    pass


class HypothesisViolated(FinisError):
    pass


# abelian_coh
class DegreeTooHigh(FinisError):
    pass


class NotACocycle(FinisError):
    pass


class NotSplit(FinisError):
    pass


class NotCoprime(FinisError):
    pass


class NoConjugatorFound(InternalInconsistency):
    """Complements exist but no conjugator was found; theorem guarantees one."""


# transfer
class BadInput(FinisError):
    pass


class SylowNotAbelian(FinisError):
    pass


class OddOrder(FinisError):
    pass


# frobenius
class SubgroupIsWhole(FinisError):
    pass


class BadSubgroup(FinisError):
    pass


class NotFrobeniusCouple(FinisError):
    pass


class KernelNotClosed(InternalInconsistency):
    """The Frobenius kernel set failed a closure check; theorem guarantees it."""


# characters
class DegenerateSpectrum(FinisError):
    """Class-matrix spectrum stayed degenerate after the retry budget."""


class ToleranceExceeded(InternalInconsistency):
    """A numerical verification exceeded its tolerance."""


class DimensionMismatch(FinisError):
    pass


class NotPQOrder(FinisError):
    pass
