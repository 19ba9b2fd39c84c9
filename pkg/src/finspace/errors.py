"""Exception hierarchy.

Every domain error carries a stable machine-readable ``name`` (the class
name) so the command line can report it verbatim.
"""


class FinspaceError(Exception):
    """Base class for domain errors (CLI exit code 1)."""

    @property
    def name(self):
        return type(self).__name__


class ParseError(FinspaceError):
    """Malformed document or literal (CLI exit code 2)."""


class CycleError(FinspaceError):
    pass


class UnknownLabel(FinspaceError):
    pass


class UnknownGenerator(FinspaceError):
    pass


class GroupTooLarge(FinspaceError):
    pass


class NotConnected(FinspaceError):
    pass


class PossiblyNotSimplyConnected(FinspaceError):
    pass


class HypothesisViolation(FinspaceError):
    def __init__(self, failures):
        self.failures = list(failures)
        super().__init__("; ".join(self.failures))


class TrivialityNotCertified(FinspaceError):
    pass


class NotAdmissible(FinspaceError):
    def __init__(self, message, counterexample=None):
        super().__init__(message)
        self.counterexample = counterexample


class InfiniteGroup(FinspaceError):
    pass


class NotFiniteOrUnknownPi1(FinspaceError):
    pass


class NotGraded(FinspaceError):
    def __init__(self, element):
        super().__init__(f"poset is not graded at {element!r}")
        self.element = element


class NotSpherical(FinspaceError):
    def __init__(self, element, homology):
        super().__init__(
            f"punctured down-set of {element!r} is not a homology sphere: {homology}")
        self.element = element
        self.homology = homology


class NotHeight2(FinspaceError):
    pass


class EpsilonNotUnit(FinspaceError):
    pass


class DimensionTooSmall(FinspaceError):
    pass


class NotCovering(FinspaceError):
    def __init__(self, message, counterexample=None):
        super().__init__(message)
        self.counterexample = counterexample
