"""Exception hierarchy shared by every module of the package."""


class ShellChainsError(ValueError):
    """Base class for all domain errors raised by this package."""


# circle model
class SameOrbit(ShellChainsError):
    pass


class EmptyArc(ShellChainsError):
    pass


class LengthMismatch(ShellChainsError):
    pass


# chain algebra
class MixedDimension(ShellChainsError):
    pass


class NotInSupport(ShellChainsError):
    pass


# simplices
class DependentLevel(ShellChainsError):
    pass


class IncompatibleLevels(ShellChainsError):
    pass


class MissingLevel(ShellChainsError):
    pass


class FaceMismatch(ShellChainsError):
    pass


class InconsistentSpec(ShellChainsError):
    pass


# rewriting
class InvalidSite(ShellChainsError):
    pass


class NotVanishing(ShellChainsError):
    pass


class VertexInUse(ShellChainsError):
    pass


class NotOneShellBoundary(ShellChainsError):
    pass


class HypothesisFails(ShellChainsError):
    pass


class NotRN(ShellChainsError):
    pass


class NotMinimal(ShellChainsError):
    pass


class BudgetExhausted(ShellChainsError):
    """The bounded equivalence search ran out of states; the verdict is unknown."""


# shell lab
class OutOfRange(ShellChainsError):
    pass


class TooLong(ShellChainsError):
    pass


class NotCentered(ShellChainsError):
    pass
