"""Exception hierarchy shared by all phasecat modules."""


class PhasecatError(Exception):
    pass


# scalars
class RingMismatch(PhasecatError):
    pass


class NonInvertible(PhasecatError, ZeroDivisionError):
    pass


class PhaseGroupError(PhasecatError, ValueError):
    pass


class NotClosed(PhaseGroupError):
    pass


class MissingIdentity(PhaseGroupError):
    pass


class NonInvertibleElement(PhaseGroupError):
    pass


class DuplicateElement(PhaseGroupError):
    pass


# matrices and quotients
class DimMismatch(PhasecatError, ValueError):
    pass


class DaggerNotClosed(PhasecatError):
    pass


# finite categories
class SizeLimit(PhasecatError):
    pass


class IllFormedCategory(PhasecatError, ValueError):
    pass


class IllFormedChoice(PhasecatError, ValueError):
    pass


# phased structures
class NoPhase(PhasecatError):
    """Two mediating maps are not related by any enumerated phase."""


class NoZeroArrows(PhasecatError):
    pass


class NoMediatingMap(PhasecatError):
    pass


# GP construction
class NotDiagonal(PhasecatError, ValueError):
    pass


class NotUnitPreserving(PhasecatError, ValueError):
    pass


class PreconditionFailed(PhasecatError):
    def __init__(self, message, verdict=None):
        super().__init__(message)
        self.verdict = verdict


class NoSuchScalar(PhasecatError):
    pass


class NoState(PhasecatError):
    pass


# transport
class PhaseNotPreserved(PhasecatError):
    pass


class ChoiceNotPreserved(PhasecatError):
    pass


# cli
class ConfigError(PhasecatError, ValueError):
    pass
