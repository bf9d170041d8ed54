"""Error taxonomy shared by all modules."""


class SchlichtError(Exception):
    """Base class for every library error."""


# series
class OrderMismatch(SchlichtError):
    pass


class DivisionByNonUnit(SchlichtError):
    pass


class BranchPointAtOrigin(SchlichtError):
    pass


class InnerNotVanishing(SchlichtError):
    pass


class NotInvertibleAtOrigin(SchlichtError):
    pass


class RadiusExceeded(SchlichtError):
    pass


# univalent-function constructors and transforms
class ParamOutOfRange(SchlichtError):
    pass


# legendre
class DegreeTooLarge(SchlichtError):
    pass


class OrderOutOfRange(SchlichtError):
    pass


class QuadratureUnderresolved(SchlichtError):
    pass


# loewner
class BranchSelectionFailure(SchlichtError):
    pass


class PoleAtMinusOne(SchlichtError):
    pass


class StepRejected(SchlichtError):
    pass


class TrajectoryEscaped(SchlichtError):
    pass


class DerivativeUnderflow(SchlichtError):
    pass


class BranchTrackingFailure(SchlichtError):
    pass


class ChainUnavailable(SchlichtError):
    pass


# cli
class UnknownSuite(SchlichtError):
    pass


class IoFailure(SchlichtError):
    pass
