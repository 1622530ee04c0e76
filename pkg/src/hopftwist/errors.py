"""Exception types raised across the package."""


class HopfTwistError(Exception):
    """Base class for all errors raised by hopftwist."""


class ParseError(HopfTwistError, ValueError):
    pass


class DenominatorVanishes(HopfTwistError, ZeroDivisionError):
    """A substitution sent a denominator to zero.

    ``entry`` names the offending table entry when the caller knows it.
    """

    def __init__(self, message, entry=None):
        super().__init__(message)
        self.entry = entry


class NotConvolutionInvertible(HopfTwistError):
    pass


class InvalidHopfData(HopfTwistError, ValueError):
    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report or []


class CocycleCheckFailed(HopfTwistError):
    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class NotLazy(HopfTwistError):
    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class InvalidGroupTable(HopfTwistError, ValueError):
    pass


class ZeroParameter(HopfTwistError, ValueError):
    pass


class ResourceLimit(HopfTwistError):
    pass
