"""Exception hierarchy shared by all modules."""


class HorosingError(Exception):
    """Base class for every error raised by the package."""


class GeometryError(HorosingError):
    pass


class ZeroVector(GeometryError):
    pass


class NotPointed(GeometryError):
    pass


class RankMismatch(GeometryError):
    pass


class UnboundedRegion(GeometryError):
    pass


class ValidationError(HorosingError):
    def __init__(self, reason):
        super().__init__(reason)
        self.reason = reason


class HyperbolicIncompatible(ValidationError):
    pass


class NotQGorenstein(HorosingError):
    """The weight-function system has no solution.

    ``constraints`` names the (irreducible) conflicting constraint set.
    """

    def __init__(self, reason, constraints=()):
        super().__init__(reason)
        self.reason = reason
        self.constraints = tuple(constraints)


class NoWitness(HorosingError):
    pass


class OutsideCone(HorosingError):
    pass


class NotLogTerminal(HorosingError):
    pass


class InvalidRank(HorosingError):
    pass


class InvalidSpec(HorosingError):
    pass


class ParseError(HorosingError):
    def __init__(self, reason, line=None):
        msg = reason if line is None else f"line {line}: {reason}"
        super().__init__(msg)
        self.reason = reason
        self.line = line
