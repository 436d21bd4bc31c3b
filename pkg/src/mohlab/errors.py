"""Exception hierarchy shared by all modules."""


class MohlabError(Exception):
    pass


class PolySyntaxError(MohlabError, ValueError):
    def __init__(self, message, text=None, pos=None):
        self.text = text
        self.pos = pos
        if text is not None and pos is not None:
            message = f"{message} at position {pos}: {text!r}"
        super().__init__(message)


class UnknownVariable(PolySyntaxError):
    pass


class ExponentOverflow(PolySyntaxError):
    pass


class DimensionMismatch(MohlabError, ValueError):
    pass


class RingMismatch(DimensionMismatch):
    pass


class ZeroPolynomial(MohlabError, ValueError):
    pass


class NotInSemigroup(MohlabError, ValueError):
    pass


class NoGaps(MohlabError, ValueError):
    pass


class NotSigmaHomogeneous(MohlabError, ValueError):
    pass


class NoSolutionWithinBound(MohlabError):
    pass


class NotFoundWithinBound(MohlabError):
    pass


class EmptyGeneratorList(MohlabError, ValueError):
    pass


class NotArtinian(MohlabError, ValueError):
    pass


class UnsupportedCharacteristic(MohlabError, ValueError):
    pass


class IdentityFailed(MohlabError):
    pass


class InternalError(MohlabError, RuntimeError):
    pass
