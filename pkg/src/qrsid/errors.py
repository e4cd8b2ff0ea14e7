"""Exception hierarchy shared by all modules."""


class QRSIDError(Exception):
    """Base class for every error raised by qrsid."""


class DivisionByZero(QRSIDError, ZeroDivisionError):
    pass


class NonUnitLeadingTerm(QRSIDError):
    pass


class GridOverflow(QRSIDError):
    pass


class BeyondCap(QRSIDError):
    pass


class DivergentProduct(QRSIDError):
    pass


class NonRationalExponent(QRSIDError):
    pass


class NonTerminating(QRSIDError):
    pass


class PoleInLowerParameter(QRSIDError):
    pass


class DivergentFactor(QRSIDError):
    pass


class WindowOverflow(QRSIDError):
    pass


class UnknownIdentity(QRSIDError, KeyError):
    def __str__(self):
        return "unknown identity: %s" % (self.args[0] if self.args else "")


class ParseError(QRSIDError, ValueError):
    """Raised by the text parsers; carries 1-based line/column."""

    def __init__(self, message, text="", pos=0):
        line = text.count("\n", 0, pos) + 1
        col = pos - (text.rfind("\n", 0, pos) + 1) + 1
        super().__init__("%s at line %d, column %d" % (message, line, col))
        self.line = line
        self.column = col
