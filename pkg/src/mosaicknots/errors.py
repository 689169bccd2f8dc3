"""Exception types raised across the package."""


class MosaicError(Exception):
    """Base class for every domain error in this package."""


class ParseError(MosaicError, ValueError):
    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}"
            if column is not None:
                where += f", column {column}"
            where += ": "
        super().__init__(where + message)


class BadToken(ParseError):
    pass


class RaggedRow(ParseError):
    pass


class WrongRowCount(ParseError):
    pass


class NonEmptyBorder(MosaicError):
    pass


class NotSuitablyConnected(MosaicError):
    def __init__(self, diagnostics):
        self.diagnostics = diagnostics
        super().__init__(f"mosaic is not suitably connected ({len(diagnostics)} violations)")


class NotAKnot(MosaicError):
    pass


class TooManyCrossings(MosaicError):
    pass


class NotApplicable(MosaicError):
    pass


class FeasibilityLimit(MosaicError):
    pass


class UnsupportedFilter(MosaicError):
    pass


class LabelCountMismatch(ParseError):
    pass


class NotRealizable(MosaicError):
    pass
