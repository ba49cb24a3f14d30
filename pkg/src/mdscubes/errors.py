"""Exception hierarchy. Every construction failure derives from MDSError."""


class MDSError(Exception):
    """Base class for construction and parsing errors."""


# fields
class NotPrimePower(MDSError):
    pass


# codes / file format
class DuplicateCodeword(MDSError):
    pass


class SymbolOutOfRange(MDSError):
    pass


class LengthMismatch(MDSError):
    pass


class ParseError(MDSError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class HeaderMismatch(ParseError):
    pass


class NotFunctional(MDSError):
    pass


class HammingBoundViolation(MDSError):
    pass


# linear
class DimensionTooLarge(HammingBoundViolation):
    pass


class ChainNotFound(MDSError):
    pass


class NotSubcode(MDSError):
    pass


class NotLinear(MDSError):
    pass


# combinators
class DimensionMismatch(MDSError):
    pass


class StrengthMismatch(MDSError):
    pass


class NotBijective(MDSError):
    pass


class HoleNotSubset(MDSError):
    pass


class StrengthTooLow(MDSError):
    pass


class NotASubcode(MDSError):
    pass


# assemblies
class IngredientInvalid(MDSError):
    pass


class HoleOverlap(MDSError):
    pass


class AlphabetMismatch(MDSError):
    pass


class NotAdmissible(MDSError):
    pass


# steiner
class DuplicatePoint(MDSError):
    pass


class NotNested(MDSError):
    pass


class InvalidDesign(MDSError):
    pass


# verify
class TooLarge(MDSError):
    pass
