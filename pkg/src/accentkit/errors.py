"""Exception types shared across the package."""
from __future__ import annotations


class AccentKitError(Exception):
    """Base class for all package errors."""


class UnknownSymbolError(AccentKitError):
    """A character is neither a base symbol, a modifier, nor a combining mark."""

    def __init__(self, char: str, position: int):
        self.char = char
        self.position = position
        super().__init__(f"unknown symbol {char!r} at position {position}")


class LeadingModifierError(AccentKitError):
    """A modifier or combining mark appeared with no preceding base symbol."""

    def __init__(self, position: int):
        self.position = position
        super().__init__(f"modifier with no preceding base symbol at position {position}")


class UnmappedPhoneError(AccentKitError):
    """A phone is outside both the reduction map and its target inventory."""

    def __init__(self, phone: str, position: int):
        self.phone = phone
        self.position = position
        super().__init__(f"no reduction rule for phone {phone!r} at position {position}")


class EmptyInputError(AccentKitError):
    """An operation that requires non-empty phone sequences got an empty one."""


class AccentTagMismatchError(AccentKitError):
    """Two statistics tables with different accent tags cannot be merged."""


class MissingFeaturesError(AccentKitError):
    """The feature database lacks an entry for a phone present in the statistics."""

    def __init__(self, phone: str):
        self.phone = phone
        super().__init__(f"no feature entry for phone {phone!r}")


class BadRatioError(AccentKitError):
    """A train/val/test ratio does not consist of non-negative parts summing to 100."""


class UnknownArpabetSymbolError(AccentKitError):
    """A pronunciation dictionary line used a symbol outside the ARPABET set."""

    def __init__(self, line_no: int, symbol: str):
        self.line_no = line_no
        self.symbol = symbol
        super().__init__(f"unknown ARPABET symbol {symbol!r} on line {line_no}")
