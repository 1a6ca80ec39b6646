"""Shared exception types."""


class FrobgraphError(Exception):
    """Base class for all library errors."""


class DeskScaleExceeded(FrobgraphError):
    """A computation grew past the configured desk-scale bounds."""


class InvalidPermutation(FrobgraphError):
    """Image list is not a bijection on 0..degree-1."""


class ConductorOverflow(FrobgraphError):
    """Cyclotomic conductor lcm exceeded the configured bound."""


class NotCoprime(FrobgraphError):
    """Galois conjugation exponent shares a factor with the conductor."""


class NotRational(FrobgraphError):
    """Cyclotomic value is not a rational integer."""


class InternalInconsistency(FrobgraphError):
    """An exact self-check failed; the offending result must not be used."""


class NotProper(FrobgraphError):
    """Operation is only defined for a proper subgroup."""


class InvalidSpec(FrobgraphError):
    """Group specification is malformed or out of range."""


class ParseError(FrobgraphError):
    """Text input could not be parsed; carries line/column when known."""

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f" (line {line}" + (f", column {column})" if column is not None else ")")
        super().__init__(message + where)
