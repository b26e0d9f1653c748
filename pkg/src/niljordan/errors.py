"""Exceptions and sentinel values shared across the toolkit."""


class NilJordanError(Exception):
    """Base class for all toolkit errors."""


class DimensionMismatchError(NilJordanError):
    pass


class SingularMatrixError(NilJordanError):
    pass


class NotJordanError(NilJordanError):
    pass


class NotNilpotentError(NilJordanError):
    pass


class UnsupportedDimensionError(NilJordanError):
    pass


class NoCharBasisError(NilJordanError):
    """No sampled characteristic vector produced the required basis."""


class NotAssociativeError(NilJordanError):
    pass


class ParseError(NilJordanError):
    def __init__(self, line_no, message):
        self.line_no = line_no
        self.message = message
        super().__init__(f"line {line_no}: {message}")


class _Sentinel:
    __slots__ = ("_name",)

    def __init__(self, name):
        self._name = name

    def __repr__(self):
        return self._name

    def __bool__(self):
        return False


#: Returned by limits that blow up at t -> 0.  A value, not an exception.
DIVERGES = _Sentinel("DIVERGES")

#: Returned by nilindex when the central series stabilises at a nonzero space.
NOT_NILPOTENT = _Sentinel("NOT_NILPOTENT")

#: Returned by the contraction-witness search when the budget is exhausted.
NOT_FOUND = _Sentinel("NOT_FOUND")
