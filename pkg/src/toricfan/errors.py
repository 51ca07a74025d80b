"""Exception hierarchy shared by all modules."""

from __future__ import annotations


class ToricFanError(ValueError):
    """Base class for every error raised by toricfan."""

    def context(self) -> dict:
        return {}


class NotStronglyConvex(ToricFanError):
    def __init__(self, message: str, cone_index: int | None = None):
        super().__init__(message)
        self.cone_index = cone_index

    def context(self) -> dict:
        return {} if self.cone_index is None else {"cone_index": self.cone_index}


class ZeroCone(ToricFanError):
    pass


class NotAFace(ToricFanError):
    pass


class NotAFan(ToricFanError):
    """Two cones meet in something that is not a common face."""

    def __init__(self, message: str, pair=None):
        super().__init__(message)
        self.pair = pair

    def context(self) -> dict:
        if self.pair is None:
            return {}
        return {"pair": [[list(r) for r in c.rays] for c in self.pair]}


class ConeNotInFan(ToricFanError):
    pass


class ConeMismatch(ToricFanError):
    pass


class FanMismatch(ToricFanError):
    pass


class NotComplete(ToricFanError):
    pass


class NotSimplicial(ToricFanError):
    pass


class MaximalNotFullDim(ToricFanError):
    pass


class ComplexError(ToricFanError):
    """A constructed (co)chain complex fails d∘d = 0."""


class ParseError(ToricFanError):
    def __init__(self, message: str, field: str | None = None,
                 line: int | None = None, column: int | None = None):
        super().__init__(message)
        self.field = field
        self.line = line
        self.column = column

    def context(self) -> dict:
        ctx = {}
        if self.field is not None:
            ctx["field"] = self.field
        if self.line is not None:
            ctx["line"] = self.line
            ctx["column"] = self.column
        return ctx
