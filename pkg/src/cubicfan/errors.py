"""Exception taxonomy.

Every failure the library can signal carries a stable machine-readable
``code`` so the CLI can emit structured error records.
"""


class CubicfanError(Exception):
    """Base class for all library errors."""

    code = "Error"


class DivisionByZero(CubicfanError, ZeroDivisionError):
    code = "DivisionByZero"


class ModulusMismatch(CubicfanError):
    code = "ModulusMismatch"


class DegenerateInput(CubicfanError):
    code = "DegenerateInput"


class SingularCurve(CubicfanError):
    code = "SingularCurve"


class PointOffCurve(CubicfanError):
    code = "PointOffCurve"


class TorsionNotRational(CubicfanError):
    code = "TorsionNotRational"


class InflectionBasePoint(CubicfanError):
    code = "InflectionBasePoint"


class FanNotRational(CubicfanError):
    code = "FanNotRational"


class DegenerateFan(CubicfanError):
    code = "DegenerateFan"


class NotTangentConfiguration(CubicfanError):
    code = "NotTangentConfiguration"


class DuplicateBasePoint(CubicfanError):
    code = "DuplicateBasePoint"


class DuplicateLine(CubicfanError):
    code = "DuplicateLine"


class ConcurrentLines(CubicfanError):
    code = "ConcurrentLines"

    def __init__(self, message, triple=None):
        super().__init__(message)
        self.triple = triple


class SamePairQuery(CubicfanError):
    code = "SamePairQuery"


class BadIndexPair(CubicfanError):
    code = "BadIndexPair"


class BadInput(CubicfanError):
    code = "BadInput"
