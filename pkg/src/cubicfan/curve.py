"""Elliptic curves y^2 = x^3 + ax + b over F_p with the chord-tangent law.

The zero element O is the point at infinity, which is an inflection of
the projective model, so three affine points sum to O exactly when they
are collinear.  Affine formulas with explicit inversion throughout;
nothing here chases speed beyond a raw-integer fast path shared by the
public operations and the exhaustive test sweeps.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional

from .errors import (BadInput, DegenerateInput, ModulusMismatch, PointOffCurve,
                     SingularCurve, TorsionNotRational)
from .field import FieldElement, Poly, roots, sqrt


@dataclass(frozen=True)
class CurvePoint:
    """Affine point (x, y) or the point at infinity (x = y = None)."""

    x: Optional[FieldElement]
    y: Optional[FieldElement]

    def __post_init__(self):
        if (self.x is None) != (self.y is None):
            raise BadInput("a point has both coordinates or neither")
        if self.x is not None and self.x.modulus != self.y.modulus:
            raise ModulusMismatch("point coordinates in different fields")

    @property
    def is_infinity(self) -> bool:
        return self.x is None

    @classmethod
    def infinity(cls) -> "CurvePoint":
        return cls(None, None)

    def key(self):
        """Canonical sort key: O first, then by (x, y) representatives."""
        if self.is_infinity:
            return (0, 0, 0)
        return (1, self.x.value, self.y.value)

    def __repr__(self):
        if self.is_infinity:
            return "O"
        return f"({self.x.value},{self.y.value})"


INFINITY = CurvePoint(None, None)


def parse_point(text: str, modulus: int) -> CurvePoint:
    """Parse "x,y" or "O" (decimal integers, reduced mod p)."""
    body = text.strip()
    if body in ("O", "o", "inf", "infinity"):
        return INFINITY
    parts = body.split(",")
    if len(parts) != 2:
        raise BadInput(f"point must be 'x,y' or 'O', got {text!r}")
    try:
        x, y = (int(part.strip()) for part in parts)
    except ValueError:
        raise BadInput(f"point coordinates must be decimal integers, got {text!r}")
    return CurvePoint(FieldElement(x, modulus), FieldElement(y, modulus))


def format_point(P: CurvePoint) -> str:
    return "O" if P.is_infinity else f"{P.x.value},{P.y.value}"


def _add_raw(p: int, a: int, P, Q):
    """Group law on raw (x, y) int pairs; None is the point at infinity."""
    if P is None:
        return Q
    if Q is None:
        return P
    x1, y1 = P
    x2, y2 = Q
    if x1 == x2:
        if (y1 + y2) % p == 0:
            return None
        lam = (3 * x1 * x1 + a) * pow(2 * y1, p - 2, p) % p
    else:
        lam = (y2 - y1) * pow(x2 - x1, p - 2, p) % p
    x3 = (lam * lam - x1 - x2) % p
    y3 = (lam * (x1 - x3) - y1) % p
    return (x3, y3)


def _scalar_raw(p: int, a: int, P, n: int):
    acc, base = None, P
    while n:
        if n & 1:
            acc = _add_raw(p, a, acc, base)
        base = _add_raw(p, a, base, base)
        n >>= 1
    return acc


@dataclass(frozen=True)
class Curve:
    """Nonsingular short-Weierstrass cubic over F_p."""

    a: FieldElement
    b: FieldElement

    def __post_init__(self):
        if self.a.modulus != self.b.modulus:
            raise ModulusMismatch("curve coefficients in different fields")
        disc = 4 * self.a ** 3 + 27 * self.b ** 2
        if disc.is_zero():
            raise SingularCurve(
                f"4a^3 + 27b^2 = 0 mod {self.modulus}: curve is singular")

    @property
    def modulus(self) -> int:
        return self.a.modulus

    @classmethod
    def from_ints(cls, p: int, a: int, b: int) -> "Curve":
        return cls(FieldElement(a, p), FieldElement(b, p))

    @classmethod
    def parse(cls, text: str) -> "Curve":
        """Parse the "p:a:b" text form (decimal integers)."""
        parts = text.strip().split(":")
        if len(parts) != 3:
            raise BadInput(f"curve must be 'p:a:b', got {text!r}")
        try:
            p, a, b = (int(part.strip()) for part in parts)
        except ValueError:
            raise BadInput(f"curve fields must be decimal integers, got {text!r}")
        return cls.from_ints(p, a, b)

    def format(self) -> str:
        return f"{self.modulus}:{self.a.value}:{self.b.value}"

    def point(self, x: int, y: int) -> CurvePoint:
        P = CurvePoint(FieldElement(x, self.modulus), FieldElement(y, self.modulus))
        self.ensure_on_curve(P)
        return P

    def parse_point(self, text: str) -> CurvePoint:
        P = parse_point(text, self.modulus)
        self.ensure_on_curve(P)
        return P

    def rhs(self, x: FieldElement) -> FieldElement:
        return x ** 3 + self.a * x + self.b

    def contains(self, P: CurvePoint) -> bool:
        if P.is_infinity:
            return True
        if P.x.modulus != self.modulus:
            return False
        return (P.y ** 2 - self.rhs(P.x)).is_zero()

    def ensure_on_curve(self, *pts: CurvePoint) -> None:
        for P in pts:
            if not self.contains(P):
                raise PointOffCurve(f"{P} is not on {self.format()}")

    def _raw(self, P: CurvePoint):
        return None if P.is_infinity else (P.x.value, P.y.value)

    def _wrap(self, raw) -> CurvePoint:
        if raw is None:
            return INFINITY
        p = self.modulus
        return CurvePoint(FieldElement(raw[0], p), FieldElement(raw[1], p))

    def add(self, P: CurvePoint, Q: CurvePoint) -> CurvePoint:
        self.ensure_on_curve(P, Q)
        return self._wrap(_add_raw(self.modulus, self.a.value,
                                   self._raw(P), self._raw(Q)))

    def neg(self, P: CurvePoint) -> CurvePoint:
        self.ensure_on_curve(P)
        if P.is_infinity:
            return P
        return CurvePoint(P.x, -P.y)

    def sub(self, P: CurvePoint, Q: CurvePoint) -> CurvePoint:
        return self.add(P, self.neg(Q))

    def double(self, P: CurvePoint) -> CurvePoint:
        return self.add(P, P)

    def scalar_mul(self, P: CurvePoint, n: int) -> CurvePoint:
        self.ensure_on_curve(P)
        if n < 0:
            return self.scalar_mul(self.neg(P), -n)
        return self._wrap(_scalar_raw(self.modulus, self.a.value, self._raw(P), n))

    def is_inflection(self, P: CurvePoint) -> bool:
        """True iff 3P = O (O itself is the chosen inflection)."""
        self.ensure_on_curve(P)
        return self.scalar_mul(P, 3).is_infinity

    def division_poly_3(self) -> Poly:
        """psi_3(x) = 3x^4 + 6a x^2 + 12b x - a^2, vanishing at affine inflections."""
        a, b = self.a.value, self.b.value
        return Poly(self.modulus, [-a * a, 12 * b, 6 * a, 0, 3])

    def two_torsion(self) -> "TwoTorsionSet":
        return TwoTorsionSet.of(self)

    def points(self) -> Iterator[CurvePoint]:
        """Every point of E(F_p) by x-scan; O first. Only sane for small p."""
        yield INFINITY
        p = self.modulus
        for x in range(p):
            xe = FieldElement(x, p)
            ys = sqrt(self.rhs(xe))
            if ys is None:
                continue
            for y in ys:
                yield CurvePoint(xe, y)

    def group_order(self) -> int:
        return sum(1 for _ in self.points())


@dataclass(frozen=True)
class TwoTorsionSet:
    """The three nontrivial two-torsion points, sorted by x representative.

    Together with O they form a Klein four-group: t_i + t_j = t_k for
    {i, j, k} = {1, 2, 3}.
    """

    t1: CurvePoint
    t2: CurvePoint
    t3: CurvePoint

    @classmethod
    def of(cls, E: Curve) -> "TwoTorsionSet":
        cubic = Poly(E.modulus, [E.b.value, E.a.value, 0, 1])
        xs = roots(cubic)
        if len(xs) != 3 or len({x.value for x in xs}) != 3:
            raise TorsionNotRational(
                f"x^3 + {E.a.value}x + {E.b.value} does not split into three "
                f"distinct roots mod {E.modulus}")
        zero = FieldElement(0, E.modulus)
        pts = sorted((CurvePoint(x, zero) for x in xs), key=CurvePoint.key)
        return cls(*pts)

    def as_tuple(self):
        return (self.t1, self.t2, self.t3)

    def label_of(self, T: CurvePoint) -> int:
        """1-based index of T; raises if T is not one of the three."""
        for i, t in enumerate(self.as_tuple(), 1):
            if t == T:
                return i
        raise DegenerateInput(f"{T} is not a nontrivial two-torsion point here")

    def __iter__(self):
        return iter(self.as_tuple())
