"""Tangent-line fans: the four lines through a non-inflection point.

For an affine non-inflection P on E there are four lines through P
tangent to E elsewhere; their tangent points Q satisfy P + 2Q = O, so
they are exactly the halvings of -P.  Labels are made canonical here:
Q1 is the minimal preimage in point order and Q_{i+1} is forced by
Q1 - Q_{i+1} = T_i.  Under that labeling the torsion point associated
to a pair of fan lines, T = P + Q_i + Q_j, follows the fixed table

    {1,2} -> T1   {1,3} -> T2   {1,4} -> T3
    {3,4} -> T1   {2,4} -> T2   {2,3} -> T3
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional

from .curve import Curve, CurvePoint, TwoTorsionSet
from .errors import (BadIndexPair, DegenerateFan, DegenerateInput,
                     FanNotRational, InflectionBasePoint, ModulusMismatch,
                     NotTangentConfiguration, TorsionNotRational)
from .field import FieldElement, Poly, roots, sqrt


@dataclass(frozen=True)
class Line:
    """Projective line ux + vy + w = 0 with the first nonzero coefficient 1."""

    u: FieldElement
    v: FieldElement
    w: FieldElement

    def __post_init__(self):
        for c in (self.v, self.w):
            if c.modulus != self.u.modulus:
                raise ModulusMismatch("line coefficients in different fields")
        if self.u.is_zero() and self.v.is_zero() and self.w.is_zero():
            raise DegenerateInput("all-zero line coefficients")
        lead = next(c for c in (self.u, self.v, self.w) if not c.is_zero())
        if lead.value != 1:
            inv = lead.inverse()
            object.__setattr__(self, "u", self.u * inv)
            object.__setattr__(self, "v", self.v * inv)
            object.__setattr__(self, "w", self.w * inv)

    @classmethod
    def from_ints(cls, p: int, u: int, v: int, w: int) -> "Line":
        return cls(FieldElement(u, p), FieldElement(v, p), FieldElement(w, p))

    def evaluate(self, P: CurvePoint) -> FieldElement:
        if P.is_infinity:
            raise DegenerateInput("cannot evaluate an affine line form at O")
        return self.u * P.x + self.v * P.y + self.w

    def contains(self, P: CurvePoint) -> bool:
        return self.evaluate(P).is_zero()

    def coefficients(self):
        return (self.u, self.v, self.w)

    def format(self) -> str:
        return f"{self.u.value}:{self.v.value}:{self.w.value}"

    def __repr__(self):
        return f"Line({self.format()})"


def tangent_line_at(E: Curve, Q: CurvePoint) -> Line:
    """The tangent line to E at an affine Q (vertical when y = 0)."""
    E.ensure_on_curve(Q)
    if Q.is_infinity:
        raise DegenerateInput("tangent at O is the line at infinity")
    p = E.modulus
    if Q.y.is_zero():
        return Line(FieldElement(1, p), FieldElement(0, p), -Q.x)
    lam = (3 * Q.x ** 2 + E.a) / (2 * Q.y)
    # y = lam*(x - x_Q) + y_Q  ->  lam*x - y + (y_Q - lam*x_Q) = 0
    return Line(lam, FieldElement(-1, p), Q.y - lam * Q.x)


def line_through_tangent(E: Curve, P: CurvePoint, Q: CurvePoint) -> Line:
    """Tangent line at Q, checked to be a fan line of P (divisor 2Q + P)."""
    E.ensure_on_curve(P, Q)
    if Q.is_infinity or P.is_infinity:
        raise NotTangentConfiguration("P and Q must be affine")
    if Q == P:
        raise NotTangentConfiguration("tangent point must differ from the base point")
    if E.double(Q) != E.neg(P):
        raise NotTangentConfiguration(
            f"2*{Q} != -{P}: the tangent at {Q} does not pass through {P}")
    return tangent_line_at(E, Q)


def halving_quartic(E: Curve, R: CurvePoint) -> Poly:
    """Quartic whose roots are the x-coordinates of solutions of 2Q = R.

    Clearing the doubling identity x(2Q) = ((x^2-a)^2 - 8bx) / (4(x^3+ax+b))
    against x(R) gives
        x^4 - 4 x_R x^3 - 2a x^2 - (4a x_R + 8b) x + (a^2 - 4b x_R).
    """
    if R.is_infinity:
        raise DegenerateInput("halving O is the two-torsion computation")
    a, b, xr = E.a.value, E.b.value, R.x.value
    p = E.modulus
    return Poly(p, [a * a - 4 * b * xr, -(4 * a * xr + 8 * b), -2 * a, -4 * xr, 1])


def halve(E: Curve, R: CurvePoint) -> list[CurvePoint]:
    """All Q in E(F_p) with 2Q = R, in canonical point order.

    The quartic only constrains x; candidates are completed with both
    square roots of the curve equation and kept when doubling actually
    returns R, which also discards the spurious x where the doubling
    denominator vanishes.
    """
    E.ensure_on_curve(R)
    quartic = halving_quartic(E, R)
    out = []
    seen = set()
    for x in roots(quartic):
        if x.value in seen:
            continue
        seen.add(x.value)
        ys = sqrt(E.rhs(x))
        if ys is None:
            continue
        for y in ys:
            Q = CurvePoint(x, y)
            if E.double(Q) == R and Q not in out:
                out.append(Q)
    return sorted(out, key=CurvePoint.key)


def label_tangent_points(E: Curve, torsion: TwoTorsionSet,
                         preimages) -> tuple[CurvePoint, CurvePoint, CurvePoint, CurvePoint]:
    """Canonical (Q1, Q2, Q3, Q4) from the four halvings of -P.

    Independent of the input order: Q1 is minimal in point order and
    Q1 - Q_{i+1} = T_i pins down the rest.
    """
    qs = sorted(preimages, key=CurvePoint.key)
    if len(qs) != 4 or len(set(qs)) != 4:
        raise DegenerateFan(f"need four distinct tangent points, got {qs}")
    q1 = qs[0]
    by_torsion = {}
    for q in qs[1:]:
        diff = E.sub(q1, q)
        by_torsion[diff] = q
    try:
        ordered = (q1, by_torsion[torsion.t1], by_torsion[torsion.t2],
                   by_torsion[torsion.t3])
    except KeyError as missing:
        raise DegenerateFan(
            f"tangent points do not differ by the two-torsion set: {missing}")
    return ordered


@dataclass(frozen=True)
class TangentFan:
    """A base point with its four tangent lines, canonically labeled.

    Invariants (all enforced at construction): each line is tangent to
    the curve at Q_i and passes through the base point, P + 2Q_i = O,
    and Q1 - Q_{i+1} = T_i.
    """

    curve: Curve
    base: CurvePoint
    tangent_points: tuple[CurvePoint, CurvePoint, CurvePoint, CurvePoint]
    lines: tuple[Line, Line, Line, Line]
    torsion: TwoTorsionSet

    def tangent_point(self, i: int) -> CurvePoint:
        """Q_i, 1-based."""
        if not 1 <= i <= 4:
            raise BadIndexPair(f"tangent index must be 1..4, got {i}")
        return self.tangent_points[i - 1]

    def line(self, i: int) -> Line:
        """L_i, 1-based."""
        if not 1 <= i <= 4:
            raise BadIndexPair(f"line index must be 1..4, got {i}")
        return self.lines[i - 1]

    def associated_torsion(self, pair) -> CurvePoint:
        """T = P + Q_i + Q_j for an unordered index pair {i, j}."""
        i, j = normalize_index_pair(pair)
        E = self.curve
        return E.add(E.add(self.base, self.tangent_point(i)), self.tangent_point(j))

    def pair_table(self):
        """All six pairs with their associated torsion, in index order."""
        out = []
        for i in range(1, 5):
            for j in range(i + 1, 5):
                out.append(((i, j), self.associated_torsion((i, j))))
        return out


def normalize_index_pair(pair) -> tuple[int, int]:
    """Validate and sort an index pair {i, j} inside {1, 2, 3, 4}."""
    try:
        vals = tuple(int(v) for v in pair)
    except (TypeError, ValueError):
        raise BadIndexPair(f"index pair must be two integers, got {pair!r}")
    if len(vals) != 2:
        raise BadIndexPair(f"index pair must have exactly two entries, got {pair!r}")
    i, j = sorted(vals)
    if i == j:
        raise BadIndexPair(f"index pair entries must differ, got {pair!r}")
    if not (1 <= i <= 4 and 1 <= j <= 4):
        raise BadIndexPair(f"indices must lie in 1..4, got {pair!r}")
    return (i, j)


def complement_pair(pair) -> tuple[int, int]:
    i, j = normalize_index_pair(pair)
    return tuple(sorted(set((1, 2, 3, 4)) - {i, j}))


def tangent_fan(E: Curve, P: CurvePoint) -> TangentFan:
    """Build the canonical tangent fan at a non-inflection affine point."""
    E.ensure_on_curve(P)
    torsion = E.two_torsion()
    if P.is_infinity or E.is_inflection(P):
        raise InflectionBasePoint(
            f"{P} is an inflection point: no fan of simple tangents")
    preimages = halve(E, E.neg(P))
    if len(preimages) < 4:
        raise FanNotRational(
            f"only {len(preimages)} of the four tangent points of {P} are "
            f"rational over F_{E.modulus}")
    qs = label_tangent_points(E, torsion, preimages)
    if P in qs:
        raise DegenerateFan(f"tangent point coincides with the base point {P}")
    lines = tuple(tangent_line_at(E, q) for q in qs)
    if len(set(lines)) != 4:
        raise DegenerateFan(f"tangent lines through {P} are not pairwise distinct")
    for line in lines:
        if not line.contains(P):
            raise DegenerateFan(f"{line} misses the base point {P}")
    return TangentFan(E, P, qs, lines, torsion)


@dataclass(frozen=True)
class TangentPair:
    """A fan together with a chosen unordered pair of its line indices."""

    fan: TangentFan
    indices: tuple[int, int]

    def __post_init__(self):
        object.__setattr__(self, "indices", normalize_index_pair(self.indices))

    @property
    def base(self) -> CurvePoint:
        return self.fan.base

    def lines(self) -> tuple[Line, Line]:
        return (self.fan.line(self.indices[0]), self.fan.line(self.indices[1]))

    def torsion(self) -> CurvePoint:
        return self.fan.associated_torsion(self.indices)


def is_admissible_base(E: Curve, P: CurvePoint,
                       torsion: Optional[TwoTorsionSet] = None) -> bool:
    """Affine, non-inflection, and all four tangent points rational."""
    if P.is_infinity or not E.contains(P):
        return False
    if torsion is None:
        try:
            E.two_torsion()
        except TorsionNotRational:
            return False
    if E.is_inflection(P):
        return False
    return len(halve(E, E.neg(P))) == 4


def iter_admissible_points(E: Curve) -> Iterator[CurvePoint]:
    """All fan-admissible base points, in point order, by exhaustion.

    Intended for p up to ~2**20; the scan walks every x once.
    """
    torsion = E.two_torsion()
    for P in E.points():
        if P.is_infinity:
            continue
        if E.is_inflection(P):
            continue
        if len(halve(E, E.neg(P))) == 4:
            yield P
