"""Arrangements of a cubic with chosen tangent-line pairs.

An arrangement is the curve together with n members, each a base point
carrying an unordered pair of its fan-line indices.  Construction
validates the combinatorial genericity (distinct base points, 2n
distinct lines, no three lines concurrent) instead of assuming it;
over small fields genericity fails often enough that silent wrong
answers would be worse than loud rejections.

Each member is sent to the two-torsion point associated with its line
pair.  Whether two members share that image decides the splitting
number (2 when equal, else 1) of the cubic in the double cover branched
along their four lines; the criterion is evaluated on torsion points
only, the cover itself is never built.  The multiset of the three fiber
sizes of that map, sorted descending, is the arrangement's 3-partition
invariant.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .curve import Curve, CurvePoint
from .errors import (BadInput, ConcurrentLines, DegenerateFan, DegenerateInput,
                     DuplicateBasePoint, DuplicateLine, FanNotRational,
                     InflectionBasePoint, SamePairQuery)
from .tangent import (Line, TangentPair, normalize_index_pair, tangent_fan)


@dataclass(frozen=True)
class Partition3:
    """Sorted triple m1 >= m2 >= m3 >= 0."""

    m1: int
    m2: int
    m3: int

    def __post_init__(self):
        if not (self.m1 >= self.m2 >= self.m3 >= 0):
            raise DegenerateInput(
                f"partition entries must be sorted non-negative, got "
                f"({self.m1},{self.m2},{self.m3})")

    @classmethod
    def from_counts(cls, counts) -> "Partition3":
        vals = sorted((int(c) for c in counts), reverse=True)
        if len(vals) != 3:
            raise DegenerateInput(f"need exactly three counts, got {counts!r}")
        return cls(*vals)

    @property
    def total(self) -> int:
        return self.m1 + self.m2 + self.m3

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.m1, self.m2, self.m3)

    def __repr__(self):
        return f"({self.m1},{self.m2},{self.m3})"


def lines_concurrent(l1: Line, l2: Line, l3: Line) -> bool:
    """Three lines share a projective point iff their coefficient det vanishes."""
    a, b, c = l1.coefficients()
    d, e, f = l2.coefficients()
    g, h, i = l3.coefficients()
    det = a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)
    return det.is_zero()


@dataclass(frozen=True)
class Arrangement:
    """Validated curve-plus-tangent-pairs configuration."""

    curve: Curve
    members: tuple[TangentPair, ...]

    @property
    def n(self) -> int:
        return len(self.members)

    def base_points(self) -> tuple[CurvePoint, ...]:
        return tuple(m.base for m in self.members)

    def lines(self) -> tuple[Line, ...]:
        out = []
        for m in self.members:
            out.extend(m.lines())
        return tuple(out)

    def member(self, i: int) -> TangentPair:
        return self.members[i]


def _validate(curve: Curve, members) -> Arrangement:
    members = tuple(members)
    if not members:
        raise DegenerateInput("an arrangement needs at least one member")
    bases = [m.base for m in members]
    for i, j in itertools.combinations(range(len(bases)), 2):
        if bases[i] == bases[j]:
            raise DuplicateBasePoint(
                f"members {i} and {j} share the base point {bases[i]}")
    lines = []
    for m in members:
        lines.extend(m.lines())
    for i, j in itertools.combinations(range(len(lines)), 2):
        if lines[i] == lines[j]:
            raise DuplicateLine(f"lines {i} and {j} coincide: {lines[i]}")
    for triple in itertools.combinations(range(len(lines)), 3):
        if lines_concurrent(*(lines[k] for k in triple)):
            raise ConcurrentLines(
                f"lines {triple} meet in a point "
                f"({', '.join(lines[k].format() for k in triple)})",
                triple=triple)
    return Arrangement(curve, members)


def arrangement_from_pairs(curve: Curve, members) -> Arrangement:
    """Validate prebuilt tangent pairs (fans are not recomputed)."""
    members = tuple(members)
    for m in members:
        if m.fan.curve != curve:
            raise BadInput("member fan built on a different curve")
    return _validate(curve, members)


def build_arrangement(curve: Curve, choices) -> Arrangement:
    """Build fans for (base point, index pair) choices and validate.

    choices: iterable of (CurvePoint, pair); fan construction errors
    (inflection base, missing rational tangent points) propagate.
    """
    members = []
    for P, pair in choices:
        fan = tangent_fan(curve, P)
        members.append(TangentPair(fan, normalize_index_pair(pair)))
    return _validate(curve, members)


def select_generic_bases(E: Curve, n: int, candidates=None) -> list[CurvePoint]:
    """Greedily pick n admissible base points whose full fans are generic.

    A point is kept only if, over all 4 lines of every kept fan, no two
    lines coincide and no three lines from two or more fans are
    concurrent (the four lines of one fan always meet at its base point,
    but an arrangement never takes more than two of them).  Arrangements
    over the selection then validate for every index-pair choice.
    candidates defaults to the exhaustive admissible-point scan.
    """
    from .tangent import iter_admissible_points

    if candidates is None:
        candidates = iter_admissible_points(E)
    kept_lines: list[Line] = []
    owner: list[int] = []  # fan index per kept line
    kept: list[CurvePoint] = []
    for P in candidates:
        if len(kept) == n:
            break
        if P in kept:
            continue
        try:
            fan = tangent_fan(E, P)
        except (DegenerateFan, FanNotRational, InflectionBasePoint):
            continue
        pool = kept_lines + list(fan.lines)
        pool_owner = owner + [len(kept)] * 4
        if len(set(pool)) != len(pool):
            continue
        if any(lines_concurrent(pool[i], pool[j], pool[k])
               for i, j, k in itertools.combinations(range(len(pool)), 3)
               if k >= len(kept_lines)
               and len({pool_owner[i], pool_owner[j], pool_owner[k]}) > 1):
            continue
        kept.append(P)
        kept_lines = pool
        owner = pool_owner
    if len(kept) < n:
        raise DegenerateInput(
            f"could not find {n} generically placed base points over "
            f"F_{E.modulus} (found {len(kept)})")
    return kept


def phi(A: Arrangement, i: int) -> CurvePoint:
    """Two-torsion image of member i (0-based)."""
    if not 0 <= i < A.n:
        raise IndexError(f"member index out of range: {i} with n={A.n}")
    return A.members[i].torsion()


def phi_fibers(A: Arrangement) -> tuple[int, int, int]:
    """Raw fiber sizes over (T1, T2, T3) in canonical torsion order."""
    torsion = A.members[0].fan.torsion
    counts = [0, 0, 0]
    for i in range(A.n):
        counts[torsion.label_of(phi(A, i)) - 1] += 1
    return tuple(counts)


def partition_invariant(A: Arrangement) -> Partition3:
    """Fiber sizes sorted descending: invariant under torsion relabeling."""
    return Partition3.from_counts(phi_fibers(A))


def splitting_predicate(A: Arrangement, i: int, j: int) -> int:
    """Splitting number (1 or 2) of the cubic for members i and j.

    2 exactly when both members share their associated two-torsion
    point; evaluated via the torsion criterion, not the double cover.
    """
    if i == j:
        raise SamePairQuery(f"splitting number needs two distinct members, got {i}")
    if not (0 <= i < A.n and 0 <= j < A.n):
        raise IndexError(f"member index out of range: {i}, {j} with n={A.n}")
    return 2 if phi(A, i) == phi(A, j) else 1


def parity_criterion(pair1, pair2) -> int:
    """Combinatorial twin of splitting_predicate under canonical labels.

    2 when |pair1 & pair2| is even (0 or 2), else 1.
    """
    p1 = set(normalize_index_pair(pair1))
    p2 = set(normalize_index_pair(pair2))
    return 2 if len(p1 & p2) % 2 == 0 else 1
