"""Randomized property suite behind the `verify` command.

Instances are drawn deterministically from a seed: random primes
5 < p < 2**14, curves built from three random two-torsion roots
(r1 + r2 + r3 = 0, so the cubic always splits), and admissible base
points found by rejection sampling.  Trial i always uses its own child
generator derived from (seed, i), so results aggregate deterministically
whatever the execution order.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Optional

from .arrangement import (arrangement_from_pairs, parity_criterion, phi,
                          splitting_predicate)
from .curve import Curve, CurvePoint, INFINITY
from .errors import ConcurrentLines, CubicfanError, DuplicateLine
from .field import FieldElement, sqrt
from .tangent import TangentPair, is_admissible_base, tangent_fan

PRIME_LOW, PRIME_HIGH = 7, 1 << 14

ALL_PAIRS = tuple(itertools.combinations(range(1, 5), 2))


def _sieve(limit: int) -> list[int]:
    flags = bytearray([1]) * limit
    flags[0:2] = b"\x00\x00"
    for i in range(2, int(limit ** 0.5) + 1):
        if flags[i]:
            flags[i * i::i] = bytearray(len(flags[i * i::i]))
    return [i for i in range(limit) if flags[i]]

_PRIMES = [p for p in _sieve(PRIME_HIGH) if p >= PRIME_LOW]


def child_rng(seed: int, index: int) -> random.Random:
    return random.Random(seed * 1_000_003 + index)


def random_prime(rng: random.Random) -> int:
    return rng.choice(_PRIMES)


def random_split_curve(rng: random.Random, p: Optional[int] = None) -> Curve:
    """Curve with fully rational two-torsion: pick the torsion roots first."""
    if p is None:
        p = random_prime(rng)
    while True:
        r1 = rng.randrange(p)
        r2 = rng.randrange(p)
        r3 = (-r1 - r2) % p
        if len({r1, r2, r3}) != 3:
            continue
        a = (r1 * r2 + r1 * r3 + r2 * r3) % p
        b = (-r1 * r2 * r3) % p
        return Curve.from_ints(p, a, b)


def random_point(rng: random.Random, E: Curve,
                 affine_only: bool = True) -> CurvePoint:
    p = E.modulus
    while True:
        x = FieldElement(rng.randrange(p), p)
        ys = sqrt(E.rhs(x))
        if ys is None:
            continue
        y = rng.choice(ys)
        P = CurvePoint(x, y)
        if affine_only or rng.randrange(8):
            return P
        return INFINITY


def random_admissible_point(rng: random.Random, E: Curve, exclude=(),
                            tries: int = 200) -> Optional[CurvePoint]:
    for _ in range(tries):
        P = random_point(rng, E)
        if P in exclude:
            continue
        if is_admissible_base(E, P):
            return P
    return None


def random_instance(rng: random.Random, n_points: int):
    """(curve, [fans...]) with n distinct admissible base points."""
    while True:
        E = random_split_curve(rng)
        points = []
        for _ in range(n_points):
            P = random_admissible_point(rng, E, exclude=points, tries=60)
            if P is None:
                break
            points.append(P)
        if len(points) == n_points:
            return E, [tangent_fan(E, P) for P in points]


def random_arrangement(rng: random.Random, n: int, p_min: int = 211):
    """Validated random arrangement with n members and random index pairs.

    Base points are filtered for full-fan genericity, so any relabeling
    of the pairs (complements included) still validates.
    """
    from .arrangement import arrangement_from_pairs, select_generic_bases
    from .errors import DegenerateInput

    pool = [q for q in _PRIMES if q >= p_min]
    while True:
        E = random_split_curve(rng, rng.choice(pool))

        def candidates():
            for _ in range(400):
                P = random_admissible_point(rng, E, tries=40)
                if P is not None:
                    yield P

        try:
            bases = select_generic_bases(E, n, candidates())
        except DegenerateInput:
            continue
        members = [TangentPair(tangent_fan(E, P), rng.choice(ALL_PAIRS))
                   for P in bases]
        return arrangement_from_pairs(E, members)


@dataclass
class CheckResult:
    name: str
    trials: int
    failures: int
    detail: str = ""

    @property
    def passed(self) -> bool:
        return self.failures == 0


def check_group_axioms(seed: int, trials: int) -> CheckResult:
    """Associativity, commutativity, identity, inverse on random triples."""
    failures = 0
    detail = ""
    curves = max(10, trials // 1000)
    per_curve = max(1, trials // curves)
    done = 0
    for c in range(curves):
        rng = child_rng(seed, c)
        E = random_split_curve(rng)
        for _ in range(per_curve):
            if done >= trials:
                break
            P, Q, R = (random_point(rng, E, affine_only=False) for _ in range(3))
            checks = (
                E.add(E.add(P, Q), R) == E.add(P, E.add(Q, R)),
                E.add(P, Q) == E.add(Q, P),
                E.add(P, INFINITY) == P,
                E.add(P, E.neg(P)) == INFINITY,
            )
            if not all(checks):
                failures += 1
                detail = detail or f"axiom failure on {E.format()} at {P},{Q},{R}"
            done += 1
    return CheckResult("group-axioms", done, failures, detail)


def check_fan_relations(seed: int, instances: int) -> CheckResult:
    """Defining relations of every fan in random instances.

    Per fan: P + 2Q_i = O; Q_i - Q_j is nontrivial two-torsion for
    i != j; complementary pairs share their associated torsion; the six
    pairs cover {T1, T2, T3} exactly twice each.
    """
    failures = 0
    detail = ""
    for t in range(instances):
        # same child seeds as check_criterion_equivalence: the relations
        # are checked on the very instances the equivalence runs on
        rng = child_rng(seed, 20_000 + t)
        E, fans = random_instance(rng, 2)
        for fan in fans:
            P = fan.base
            bad = []
            for i in range(1, 5):
                if not E.add(P, E.scalar_mul(fan.tangent_point(i), 2)).is_infinity:
                    bad.append(f"P+2Q{i} != O")
            torsion_pts = set(fan.torsion.as_tuple())
            for i, j in itertools.combinations(range(1, 5), 2):
                diff = E.sub(fan.tangent_point(i), fan.tangent_point(j))
                if diff not in torsion_pts:
                    bad.append(f"Q{i}-Q{j} not nontrivial two-torsion")
            table = dict(fan.pair_table())
            for pair in ALL_PAIRS:
                comp = tuple(sorted(set((1, 2, 3, 4)) - set(pair)))
                if table[pair] != table[comp]:
                    bad.append(f"pairs {pair} and {comp} disagree")
            hits = {T: 0 for T in fan.torsion.as_tuple()}
            for T in table.values():
                hits[T] += 1
            if sorted(hits.values()) != [2, 2, 2]:
                bad.append("pair map is not 2-to-1 onto the torsion set")
            if bad:
                failures += 1
                detail = detail or f"{E.format()} P={P}: {'; '.join(bad)}"
    return CheckResult("fan-relations", instances, failures, detail)


def check_criterion_equivalence(seed: int, instances: int) -> CheckResult:
    """splitting_predicate == parity_criterion on all 36 pair-of-pair combos."""
    failures = 0
    detail = ""
    for t in range(instances):
        rng = child_rng(seed, 20_000 + t)
        E, fans = random_instance(rng, 2)
        fan1, fan2 = fans
        for pair1 in ALL_PAIRS:
            for pair2 in ALL_PAIRS:
                for _ in range(50):
                    try:
                        A = arrangement_from_pairs(
                            E, (TangentPair(fan1, pair1), TangentPair(fan2, pair2)))
                        break
                    except (ConcurrentLines, DuplicateLine):
                        # genericity failed for this combo; redraw the instance
                        E, fans = random_instance(rng, 2)
                        fan1, fan2 = fans
                else:
                    raise CubicfanError("could not find a generic instance")
                s = splitting_predicate(A, 0, 1)
                c = parity_criterion(pair1, pair2)
                if s != c:
                    failures += 1
                    detail = detail or (
                        f"{E.format()} {pair1} vs {pair2}: predicate {s}, parity {c}")
    return CheckResult("criterion-equivalence", instances * 36, failures, detail)


def run_verify(seed: int, trials: int) -> list[CheckResult]:
    """The full suite; `trials` scales the group-axiom count directly and
    the instance-based checks at 1 per 10 trials (min 10)."""
    instances = max(10, trials // 10)
    return [
        check_group_axioms(seed, trials),
        check_fan_relations(seed, instances),
        check_criterion_equivalence(seed, instances),
    ]
