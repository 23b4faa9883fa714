"""3-partitions of n and explicit families realizing every one of them.

The number of triples m1 >= m2 >= m3 >= 0 summing to n has an exact
closed form split by n mod 6; realize_partition constructs, from n
admissible base points, an arrangement whose invariant hits any wanted
partition, and zariski_nple lines up one representative per partition.
All pair choices come from the canonical table {1,2} -> T1,
{1,3} -> T2, {1,4} -> T3.
"""

from __future__ import annotations

from dataclasses import dataclass

from .arrangement import Arrangement, Partition3, build_arrangement
from .curve import Curve, CurvePoint
from .errors import BadInput, DegenerateInput

# index pair whose associated torsion is T_k, under canonical fan labels
PAIR_FOR_TORSION = {1: (1, 2), 2: (1, 3), 3: (1, 4)}


@dataclass(frozen=True)
class PartitionList:
    """Every 3-partition of n, lexicographically descending, no duplicates."""

    n: int
    partitions: tuple[Partition3, ...]

    def __len__(self):
        return len(self.partitions)

    def __iter__(self):
        return iter(self.partitions)

    def __getitem__(self, i):
        return self.partitions[i]


def enumerate_partitions(n: int) -> PartitionList:
    """All (m1, m2, m3) with m1 >= m2 >= m3 >= 0 and m1+m2+m3 = n."""
    if n < 0:
        raise DegenerateInput(f"partition size must be non-negative, got {n}")
    out = []
    for m1 in range(n, -1, -1):
        for m2 in range(min(m1, n - m1), -1, -1):
            m3 = n - m1 - m2
            if 0 <= m3 <= m2:
                out.append(Partition3(m1, m2, m3))
    return PartitionList(n, tuple(out))


def partition_count(n: int) -> int:
    """Number of 3-partitions of n, by the exact closed form on n mod 6."""
    if n < 0:
        raise DegenerateInput(f"partition size must be non-negative, got {n}")
    r = n % 6
    if r == 0:
        num = n * n + 6 * n + 12
    elif r in (1, 5):
        num = (n + 1) * (n + 5)
    elif r in (2, 4):
        num = (n + 2) * (n + 4)
    else:  # r == 3
        num = (n + 3) * (n + 3)
    count, rem = divmod(num, 12)
    if rem:
        raise AssertionError(f"closed form must divide exactly, n={n}")
    return count


def realize_partition(E: Curve, points, target: Partition3) -> Arrangement:
    """Arrangement over the given base points whose invariant is target.

    The first m1 points get the pair for T1, the next m2 the pair for
    T2, the last m3 the pair for T3.
    """
    points = list(points)
    if target.total != len(points):
        raise BadInput(
            f"target {target} sums to {target.total} but {len(points)} "
            f"base points were given")
    choices = []
    for label, size in zip((1, 2, 3), target.as_tuple()):
        for _ in range(size):
            choices.append((points[len(choices)], PAIR_FOR_TORSION[label]))
    return build_arrangement(E, choices)


def zariski_nple(E: Curve, points, n: int) -> list[Arrangement]:
    """One arrangement per 3-partition of n, over the same base points.

    The invariants are pairwise distinct by construction, so the list
    has exactly partition_count(n) mutually distinguished members.
    """
    points = list(points)
    if len(points) < n:
        raise BadInput(f"need {n} base points, got {len(points)}")
    return [realize_partition(E, points[:n], target)
            for target in enumerate_partitions(n)]
