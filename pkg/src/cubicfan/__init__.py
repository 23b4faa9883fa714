"""Tangent-line fans on smooth cubics over prime fields.

Exact F_p arithmetic, the chord-tangent group law, canonical labeling
of the four tangent lines through a non-inflection point, two-torsion
classification of tangent-pair arrangements, and enumeration of the
3-partition families those arrangements realize.
"""

from .arrangement import (Arrangement, Partition3, build_arrangement,
                          arrangement_from_pairs, lines_concurrent,
                          parity_criterion, partition_invariant, phi,
                          phi_fibers, select_generic_bases,
                          splitting_predicate)
from .classify import (PAIR_FOR_TORSION, PartitionList, enumerate_partitions,
                       partition_count, realize_partition, zariski_nple)
from .curve import (Curve, CurvePoint, INFINITY, TwoTorsionSet, format_point,
                    parse_point)
from .errors import (BadIndexPair, BadInput, ConcurrentLines, CubicfanError,
                     DegenerateFan, DegenerateInput, DivisionByZero,
                     DuplicateBasePoint, DuplicateLine, FanNotRational,
                     InflectionBasePoint, ModulusMismatch,
                     NotTangentConfiguration, PointOffCurve, SamePairQuery,
                     SingularCurve, TorsionNotRational)
from .field import FieldElement, Poly, add, inv, is_prime, mul, roots, sqrt, sub
from .tangent import (Line, TangentFan, TangentPair, complement_pair, halve,
                      halving_quartic, is_admissible_base,
                      iter_admissible_points, label_tangent_points,
                      line_through_tangent, normalize_index_pair, tangent_fan,
                      tangent_line_at)

__version__ = "0.1.0"
