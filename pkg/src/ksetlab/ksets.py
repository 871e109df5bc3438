"""
Brute-force k-sets in the primal plane.

This is the oracle the dual pipeline is checked against. A directed k-set is a set of
exactly k points lying strictly on one side (above or below) of some non-vertical line.
Every such set is obtained from the line through two points p, q of the instance by
moving p to the counted side and q to the other one, so enumerating the O(n^2) pair
lines with both perturbations is complete.
"""
from collections import defaultdict
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Dict, FrozenSet, Iterable, List, Sequence, Tuple

from .errors import GeneralPositionError, InstanceError, check_k
from .geometry import Line, Point, line_through, orient


class Side(str, Enum):
    ABOVE = "above"
    BELOW = "below"


@dataclass(frozen=True)
class Violation:
    """One general position failure, naming the offending point indices"""
    kind: str  # "shared_x" or "collinear"
    indices: Tuple[int, ...]

    def __str__(self) -> str:
        return f"{self.kind}{self.indices}"


def validate_general_position(points: Sequence[Point]) -> List[Violation]:
    """
    Check that no two points share an x-coordinate and no three are collinear.

    Returns:
        The violations, shared-x pairs first, then collinear triples; empty when ok.
    """
    if len(points) < 2:
        raise InstanceError(f"need at least 2 points, got {len(points)}")

    violations = []
    by_x = defaultdict(list)
    for i, p in enumerate(points):
        by_x[p.x].append(i)
    for indices in sorted(by_x.values()):
        for pair in combinations(indices, 2):
            violations.append(Violation("shared_x", pair))

    # Group later points by direction from each point; a bucket of two or more is a collinear triple.
    triples = set()
    for i, p in enumerate(points):
        buckets = defaultdict(list)
        for j in range(i + 1, len(points)):
            q = points[j]
            key = None if q.x == p.x else (q.y - p.y) / (q.x - p.x)
            buckets[key].append(j)
        for members in buckets.values():
            for j, l in combinations(members, 2):
                triples.add((i, j, l))
    violations.extend(Violation("collinear", t) for t in sorted(triples))
    return violations


@dataclass(frozen=True)
class Instance:
    """A validated planar point set; point labels are list indices"""
    points: Tuple[Point, ...]

    def __post_init__(self):
        object.__setattr__(self, "points", tuple(self.points))
        violations = validate_general_position(self.points)
        if violations:
            raise GeneralPositionError(violations)

    @property
    def n(self) -> int:
        return len(self.points)

    @classmethod
    def from_coords(cls, coords: Iterable[Tuple]) -> "Instance":
        return cls(tuple(Point(x, y) for x, y in coords))


def reflect(inst: Instance) -> Instance:
    """Point reflection (x, y) -> (-x, -y); swaps the above and below sides of every line"""
    return Instance(tuple(Point(-p.x, -p.y) for p in inst.points))


@dataclass(frozen=True)
class KSetFamily:
    k: int
    side: Side
    sets: Tuple[FrozenSet[int], ...]

    def __len__(self) -> int:
        return len(self.sets)

    def __contains__(self, subset) -> bool:
        return frozenset(subset) in self.sets


@dataclass(frozen=True)
class PairSplit:
    """Points strictly above and strictly below the line through a pair"""
    line: Line
    above: FrozenSet[int]
    below: FrozenSet[int]


@lru_cache(maxsize=64)
def pair_splits(inst: Instance) -> Dict[Tuple[int, int], PairSplit]:
    """Split of the instance by the line through every pair (i, j), i < j"""
    splits = {}
    for i, j in combinations(range(inst.n), 2):
        line = line_through(inst.points[i], inst.points[j])
        above, below = set(), set()
        for r, p in enumerate(inst.points):
            if r == i or r == j:
                continue
            (above if line.side_of(p) > 0 else below).add(r)
        splits[(i, j)] = PairSplit(line, frozenset(above), frozenset(below))
    return splits


def _family_key(subset: FrozenSet[int]) -> Tuple[int, ...]:
    return tuple(sorted(subset))


def enumerate_directed_ksets(inst: Instance, k: int, side: Side) -> KSetFamily:
    """All k-subsets lying strictly on `side` of some non-vertical line"""
    side = Side(side)
    check_k(k, 1, inst.n - 1)
    found = set()
    for (i, j), split in pair_splits(inst).items():
        base = split.above if side is Side.ABOVE else split.below
        if len(base) != k - 1:
            continue
        found.add(base | {i})
        found.add(base | {j})
    return KSetFamily(k, side, tuple(sorted(found, key=_family_key)))


def count_directed_ksets(inst: Instance, k: int, side: Side) -> int:
    return len(enumerate_directed_ksets(inst, k, side))


def count_at_most_k(inst: Instance, k: int, side: Side) -> int:
    """Number of directed j-sets for j = 1..k, to be compared with n*k"""
    check_k(k, 1, inst.n - 1)
    return sum(count_directed_ksets(inst, j, side) for j in range(1, k + 1))


def count_undirected_ksets(inst: Instance, k: int) -> int:
    """Distinct k-subsets cut off on either side; a set may be realizable on one side only"""
    above = set(enumerate_directed_ksets(inst, k, Side.ABOVE).sets)
    below = set(enumerate_directed_ksets(inst, k, Side.BELOW).sets)
    return len(above | below)


def count_both_sides(inst: Instance, k: int) -> int:
    """Above and below families summed, the convention of counting (set, side) pairs"""
    return count_directed_ksets(inst, k, Side.ABOVE) + count_directed_ksets(inst, k, Side.BELOW)


def is_realizable(points: Sequence[Point], subset: Iterable[int], side: Side) -> bool:
    """
    Exact test that `subset` lies strictly on `side` of some line y = m*x + c with the
    rest strictly on the other side.

    The feasible (m, c) pairs satisfy max_out(y_j - m*x_j) < c < min_in(y_i - m*x_i).
    The gap g(m) = min_in - max_out is concave and piecewise linear, so its supremum is
    reached at a breakpoint (a pairwise slope) or it grows without bound at one end.
    """
    side = Side(side)
    inside = set(subset)
    upper = [p for i, p in enumerate(points) if i in inside]
    lower = [p for i, p in enumerate(points) if i not in inside]
    if side is Side.BELOW:
        # mirror vertically so the counted side is above
        upper, lower = [Point(p.x, -p.y) for p in upper], [Point(p.x, -p.y) for p in lower]
    if not upper or not lower:
        return True

    def gap(m: Fraction) -> Fraction:
        return min(p.y - m * p.x for p in upper) - max(p.y - m * p.x for p in lower)

    # slope of g towards +inf and -inf
    if min(p.x for p in lower) - max(p.x for p in upper) > 0:
        return True
    if max(p.x for p in lower) - min(p.x for p in upper) < 0:
        return True

    candidates = {Fraction(0)}
    for p, q in combinations(upper + lower, 2):
        if p.x != q.x:
            candidates.add((q.y - p.y) / (q.x - p.x))
    return any(gap(m) > 0 for m in candidates)
