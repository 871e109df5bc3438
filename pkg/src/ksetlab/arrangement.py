"""
Dual line arrangement, vertex classes V_j and k-levels.

The arrangement holds the dual lines of an instance (same indexing as the points).
Each vertex carries its strict below-count j, which places it in V_j. The k-level is
walked edge by edge and every edge is certified by recounting the lines below an
interior sample point.
"""
from bisect import bisect_right
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import combinations
from typing import Dict, List, Optional, Tuple

from .errors import check_k
from .geometry import Line, Point, dualize_point, intersect
from .ksets import Instance


@dataclass(frozen=True)
class ArrVertex:
    location: Point
    line_pair: Tuple[int, int]
    below_count: int

    @property
    def x(self) -> Fraction:
        return self.location.x

    @property
    def y(self) -> Fraction:
        return self.location.y

    def other(self, line: int) -> int:
        i, j = self.line_pair
        return j if line == i else i


@dataclass(frozen=True)
class ArrEdge:
    """Portion of one line between consecutive vertices; None marks an unbounded end"""
    line: int
    left: Optional[ArrVertex]
    right: Optional[ArrVertex]
    below_count: int

    def sample_x(self) -> Fraction:
        return edge_sample_x(self.left, self.right)


def edge_sample_x(left: Optional[ArrVertex], right: Optional[ArrVertex]) -> Fraction:
    """An x strictly inside the edge spanned by two (possibly missing) vertices"""
    if left is None and right is None:
        return Fraction(0)
    if left is None:
        return right.x - 1
    if right is None:
        return left.x + 1
    return (left.x + right.x) / 2


@dataclass(frozen=True)
class Arrangement:
    lines: Tuple[Line, ...]
    vertices: Tuple[ArrVertex, ...]

    @property
    def n(self) -> int:
        return len(self.lines)

    def count_below(self, x: Fraction, line: int) -> int:
        """Lines strictly below `line` at abscissa x"""
        y = self.lines[line].at(x)
        return sum(1 for i, other in enumerate(self.lines) if i != line and other.at(x) < y)

    @cached_property
    def vertex_of_pair(self) -> Dict[Tuple[int, int], ArrVertex]:
        return {v.line_pair: v for v in self.vertices}

    @cached_property
    def vertices_on_line(self) -> Tuple[Tuple[ArrVertex, ...], ...]:
        """Per line, its vertices sorted by x"""
        per_line: List[List[ArrVertex]] = [[] for _ in self.lines]
        for v in self.vertices:
            i, j = v.line_pair
            per_line[i].append(v)
            per_line[j].append(v)
        return tuple(tuple(sorted(vs, key=lambda v: v.x)) for vs in per_line)

    @cached_property
    def classes(self) -> Tuple[Tuple[ArrVertex, ...], ...]:
        """V_0 .. V_{n-2}"""
        buckets: List[List[ArrVertex]] = [[] for _ in range(max(self.n - 1, 1))]
        for v in self.vertices:
            buckets[v.below_count].append(v)
        return tuple(tuple(b) for b in buckets)

    def vertex_class(self, j: int) -> Tuple[ArrVertex, ...]:
        """V_j; empty outside [0, n-2]"""
        if 0 <= j < len(self.classes):
            return self.classes[j]
        return ()

    @cached_property
    def edges(self) -> Tuple[ArrEdge, ...]:
        """Every edge of the arrangement with its certified strict below-count"""
        edges = []
        for line, on_line in enumerate(self.vertices_on_line):
            bounds = (None,) + on_line + (None,)
            for left, right in zip(bounds, bounds[1:]):
                count = self.count_below(edge_sample_x(left, right), line)
                edges.append(ArrEdge(line, left, right, count))
        return tuple(edges)

    def slope_order(self) -> List[int]:
        """Line indices by decreasing slope, i.e. bottom to top at x = -inf"""
        return sorted(range(self.n), key=lambda i: self.lines[i].a, reverse=True)


def build_arrangement(inst: Instance) -> Arrangement:
    """Dualize every point and classify all C(n, 2) vertices by strict below-count"""
    lines = tuple(dualize_point(p) for p in inst.points)
    vertices = []
    for i, j in combinations(range(len(lines)), 2):
        location = intersect(lines[i], lines[j])
        below = sum(
            1 for r, line in enumerate(lines)
            if r != i and r != j and line.at(location.x) < location.y
        )
        vertices.append(ArrVertex(location, (i, j), below))
    vertices.sort(key=lambda v: (v.location, v.line_pair))
    return Arrangement(lines, tuple(vertices))


@dataclass(frozen=True)
class Level:
    """
    The k-level as an x-monotone polyline.

    edge_lines has one entry per edge: len(vertex_seq) + 1, both end edges unbounded.
    edge_counts holds the recounted strict below-count of each edge.
    """
    k: int
    vertex_seq: Tuple[ArrVertex, ...]
    edge_lines: Tuple[int, ...]
    edge_counts: Tuple[int, ...]

    @property
    def certified(self) -> bool:
        return all(c == self.k for c in self.edge_counts)

    def line_at(self, x: Fraction) -> int:
        """Line carrying the level at an abscissa that is not a level vertex"""
        xs = [v.x for v in self.vertex_seq]
        return self.edge_lines[bisect_right(xs, x)]


def extract_k_level(arr: Arrangement, k: int) -> Level:
    """
    Walk the k-level from x = -inf, switching lines at every vertex met on the current
    line. It starts on the line of (k+1)-th largest slope and ends on the line of
    (k+1)-th smallest slope.
    """
    check_k(k, 0, arr.n - 1)
    current = arr.slope_order()[k]
    x = None
    seq, edge_lines = [], [current]
    for _ in range(len(arr.vertices) + 1):
        on_line = arr.vertices_on_line[current]
        if x is None:
            nxt = on_line[0] if on_line else None
        else:
            pos = bisect_right([v.x for v in on_line], x)
            nxt = on_line[pos] if pos < len(on_line) else None
        if nxt is None:
            break
        seq.append(nxt)
        x = nxt.x
        current = nxt.other(current)
        edge_lines.append(current)

    bounds = [None] + seq + [None]
    counts = tuple(
        arr.count_below(edge_sample_x(left, right), line)
        for line, left, right in zip(edge_lines, bounds, bounds[1:])
    )
    return Level(k, tuple(seq), tuple(edge_lines), counts)


@dataclass(frozen=True)
class LevelProfile:
    k: int
    counts: Tuple[int, ...]  # |V_j| for j = 0 .. n-2
    below_level: int         # sum of |V_j| for j <= k-1
    nk: int

    @property
    def within_bound(self) -> bool:
        return self.below_level <= self.nk


def level_profile(arr: Arrangement, k: int) -> LevelProfile:
    check_k(k, 1, arr.n - 1)
    counts = tuple(len(c) for c in arr.classes)
    return LevelProfile(k, counts, sum(counts[:k]), arr.n * k)
