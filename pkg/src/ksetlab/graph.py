"""
The geometric graph G on the primal points and its crossings.

G joins two points when exactly k-1 points lie strictly above their line. The line's
dual point is then a V_{k-1} vertex of the arrangement, so t = |E(G)| = |V_{k-1}|.
G is built in the primal plane and must agree edge for edge with the dual class.
"""
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import List, Optional, Sequence, Tuple

from .arrangement import Arrangement, ArrVertex, build_arrangement
from .chains import ChainSet, Tangent, tangent_through
from .errors import CrossCheckMismatch, TangentViolation, check_k
from .geometry import Line, Point, Segment, crossing_point, dualize_point, segments_properly_cross
from .ksets import Instance, pair_splits

CROSSING_CONSTANT = Fraction(1, 64)


@dataclass(frozen=True)
class GraphEdge:
    pair: Tuple[int, int]
    segment: Segment
    dual_vertex: ArrVertex


@dataclass(frozen=True)
class KSetGraph:
    k: int
    n: int
    edges: Tuple[GraphEdge, ...]

    @property
    def t(self) -> int:
        return len(self.edges)


@dataclass(frozen=True)
class CrossingRecord:
    edges: Tuple[GraphEdge, GraphEdge]
    point: Point
    tangent_line: Line


@dataclass(frozen=True)
class CrossingLemmaCheck:
    applicable: bool
    threshold: Fraction
    holds: bool


def build_graph(inst: Instance, k: int, arr: Optional[Arrangement] = None) -> KSetGraph:
    """
    Raises:
        CrossCheckMismatch: the primal edge set differs from V_{k-1} of the arrangement
    """
    check_k(k, 1, inst.n - 1)
    arr = arr or build_arrangement(inst)
    edges = []
    for pair, split in pair_splits(inst).items():
        if len(split.above) != k - 1:
            continue
        vertex = arr.vertex_of_pair.get(pair)
        if vertex is None or vertex.location != split.line.dual_point():
            raise CrossCheckMismatch(f"line of pair {pair} does not dualize to its vertex")
        if vertex.below_count != k - 1:
            raise CrossCheckMismatch(
                f"pair {pair} has {k - 1} points above but its vertex has {vertex.below_count} lines below"
            )
        i, j = pair
        edges.append(GraphEdge(pair, Segment(inst.points[i], inst.points[j]), vertex))

    dual_pairs = sorted(v.line_pair for v in arr.vertex_class(k - 1))
    if sorted(e.pair for e in edges) != dual_pairs:
        raise CrossCheckMismatch(f"G has {len(edges)} edges but |V_{k - 1}| = {len(dual_pairs)}")
    return KSetGraph(k, inst.n, tuple(edges))


def count_proper_crossings(segments: Sequence[Segment]) -> List[Tuple[int, int, Point]]:
    """Index pairs of properly crossing segments with their crossing point, in index order"""
    found = []
    for a, b in combinations(range(len(segments)), 2):
        if segments_properly_cross(segments[a], segments[b]):
            found.append((a, b, crossing_point(segments[a], segments[b])))
    return found


def crossing_number(graph: KSetGraph) -> Tuple[int, List[CrossingRecord]]:
    records = [
        CrossingRecord((graph.edges[a], graph.edges[b]), point, dualize_point(point))
        for a, b, point in count_proper_crossings([e.segment for e in graph.edges])
    ]
    return len(records), records


def crossing_lemma_check(t: int, n: int, x: int) -> CrossingLemmaCheck:
    """At least t^3 / (64 n^2) crossings once t > 4n; vacuous otherwise"""
    threshold = CROSSING_CONSTANT * Fraction(t ** 3, n ** 2) if n else Fraction(0)
    applicable = t > 4 * n
    return CrossingLemmaCheck(applicable, threshold, x >= threshold if applicable else True)


def crossing_to_tangent(record: CrossingRecord, chains: ChainSet) -> Tangent:
    """
    The dual line of a crossing point passes through the dual vertices of both edges,
    which are turns of two different chains, and is a strict common tangent there.

    Raises:
        TangentViolation: any part of that correspondence fails
    """
    owner = chains.turn_owner()
    first, second = record.edges
    u, w = first.dual_vertex, second.dual_vertex
    if not (record.tangent_line.contains(u.location) and record.tangent_line.contains(w.location)):
        raise TangentViolation(f"dual line of {record.point} misses an edge's dual vertex")
    if u.line_pair not in owner or w.line_pair not in owner:
        raise TangentViolation(f"dual vertex of a crossing edge at {record.point} is not a chain turn")
    (ci, ti), (cj, tj) = owner[u.line_pair], owner[w.line_pair]
    if ci == cj:
        raise TangentViolation(f"both edges crossing at {record.point} turn on chain {ci}")
    tangent = tangent_through(chains, ci, ti, cj, tj)
    if tangent is None or tangent.line != record.tangent_line:
        raise TangentViolation(f"dual line of {record.point} is not a strict common tangent")
    return tangent


def witness_line(inst: Instance, edge: GraphEdge) -> Line:
    """
    A line realizing a k-set above from a G edge: the edge's line tilted about the
    edge midpoint so the left endpoint falls below it and the right endpoint rises
    above it. The tilt stays under every other point's vertical clearance.
    """
    p, q = edge.segment.p, edge.segment.q
    line = edge.segment.supporting_line()
    mid_x = (p.x + q.x) / 2
    others = [r for r in inst.points if r != p and r != q]
    clearance = min((abs(r.y - line.at(r.x)) for r in others), default=Fraction(1))
    reach = max((abs(r.x - mid_x) for r in others), default=Fraction(0))
    a = line.a - clearance / (2 * (reach + 1))
    return Line(a, a * mid_x - line.at(mid_x))
