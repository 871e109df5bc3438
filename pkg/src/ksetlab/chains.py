"""
Concave chain decomposition of the arrangement below the k-level.

A left-to-right sweep keeps k chains on the k lowest lines. At a vertex whose
below-count is at most k-2 both incident chains go straight through (the chains
cross); at a V_{k-1} vertex the chain on the steeper line turns onto the other line.
Chains are numbered by slope rank at x = -inf, chain 1 on the steepest line.
"""
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Dict, List, Optional, Tuple

from .arrangement import Arrangement, ArrVertex
from .errors import ChargeFailure, DecompositionError, check_k
from .geometry import Line, line_through

Interval = Tuple[Optional[Fraction], Optional[Fraction]]


@dataclass(frozen=True)
class Piece:
    line: int
    interval: Interval  # None stands for -inf on the left, +inf on the right

    def contains_x(self, x: Fraction) -> bool:
        lo, hi = self.interval
        return (lo is None or lo < x) and (hi is None or x < hi)


@dataclass(frozen=True)
class Chain:
    id: int
    pieces: Tuple[Piece, ...]
    turns: Tuple[ArrVertex, ...]

    def line_at(self, x: Fraction) -> int:
        """Line carrying the chain at an abscissa that is not a turn"""
        for piece in self.pieces:
            if piece.contains_x(x):
                return piece.line
        raise ValueError(f"x = {x} is a turn of chain {self.id}")

    def slope_window(self, turn_index: int, lines: Tuple[Line, ...]) -> Tuple[Fraction, Fraction]:
        """(outgoing slope, incoming slope) at a turn"""
        incoming = lines[self.pieces[turn_index].line].a
        outgoing = lines[self.pieces[turn_index + 1].line].a
        return outgoing, incoming


@dataclass(frozen=True)
class ChainSet:
    k: int
    chains: Tuple[Chain, ...]
    lines: Tuple[Line, ...]
    crossing_index: Dict[Tuple[int, int], Tuple[ArrVertex, ...]] = field(hash=False, compare=False)

    def chain(self, chain_id: int) -> Chain:
        return self.chains[chain_id - 1]

    def pairs(self) -> List[Tuple[int, int]]:
        return list(combinations(range(1, len(self.chains) + 1), 2))

    def turn_owner(self) -> Dict[Tuple[int, int], Tuple[int, int]]:
        """Line pair of each turn vertex -> (chain id, turn index)"""
        return {
            v.line_pair: (c.id, t)
            for c in self.chains for t, v in enumerate(c.turns)
        }

    @property
    def crossings_total(self) -> int:
        return sum(len(v) for v in self.crossing_index.values())


@dataclass(frozen=True)
class Tangent:
    line: Line
    touch: Tuple[Tuple[int, ArrVertex], Tuple[int, ArrVertex]]
    span: Tuple[Fraction, Fraction]


def decompose_chains(arr: Arrangement, k: int) -> ChainSet:
    check_k(k, 1, arr.n - 1)
    lines = arr.lines
    chain_on_line: Dict[int, int] = {}
    piece_start: Dict[int, Tuple[int, Optional[Fraction]]] = {}
    pieces: Dict[int, List[Piece]] = {}
    turns: Dict[int, List[ArrVertex]] = {}
    for cid, line in enumerate(arr.slope_order()[:k], start=1):
        chain_on_line[line] = cid
        piece_start[cid] = (line, None)
        pieces[cid], turns[cid] = [], []

    crossing_index: Dict[Tuple[int, int], List[ArrVertex]] = {
        pair: [] for pair in combinations(range(1, k + 1), 2)
    }
    for v in arr.vertices:
        i, j = v.line_pair
        if v.below_count <= k - 2:
            try:
                ci, cj = chain_on_line[i], chain_on_line[j]
            except KeyError:
                raise DecompositionError(f"crossing vertex {v.location} off the chains")
            crossing_index[(min(ci, cj), max(ci, cj))].append(v)
        elif v.below_count == k - 1:
            steep, flat = (i, j) if lines[i].a > lines[j].a else (j, i)
            if steep not in chain_on_line or flat in chain_on_line:
                raise DecompositionError(f"turn vertex {v.location} does not hand over a chain")
            cid = chain_on_line.pop(steep)
            line, start = piece_start[cid]
            pieces[cid].append(Piece(line, (start, v.x)))
            piece_start[cid] = (flat, v.x)
            chain_on_line[flat] = cid
            turns[cid].append(v)

    chains = []
    for cid in range(1, k + 1):
        line, start = piece_start[cid]
        pieces[cid].append(Piece(line, (start, None)))
        chains.append(Chain(cid, tuple(pieces[cid]), tuple(turns[cid])))
    return ChainSet(k, tuple(chains), lines, {p: tuple(vs) for p, vs in crossing_index.items()})


def chain_pair_crossings(cs: ChainSet, i: int, j: int) -> List[ArrVertex]:
    """Vertices where chains i and j swap vertical order, left to right"""
    return list(cs.crossing_index.get((i, j), ()))


def is_concave(chain: Chain, lines: Tuple[Line, ...]) -> bool:
    slopes = [lines[p.line].a for p in chain.pieces]
    return all(a > b for a, b in zip(slopes, slopes[1:]))


def turns_partition(cs: ChainSet, arr: Arrangement) -> bool:
    """Every V_{k-1} vertex is a turn of exactly one chain"""
    all_turns = Counter(v.line_pair for c in cs.chains for v in c.turns)
    expected = Counter(v.line_pair for v in arr.vertex_class(cs.k - 1))
    return all_turns == expected


def _edge_key(line, left, right):
    return (line, left.line_pair if left else None, right.line_pair if right else None)


def chain_edges(cs: ChainSet, arr: Arrangement) -> Counter:
    """Arrangement edges covered by the chain pieces, with multiplicity"""
    covered = Counter()
    for chain in cs.chains:
        for piece in chain.pieces:
            lo, hi = piece.interval
            on_line = arr.vertices_on_line[piece.line]
            bounds = (None,) + on_line + (None,)
            for left, right in zip(bounds, bounds[1:]):
                after_lo = lo is None or (left is not None and left.x >= lo)
                before_hi = hi is None or (right is not None and right.x <= hi)
                if after_lo and before_hi:
                    covered[_edge_key(piece.line, left, right)] += 1
    return covered


def edge_cover_matches(cs: ChainSet, arr: Arrangement) -> bool:
    """The pieces partition the edges with below-count <= k-1: no gap, no overlap"""
    expected = Counter(
        _edge_key(e.line, e.left, e.right) for e in arr.edges if e.below_count <= cs.k - 1
    )
    return chain_edges(cs, arr) == expected


def _strictly_above(line: Line, vertices, skip: ArrVertex) -> bool:
    return all(line.at(v.x) > v.y for v in vertices if v != skip)


def tangent_through(cs: ChainSet, ci: int, ti: int, cj: int, tj: int) -> Optional[Tangent]:
    """
    The strict common tangent through turn ti of chain ci and turn tj of chain cj,
    or None when the line through the two turns is not one.
    """
    chain_i, chain_j = cs.chain(ci), cs.chain(cj)
    u, w = chain_i.turns[ti], chain_j.turns[tj]
    if u.x == w.x:
        return None
    line = line_through(u.location, w.location)
    for chain, t in ((chain_i, ti), (chain_j, tj)):
        out_slope, in_slope = chain.slope_window(t, cs.lines)
        if not out_slope < line.a < in_slope:
            return None
    if not (_strictly_above(line, chain_i.turns, u) and _strictly_above(line, chain_j.turns, w)):
        return None
    if ci > cj:
        ci, cj, u, w = cj, ci, w, u
    return Tangent(line, ((ci, u), (cj, w)), (min(u.x, w.x), max(u.x, w.x)))


def common_tangents(cs: ChainSet, i: int, j: int) -> List[Tangent]:
    """All strict common tangents of chains i < j, ordered by span"""
    found = []
    for ti in range(len(cs.chain(i).turns)):
        for tj in range(len(cs.chain(j).turns)):
            tangent = tangent_through(cs, i, ti, j, tj)
            if tangent is not None:
                found.append(tangent)
    found.sort(key=lambda t: t.span)
    return found


def spans_disjoint(tangents: List[Tangent]) -> bool:
    """Open x-spans are pairwise disjoint (shared endpoints allowed)"""
    spans = sorted(t.span for t in tangents)
    return all(a[1] <= b[0] for a, b in zip(spans, spans[1:]))


def charge_tangents(cs: ChainSet, i: int, j: int) -> Dict[Tangent, ArrVertex]:
    """
    Charge every common tangent of chains i, j to the leftmost crossing of the pair that
    lies strictly below the tangent and strictly inside its span.

    Raises:
        ChargeFailure: a tangent has no eligible crossing, or two tangents share one
    """
    crossings = chain_pair_crossings(cs, i, j)
    charged: Dict[Tangent, ArrVertex] = {}
    used = set()
    for tangent in common_tangents(cs, i, j):
        lo, hi = tangent.span
        eligible = [
            c for c in crossings
            if lo < c.x < hi and tangent.line.at(c.x) > c.y
        ]
        if not eligible:
            raise ChargeFailure(f"tangent {tangent.line} of chains {i}, {j} has no crossing below it")
        target = min(eligible, key=lambda c: c.location)
        if target.line_pair in used:
            raise ChargeFailure(f"crossing {target.location} charged twice for chains {i}, {j}")
        used.add(target.line_pair)
        charged[tangent] = target
    return charged
