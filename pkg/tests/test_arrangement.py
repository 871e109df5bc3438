from fractions import Fraction

import pytest

from ksetlab.arrangement import build_arrangement, edge_sample_x, extract_k_level, level_profile
from ksetlab.errors import BadKError
from ksetlab.geometry import Point
from ksetlab.instances import generate_instance
from ksetlab.ksets import Instance
from ksetlab.models import GenSpec

from .conftest import A, B, C, D, pair

Q4_VERTICES = {
    pair(A, B): (Point(0, 0), 2),
    pair(A, C): (Point(Fraction(3, 2), 0), 0),
    pair(A, D): (Point(1, 0), 1),
    pair(B, C): (Point(Fraction(-3, 2), -6), 0),
    pair(B, D): (Point(Fraction(-1, 3), Fraction(-4, 3)), 1),
    pair(C, D): (Point(2, 1), 1),
}


def test_q4_vertices(q4_arrangement):
    assert len(q4_arrangement.vertices) == 6
    found = {v.line_pair: (v.location, v.below_count) for v in q4_arrangement.vertices}
    assert found == Q4_VERTICES


def test_q4_vertex_classes(q4_arrangement):
    assert [len(c) for c in q4_arrangement.classes] == [2, 3, 1]
    assert {v.line_pair for v in q4_arrangement.vertex_class(1)} == {pair(A, D), pair(B, D), pair(C, D)}
    assert q4_arrangement.vertex_class(-1) == ()
    assert q4_arrangement.vertex_class(3) == ()


def test_two_lines():
    arr = build_arrangement(Instance.from_coords([(0, 0), (1, 0)]))
    assert [(v.location, v.below_count) for v in arr.vertices] == [(Point(0, 0), 0)]


def test_vertices_sorted_by_x(q4_arrangement):
    xs = [v.x for v in q4_arrangement.vertices]
    assert xs == sorted(xs)


def test_edges_cover_every_line(q4_arrangement):
    edges = q4_arrangement.edges
    assert len(edges) == q4_arrangement.n ** 2
    assert all(0 <= e.below_count <= q4_arrangement.n - 1 for e in edges)
    # the unbounded left edge of a line sits above exactly the lines of larger slope
    order = q4_arrangement.slope_order()
    for rank, line in enumerate(order):
        left = next(e for e in edges if e.line == line and e.left is None)
        assert left.below_count == rank


def test_q4_one_level(q4_arrangement):
    level = extract_k_level(q4_arrangement, 1)
    assert [v.line_pair for v in level.vertex_seq] == [
        pair(B, C), pair(B, D), pair(A, D), pair(A, C), pair(C, D)
    ]
    assert list(level.edge_lines) == [C, B, D, A, C, D]
    assert level.certified


def test_q4_two_level(q4_arrangement):
    level = extract_k_level(q4_arrangement, 2)
    assert [v.line_pair for v in level.vertex_seq] == [pair(B, D), pair(A, B), pair(A, D), pair(C, D)]
    assert list(level.edge_lines) == [D, B, A, D, C]
    assert level.certified
    assert level.line_at(Fraction(-5)) == D
    assert level.line_at(Fraction(5)) == C


def test_lower_envelope():
    # duals y = 0, y = x, y = -x + 2
    arr = build_arrangement(Instance.from_coords([(0, 0), (1, 0), (-1, -2)]))
    level = extract_k_level(arr, 0)
    assert [v.location for v in level.vertex_seq] == [Point(0, 0), Point(2, 0)]
    assert list(level.edge_lines) == [1, 0, 2]


def test_level_endpoints_follow_slope_ranks(q4_arrangement):
    order = q4_arrangement.slope_order()
    n = q4_arrangement.n
    for k in range(n):
        level = extract_k_level(q4_arrangement, k)
        assert level.edge_lines[0] == order[k]
        assert level.edge_lines[-1] == order[n - 1 - k]


@pytest.mark.parametrize("seed", range(8))
def test_level_vertices_are_two_classes(seed):
    inst = generate_instance(GenSpec(shape="uniform", n=11, coord_range=200, seed=seed))
    arr = build_arrangement(inst)
    for k in range(arr.n):
        level = extract_k_level(arr, k)
        expected = {v.line_pair for v in arr.vertex_class(k)} | {v.line_pair for v in arr.vertex_class(k - 1)}
        assert {v.line_pair for v in level.vertex_seq} == expected
        assert level.certified
        xs = [v.x for v in level.vertex_seq]
        assert xs == sorted(xs) and len(set(xs)) == len(xs)


def test_level_profile(q4_arrangement):
    profile = level_profile(q4_arrangement, 2)
    assert profile.counts == (2, 3, 1)
    assert profile.below_level == 5
    assert profile.nk == 8
    assert profile.within_bound
    assert level_profile(q4_arrangement, 3).below_level == 6


def test_bad_k(q4_arrangement):
    with pytest.raises(BadKError):
        extract_k_level(q4_arrangement, 4)
    with pytest.raises(BadKError):
        level_profile(q4_arrangement, 0)


def test_profile_sums_to_all_pairs(q4_arrangement):
    assert sum(level_profile(q4_arrangement, 1).counts) == 6


def lines_below(arr, line, x):
    y = arr.lines[line].at(x)
    return {i for i, other in enumerate(arr.lines) if i != line and other.at(x) < y}


@pytest.mark.parametrize("seed", range(6))
def test_level_vertices_swap_lines_below_only_at_lower_class(seed):
    inst = generate_instance(GenSpec(shape="uniform", n=10, coord_range=300, seed=seed))
    arr = build_arrangement(inst)
    for k in range(arr.n):
        level = extract_k_level(arr, k)
        bounds = (None,) + level.vertex_seq + (None,)
        below = [
            lines_below(arr, line, edge_sample_x(left, right))
            for line, left, right in zip(level.edge_lines, bounds, bounds[1:])
        ]
        for index, vertex in enumerate(level.vertex_seq):
            before, after = below[index], below[index + 1]
            if vertex.below_count == k:
                assert before == after
            else:
                assert vertex.below_count == k - 1
                assert before ^ after == set(vertex.line_pair)
