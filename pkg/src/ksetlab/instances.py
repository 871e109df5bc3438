"""
Instance files and seeded instance generators.

An instance file is UTF-8 text. Lines starting with '#' and blank lines are skipped.
The first data line holds n, then n lines "x y" follow, each coordinate an integer or
"p/q" with q > 0.
"""
import math
import random
from fractions import Fraction
from pathlib import Path
from typing import List, Tuple, Union

from .errors import (
    BadRationalError,
    CountMismatchError,
    GeneralPositionError,
    InstanceSyntaxError,
    RetriesExhaustedError,
)
from .geometry import Point, orient
from .ksets import Instance, validate_general_position
from .models import SHAPES, GenSpec
from .utils import format_rational, parse_rational

JITTER_DENOMINATOR = 1000


def _data_lines(text: str) -> List[Tuple[int, str]]:
    lines = []
    for number, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        lines.append((number, stripped))
    return lines


def _parse_coordinate(token: str, line_number: int) -> Fraction:
    try:
        return parse_rational(token)
    except ValueError:
        raise InstanceSyntaxError(f"malformed coordinate {token!r}", line_number)
    except ArithmeticError as e:
        raise BadRationalError(str(e), line_number)


def parse_instance(text: str) -> Instance:
    """
    Parse instance text into a validated Instance.

    Raises:
        InstanceSyntaxError: missing or malformed count, wrong token count, bad number
        BadRationalError: a "p/q" coordinate with q <= 0
        CountMismatchError: number of point lines differs from n
        GeneralPositionError: the points are not in general position
    """
    data = _data_lines(text)
    if not data:
        raise InstanceSyntaxError("empty instance: expected the point count n")

    count_line, count_text = data[0]
    try:
        n = int(count_text)
    except ValueError:
        raise InstanceSyntaxError(f"expected the point count n, got {count_text!r}", count_line)
    if n < 0:
        raise InstanceSyntaxError(f"negative point count {n}", count_line)

    points, point_lines = [], []
    for number, content in data[1:]:
        tokens = content.split()
        if len(tokens) != 2:
            raise InstanceSyntaxError(f"expected 'x y', got {len(tokens)} tokens", number)
        x, y = (_parse_coordinate(t, number) for t in tokens)
        points.append(Point(x, y))
        point_lines.append(number)

    if len(points) != n:
        last_line = data[-1][0]
        raise CountMismatchError(f"header says {n} points, found {len(points)}", last_line)
    if n < 2:
        raise InstanceSyntaxError(f"an instance needs at least 2 points, got {n}", count_line)

    violations = validate_general_position(points)
    if violations:
        raise GeneralPositionError(violations, point_lines[violations[0].indices[-1]])
    return Instance(tuple(points))


def read_instance(path: Union[str, Path]) -> Instance:
    return parse_instance(Path(path).read_text(encoding="utf-8"))


def write_instance(inst: Instance) -> str:
    """Canonical text: lowest-terms coordinates separated by single spaces"""
    lines = [str(inst.n)]
    lines.extend(f"{format_rational(p.x)} {format_rational(p.y)}" for p in inst.points)
    return "\n".join(lines) + "\n"


def _keeps_general_position(points: List[Point], candidate: Point) -> bool:
    if any(p.x == candidate.x for p in points):
        return False
    for i in range(len(points)):
        for j in range(i + 1, len(points)):
            if orient(points[i], points[j], candidate) == 0:
                return False
    return True


def _sample_points(rng: random.Random, spec: GenSpec, draw) -> Tuple[Point, ...]:
    """Grow a point set one point at a time, redrawing a point until it fits"""
    points: List[Point] = []
    for index in range(spec.n):
        for _ in range(spec.max_retries):
            candidate = draw(rng, index)
            if _keeps_general_position(points, candidate):
                points.append(candidate)
                break
        else:
            raise RetriesExhaustedError(
                f"{spec.shape}: no general-position point {index + 1}/{spec.n} "
                f"after {spec.max_retries} draws (range {spec.coord_range})"
            )
    return tuple(points)


def _uniform(spec: GenSpec):
    r = spec.coord_range

    def draw(rng: random.Random, index: int) -> Point:
        return Point(rng.randint(-r, r), rng.randint(-r, r))
    return draw


def _grid_jitter(spec: GenSpec):
    side = max(1, math.ceil(math.sqrt(spec.n)))
    cell = Fraction(2 * spec.coord_range, side)
    spread = JITTER_DENOMINATOR // 4

    def draw(rng: random.Random, index: int) -> Point:
        row, col = divmod(index, side)
        jx = Fraction(rng.randint(-spread, spread), JITTER_DENOMINATOR)
        jy = Fraction(rng.randint(-spread, spread), JITTER_DENOMINATOR)
        x = -spec.coord_range + (col + Fraction(1, 2) + jx) * cell
        y = -spec.coord_range + (row + Fraction(1, 2) + jy) * cell
        return Point(x, y)
    return draw


def _parabola(rng: random.Random, spec: GenSpec) -> Tuple[Point, ...]:
    r = spec.coord_range
    if spec.n > 2 * r + 1:
        raise RetriesExhaustedError(f"parabola: {spec.n} distinct integer x do not fit in [-{r}, {r}]")
    xs = rng.sample(range(-r, r + 1), spec.n)
    return tuple(Point(x, x * x) for x in xs)


def generate_instance(spec: GenSpec) -> Instance:
    """
    Deterministic instance for a given spec.

    uniform draws integer points in [-R, R]^2; grid-jitter perturbs the centres of a
    sqrt(n) x sqrt(n) grid by rational offsets; parabola puts distinct integer x on
    y = x^2. Points that break general position are redrawn.

    Raises:
        ValueError: unknown shape or n < 2
        RetriesExhaustedError: a point could not be placed within max_retries draws
    """
    if spec.shape not in SHAPES:
        raise ValueError(f"unknown shape {spec.shape!r}, expected one of {', '.join(SHAPES)}")
    if spec.n < 2:
        raise ValueError(f"n must be at least 2, got {spec.n}")

    rng = random.Random(spec.seed)
    if spec.shape == "parabola":
        points = _parabola(rng, spec)
    elif spec.shape == "grid-jitter":
        points = _sample_points(rng, spec, _grid_jitter(spec))
    else:
        points = _sample_points(rng, spec, _uniform(spec))
    return Instance(points)
