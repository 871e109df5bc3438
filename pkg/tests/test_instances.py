import pytest

from ksetlab.errors import (
    BadRationalError,
    CountMismatchError,
    GeneralPositionError,
    InstanceSyntaxError,
    RetriesExhaustedError,
)
from ksetlab.geometry import Point
from ksetlab.instances import generate_instance, parse_instance, read_instance, write_instance
from ksetlab.ksets import validate_general_position
from ksetlab.models import GenSpec

from .conftest import Q4_TEXT


def test_parse_q4(q4):
    assert parse_instance(Q4_TEXT) == q4


def test_comments_and_blank_lines(q4):
    text = "# worked example\n\n4\n0 0\n# the right corner\n4 0\n2 3\n   \n1 1\n"
    assert parse_instance(text) == q4


def test_rational_coordinates():
    inst = parse_instance("3\n1/2 0\n-3/4 2\n2 6/4\n")
    assert inst.points[0] == Point("1/2", 0)
    assert inst.points[2].y == Point(0, "3/2").y


def test_shared_x_rejected_with_line_number():
    with pytest.raises(GeneralPositionError) as excinfo:
        parse_instance("2\n0 0\n0 1\n")
    assert excinfo.value.line_number == 3
    assert excinfo.value.violations[0].kind == "shared_x"


def test_collinear_rejected():
    with pytest.raises(GeneralPositionError):
        parse_instance("3\n0 0\n1 1\n2 2\n")


@pytest.mark.parametrize("text, line_number", [
    ("1\n1/0 2\n", 2),
    ("2\n0 0\n1 3/-4\n", 3),
])
def test_bad_rationals(text, line_number):
    with pytest.raises(BadRationalError) as excinfo:
        parse_instance(text)
    assert excinfo.value.line_number == line_number


@pytest.mark.parametrize("text", [
    "",
    "# only a comment\n",
    "four\n0 0\n",
    "2\n0 0 0\n1 1\n",
    "2\n0 x\n1 1\n",
    "1\n0 0\n",
    "2\n1_000 0\n1 3\n",
    "2\n0 0\n\u0661 3\n",
    "2\n1/2_0 0\n1 3\n",
    "2\n+/3 0\n1 3\n",
])
def test_syntax_errors(text):
    with pytest.raises(InstanceSyntaxError):
        parse_instance(text)


def test_count_mismatch():
    with pytest.raises(CountMismatchError):
        parse_instance("3\n0 0\n1 1\n")


def test_write_is_canonical(q4):
    assert write_instance(q4) == Q4_TEXT
    messy = "3\n  2/4   0\n-6/3 1\n5 7/7\n"
    canonical = write_instance(parse_instance(messy))
    assert canonical == "3\n1/2 0\n-2 1\n5 1\n"
    assert write_instance(parse_instance(canonical)) == canonical


def test_read_instance(tmp_path, q4):
    path = tmp_path / "q4.pts"
    path.write_text(Q4_TEXT, encoding="utf-8")
    assert read_instance(path) == q4


# --- generators ---

@pytest.mark.parametrize("shape", ["uniform", "parabola", "grid-jitter"])
def test_generators_are_deterministic_and_valid(shape):
    spec = GenSpec(shape=shape, n=12, coord_range=50, seed=9)
    first = generate_instance(spec)
    assert first == generate_instance(GenSpec(shape=shape, n=12, coord_range=50, seed=9))
    assert first.n == 12
    assert validate_general_position(first.points) == []


def test_parabola_points_lie_on_the_parabola():
    inst = generate_instance(GenSpec(shape="parabola", n=4, coord_range=3, seed=1))
    assert all(p.y == p.x * p.x for p in inst.points)
    assert len({p.x for p in inst.points}) == 4


def test_large_uniform_instance():
    inst = generate_instance(GenSpec(shape="uniform", n=25, coord_range=10 ** 6, seed=123))
    assert inst.n == 25


def test_different_seeds_differ():
    a = generate_instance(GenSpec(n=10, seed=1))
    b = generate_instance(GenSpec(n=10, seed=2))
    assert a != b


def test_retries_exhausted():
    with pytest.raises(RetriesExhaustedError):
        generate_instance(GenSpec(shape="uniform", n=6, coord_range=1, seed=0, max_retries=20))
    with pytest.raises(RetriesExhaustedError):
        generate_instance(GenSpec(shape="parabola", n=10, coord_range=2))


def test_unknown_shape():
    with pytest.raises(ValueError):
        generate_instance(GenSpec(shape="spiral"))


def test_non_ascii_digits_report_their_line():
    with pytest.raises(InstanceSyntaxError) as excinfo:
        parse_instance("2\n0 0\n١ 3\n")
    assert excinfo.value.line_number == 3
