"""
Shared helpers - rational formatting and parsing used by the JSON, instance and SVG layers
"""

import re
from fractions import Fraction
from typing import Union

INTEGER = re.compile(r"[+-]?[0-9]+")


def format_rational(value: Fraction) -> str:
    """Canonical text form: bare integer or "p/q" in lowest terms"""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def json_rational(value: Union[Fraction, int, bool]) -> Union[int, str, bool]:
    """JSON form of an exact number: integers stay integers, other rationals become "p/q" """
    if isinstance(value, bool):
        return value
    value = Fraction(value)
    if value.denominator == 1:
        return value.numerator
    return format_rational(value)


def _parse_integer(text: str, token: str) -> int:
    if not INTEGER.fullmatch(text):
        raise ValueError(f"malformed number {token!r}")
    return int(text)


def parse_rational(token: str) -> Fraction:
    """
    Parse an integer or "p/q" token. Each side is a run of ASCII digits with an optional sign.

    Raises:
        ValueError: malformed token
        ZeroDivisionError: q == 0
        ArithmeticError: q < 0
    """
    token = token.strip()
    if "/" in token:
        num_text, den_text = token.split("/", 1)
        num, den = _parse_integer(num_text, token), _parse_integer(den_text, token)
        if den == 0:
            raise ZeroDivisionError(f"zero denominator in {token!r}")
        if den < 0:
            raise ArithmeticError(f"negative denominator in {token!r}")
        return Fraction(num, den)
    return Fraction(_parse_integer(token, token))


def to_float(value: Fraction) -> float:
    """Float conversion, allowed only for drawing"""
    return float(value)
