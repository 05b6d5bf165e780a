"""Exact unit-interval arithmetic, t-norms and their residua.

Grades are plain :class:`fractions.Fraction` values constrained to [0, 1].
Nothing in this module touches floating point.
"""

from __future__ import annotations

import enum
from fractions import Fraction
from typing import Union

from .errors import ParseError

GradeLike = Union[Fraction, int, str]

ZERO = Fraction(0)
ONE = Fraction(1)


class TNorm(enum.Enum):
    MIN = "min"
    PROD = "prod"
    LUK = "luk"

    @classmethod
    def parse(cls, name: str) -> "TNorm":
        aliases = {
            "min": cls.MIN, "minimum": cls.MIN,
            "prod": cls.PROD, "product": cls.PROD,
            "luk": cls.LUK, "lukasiewicz": cls.LUK,
        }
        try:
            return aliases[name.strip().lower()]
        except KeyError:
            raise ParseError(f"unknown t-norm {name!r}") from None


def parse_rational(text: GradeLike) -> Fraction:
    """Parse ``"0.5"``, ``"1/2"``, an int or a Fraction into an exact Fraction.

    Floats are refused: they would smuggle binary rounding into exact paths.
    """
    if isinstance(text, bool) or isinstance(text, float):
        raise ParseError(f"refusing non-exact number {text!r}; use a string such as '1/2'")
    if isinstance(text, (int, Fraction)):
        return Fraction(text)
    try:
        return Fraction(str(text).strip())
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"cannot parse {text!r} as a rational") from None


def grade(value: GradeLike) -> Fraction:
    g = parse_rational(value)
    if not ZERO <= g <= ONE:
        raise ValueError(f"grade {g} outside [0, 1]")
    return g


def format_rational(q: Fraction) -> str:
    """Canonical ``p/q`` text in lowest terms (integers print without denominator)."""
    return str(Fraction(q))


def tnorm(kind: TNorm, a: Fraction, b: Fraction) -> Fraction:
    if kind is TNorm.MIN:
        return min(a, b)
    if kind is TNorm.PROD:
        return a * b
    return max(ZERO, a + b - 1)


def residuum(kind: TNorm, a: Fraction, b: Fraction) -> Fraction:
    """Residual implication ``a -> b = sup{c : a * c <= b}`` in closed form."""
    if a <= b:
        return ONE
    if kind is TNorm.MIN:
        return b
    if kind is TNorm.PROD:
        return b / a
    return min(ONE, 1 - a + b)
