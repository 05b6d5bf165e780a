from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given

from kmfuzzy.errors import ParseError
from kmfuzzy.grades import TNorm, format_rational, parse_rational, residuum, tnorm
from kmfuzzy.oracle import grid_residuum

from strategies import grades

F = Fraction
GRID = [F(k, 20) for k in range(21)]
KINDS = list(TNorm)


def test_tnorm_examples():
    assert tnorm(TNorm.MIN, F(3, 10), F(7, 10)) == F(3, 10)
    assert tnorm(TNorm.PROD, F(1, 2), F(2, 5)) == F(1, 5)
    assert tnorm(TNorm.LUK, F(1, 2), F(2, 5)) == 0


@pytest.mark.parametrize("kind", KINDS)
def test_unit_and_annihilator(kind):
    for a in GRID:
        assert tnorm(kind, a, F(1)) == a
        assert tnorm(kind, a, F(0)) == 0


@pytest.mark.parametrize("kind", KINDS)
def test_tnorm_laws_on_grid(kind):
    for a, b in product(GRID, GRID):
        ab = tnorm(kind, a, b)
        assert ab == tnorm(kind, b, a)
        assert ab <= min(a, b)
    coarse = GRID[::2]
    for a, b, c in product(coarse, coarse, coarse):
        assert tnorm(kind, a, tnorm(kind, b, c)) == tnorm(kind, tnorm(kind, a, b), c)
        if a <= b:
            assert tnorm(kind, a, c) <= tnorm(kind, b, c)


@pytest.mark.parametrize("kind", KINDS)
def test_adjunction_on_grid(kind):
    for a, b, c in product(GRID, GRID, GRID):
        assert (tnorm(kind, a, c) <= b) == (c <= residuum(kind, a, b))


@pytest.mark.parametrize("kind", KINDS)
def test_residuum_monotonicity(kind):
    for a, b in product(GRID[:-1], GRID[:-1]):
        nxt = F(1, 20)
        assert residuum(kind, a, b) <= residuum(kind, a, b + nxt)
        assert residuum(kind, a, b) >= residuum(kind, a + nxt, b)


def test_residuum_examples_against_oracle():
    # the grid sup is the authority for these two values
    assert residuum(TNorm.MIN, F(7, 10), F(3, 10)) == F(3, 10) == grid_residuum(TNorm.MIN, F(7, 10), F(3, 10))
    assert residuum(TNorm.LUK, F(7, 10), F(3, 10)) == F(6, 10) == grid_residuum(TNorm.LUK, F(7, 10), F(3, 10))
    for kind in KINDS:
        assert residuum(kind, F(1, 3), F(1, 2)) == 1


@given(a=grades, b=grades)
def test_residuum_matches_grid_sup(a, b):
    # Goedel and Lukasiewicz residua land on the 1/400 grid; b/a need not
    for kind in (TNorm.MIN, TNorm.LUK):
        assert residuum(kind, a, b) == grid_residuum(kind, a, b, steps=400)
    exact, approx = residuum(TNorm.PROD, a, b), grid_residuum(TNorm.PROD, a, b, steps=400)
    assert approx <= exact < approx + Fraction(1, 400)


def test_parse_rational():
    assert parse_rational("1/2") == F(1, 2)
    assert parse_rational("0.25") == F(1, 4)
    assert parse_rational(3) == 3
    assert format_rational(F(2, 4)) == "1/2"
    assert format_rational(F(4, 2)) == "2"
    with pytest.raises(ParseError):
        parse_rational(0.5)
    with pytest.raises(ParseError):
        parse_rational("half")
    with pytest.raises(ParseError):
        parse_rational("1/0")


def test_tnorm_parse():
    assert TNorm.parse("Lukasiewicz") is TNorm.LUK
    assert TNorm.parse("min") is TNorm.MIN
    with pytest.raises(ParseError):
        TNorm.parse("drastic")
