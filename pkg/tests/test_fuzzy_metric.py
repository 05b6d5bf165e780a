import itertools
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from kmfuzzy import (POINT_ONE, FiniteMetric, TNorm, exponential_from_metric, from_entries,
                     level, standard, standard_from_metric, step, validate)
from kmfuzzy.errors import AsymmetricEntries, DiagonalNotOne, MixedVariant, OffDiagonalOne
from kmfuzzy.fuzzy_metric import check_fm4_rectangles, structural_report
from kmfuzzy.oracle import gen_random_metric, gen_random_step_space

from conftest import worked_pair
from strategies import steps

F = Fraction


def test_worked_space_valid(worked):
    rep = validate(worked)
    assert rep.ok, rep.text()
    assert [c.name for c in rep] == ["FM1", "FM2", "FM3", "FM4", "FM5", "FM6"]


def test_fm4_failure_names_triple_and_level():
    A = worked_pair()
    C = step([5], [0, 1])
    space = from_entries("xyz", [[None, A, C], [A, None, A], [C, A, None]])
    fm4 = validate(space)["FM4"]
    assert not fm4.passed
    assert fm4.witness == (0, 1, 2)
    assert "a=1/4" in fm4.detail and "5 > " in fm4.detail
    assert not check_fm4_rectangles(space)


def test_fm6_needs_limit_one():
    G = step([1], [0, F(1, 2)])
    space = from_entries("xy", [[None, G], [G, None]])
    assert not validate(space)["FM6"].passed


def test_structural_errors():
    A = worked_pair()
    with pytest.raises(AsymmetricEntries):
        from_entries("xy", [[None, A], [step([3], [0, 1]), None]])
    with pytest.raises(DiagonalNotOne):
        from_entries("xy", [[A, A], [A, None]])
    with pytest.raises(OffDiagonalOne):
        from_entries("xy", [[None, POINT_ONE], [POINT_ONE, None]])
    with pytest.raises(MixedVariant):
        from_entries("xyz", [[None, A, A], [A, None, standard(1)], [A, standard(1), None]])


def test_structural_report_names_pair():
    A = worked_pair()
    rep = structural_report("xy", [[POINT_ONE, A], [step([3], [0, 1]), POINT_ONE]])
    assert not rep["FM3"].passed
    assert rep["FM3"].witness == ("x", "y")


def test_standard_space_examples():
    d = FiniteMetric("xy", [[0, 3], [3, 0]])
    space = standard_from_metric(d)
    assert space[0, 1] == standard(3)
    eq = FiniteMetric("xyz", [[0, 2, 2], [2, 0, 2], [2, 2, 0]])
    s2 = standard_from_metric(eq)
    assert s2[0, 1] == s2[0, 2] == s2[1, 2]


@pytest.mark.parametrize("seed", range(10))
@pytest.mark.parametrize("kind", list(TNorm))
def test_standard_space_valid_under_every_tnorm(seed, kind):
    d = gen_random_metric(2 + seed % 4, seed)
    assert validate(standard_from_metric(d, kind)).ok


@pytest.mark.parametrize("seed", range(10))
def test_exponential_space_valid_under_product(seed):
    d = gen_random_metric(2 + seed % 4, seed)
    assert validate(exponential_from_metric(d)).ok


def test_exponential_product_criterion():
    # scales 1, 1 allow the third side up to (1+1)^2 = 4 under the product
    from kmfuzzy import exponential
    E = exponential
    ok = from_entries("xyz", [[None, E(1), E(4)], [E(1), None, E(1)], [E(4), E(1), None]], TNorm.PROD)
    assert validate(ok)["FM4"].passed
    bad = from_entries("xyz", [[None, E(1), E(5)], [E(1), None, E(1)], [E(5), E(1), None]], TNorm.PROD)
    assert not validate(bad)["FM4"].passed
    assert not validate(ok.with_tnorm(TNorm.MIN))["FM4"].passed


@pytest.mark.parametrize("seed", range(40))
def test_generated_step_spaces_valid(seed):
    space = gen_random_step_space(2 + seed % 5, 1 + seed % 8, seed)
    assert validate(space).ok


def _per_level_triangle(space):
    vals = sorted({v for row in space.entries for G in row if G is not POINT_ONE
                   for v in G.values if v < 1})
    n = space.n
    for a in vals:
        for x, y, z in itertools.product(range(n), repeat=3):
            if level(space[x, z], a) > level(space[x, y], a) + level(space[y, z], a):
                return False
    return True


@given(st.lists(steps(max_breaks=3, start_zero=True, end_one=True), min_size=3, max_size=3))
def test_fm4_iff_levelwise_triangle(entries):
    a, b, c = entries
    space = from_entries("xyz", [[None, a, b], [a, None, c], [b, c, None]])
    fm4 = validate(space)["FM4"].passed
    assert fm4 == _per_level_triangle(space)
    assert fm4 == check_fm4_rectangles(space)


def test_validate_is_deterministic(worked):
    assert validate(worked).to_dict() == validate(worked).to_dict()
