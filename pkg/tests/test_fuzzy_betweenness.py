import itertools
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from kmfuzzy import (FiniteMetric, FuzzyTernaryRelation, TNorm, TernaryRelation, bd_from_nest,
                     bm_from_fuzzy_metric, check_betweenness, check_cut_characterization,
                     check_equality, check_fp, check_ft, check_fuzzy_axioms,
                     check_strict_characterization, exponential_from_metric,
                     fuzzy_metric_from_nest, level_cut, metric_betweenness,
                     nest_from_fuzzy_metric, nonsplit_bm, standard_from_metric)
from kmfuzzy.fuzzy_betweenness import FP, FT
from kmfuzzy.oracle import gen_random_metric, gen_random_nest, gen_random_step_space, grid_bm

from test_nest import worked_nest

F = Fraction
HALF = F(1, 2)


def test_worked_values(worked):
    bm = bm_from_fuzzy_metric(worked)
    bd = bd_from_nest(worked_nest())
    for B in (bm, bd):
        assert B[0, 1, 2] == HALF
        assert B[0, 2, 1] == 0
        assert all(B[x, y, y] == 1 for x in range(3) for y in range(3))
    assert grid_bm(worked)[(0, 1, 2)] == HALF
    assert grid_bm(worked)[(0, 2, 1)] == 0
    assert check_equality(worked) == (True, 0)


def test_worked_axioms(worked):
    B = bd_from_nest(worked_nest())
    for system in ("Star", "StrongStar", "FBR"):
        assert check_fuzzy_axioms(B, system).ok


def test_crisp_lift_passes_fbr():
    d = gen_random_metric(5, 3)
    B = FuzzyTernaryRelation.from_crisp(metric_betweenness(d))
    assert check_fuzzy_axioms(B, "FBR").ok


def test_antisymmetry_failure():
    g = np.full((3, 3, 3), F(0), dtype=object)
    for x, y in itertools.product(range(3), repeat=2):
        g[x, y, y] = g[y, y, x] = F(1)
    g[0, 1, 2] = g[0, 2, 1] = g[2, 1, 0] = g[1, 2, 0] = F(1)
    B = FuzzyTernaryRelation(g)
    for system, name in (("Star", "FB3"), ("StrongStar", "SFB3"), ("FBR", "FBR3")):
        c = check_fuzzy_axioms(B, system)[name]
        assert not c.passed and c.witness == (0, 1, 2)


def test_level_cuts(worked):
    B = bm_from_fuzzy_metric(worked)
    assert (0, 1, 2) in level_cut(B, HALF)
    assert (0, 1, 2) not in level_cut(B, F(3, 4))
    ones = FuzzyTernaryRelation.constant(3)
    assert level_cut(ones, F(1, 3)) == TernaryRelation.full(3)


def test_cut_characterization_worked():
    assert check_cut_characterization(worked_nest()).passed


def test_fp_examples():
    assert all(check_fp(FuzzyTernaryRelation.constant(3), k).passed for k in FP)
    assert all(check_ft(FuzzyTernaryRelation.constant(3), k).passed for k in FT)
    g = np.full((4, 4, 4), F(0), dtype=object)
    g[0, 1, 2] = g[1, 2, 3] = F(1)
    c = check_fp(FuzzyTernaryRelation(g), "FP1")
    assert not c.passed and c.witness == (0, 3, 1, 2)


def test_fp1_fails_on_worked_space(worked):
    # x=y, s=t is a counterexample for every space with two points
    c = check_fp(bm_from_fuzzy_metric(worked), "FP1")
    assert not c.passed and c.witness == (0, 0, 1, 1)


def test_fp_distinct_reading_is_vacuous_on_three_points(worked):
    B = bm_from_fuzzy_metric(worked)
    assert all(check_fp(B, k, distinct=True).passed for k in FP)
    assert all(check_ft(B, k, distinct=True).passed for k in FT)


@pytest.mark.parametrize("seed", range(40))
def test_equality_and_fbr(seed):
    space = gen_random_step_space(2 + seed % 5, 1 + seed % 8, seed)
    ok, gap = check_equality(space)
    assert ok, gap
    B = bm_from_fuzzy_metric(space)
    assert check_fuzzy_axioms(B, "FBR").ok
    assert check_fp(B, "FP2").passed and check_fp(B, "FP3").passed


@pytest.mark.parametrize("seed", range(20))
def test_bm_against_grid(seed):
    space = gen_random_step_space(2 + seed % 3, 1 + seed % 5, seed)
    B = bm_from_fuzzy_metric(space)
    for idx, v in grid_bm(space).items():
        assert B[idx] == v


@pytest.mark.parametrize("seed", range(30))
def test_cut_characterization_random(seed):
    assert check_cut_characterization(gen_random_nest(2 + seed % 5, seed % 8, seed)).passed


@given(seed=st.integers(0, 10 ** 6))
def test_cut_coherence(seed):
    N = gen_random_nest(4, 4, seed)
    B = bd_from_nest(N)
    levels = N.probe_levels()
    for a, b in zip(levels, levels[1:]):
        assert level_cut(B, b) <= level_cut(B, a)


@given(seed=st.integers(0, 10 ** 6))
def test_crisp_collapse(seed):
    T = metric_betweenness(gen_random_metric(4, seed))
    rng = np.random.default_rng(seed)
    flips = rng.random(T.data.shape) < 0.05
    T2 = TernaryRelation(T.n, data=T.data ^ flips)
    fuzzy = check_fuzzy_axioms(FuzzyTernaryRelation.from_crisp(T2), "FBR")
    crisp = check_betweenness(T2)
    assert fuzzy["FBR1"].passed == crisp["B1"].passed
    assert fuzzy["FBR2"].passed == crisp["B4"].passed
    assert fuzzy["FBR3"].passed == crisp["B5"].passed
    assert fuzzy["FBR4"].passed == crisp["B3"].passed


@pytest.mark.parametrize("seed", range(15))
def test_standard_degeneracy(seed):
    d = gen_random_metric(2 + seed % 5, seed)
    B = bm_from_fuzzy_metric(standard_from_metric(d))
    assert set(B.values()) <= {0, 1}
    assert level_cut(B, 1) == metric_betweenness(d)


@pytest.mark.parametrize("seed", range(5))
def test_strict_characterization(seed):
    d = gen_random_metric(2 + seed % 4, seed)
    assert check_strict_characterization(standard_from_metric(d)).passed
    assert check_strict_characterization(exponential_from_metric(d), [F(1, 3), HALF]).passed


def test_nonsplit_is_not_reflexive(worked):
    B = nonsplit_bm(worked)
    assert B[0, 1, 1] < 1
    assert not check_fuzzy_axioms(B, "FBR")["FBR2"].passed


def test_product_checks_run():
    d = gen_random_metric(4, 1)
    B = bm_from_fuzzy_metric(standard_from_metric(d))
    for kind in TNorm:
        assert check_fuzzy_axioms(B, "FBR", kind).ok
