"""The nine acceptance criteria, each reported as one PASS/FAIL line."""

import time
from collections import Counter
from fractions import Fraction

from kmfuzzy import (betweenness_at_level, bd_from_nest, bm_from_fuzzy_metric,
                     check_betweenness, check_betweenness_nest, check_equality,
                     check_fuzzy_axioms, check_fuzzy_transitivities, check_transitivities,
                     evaluate, godel_residual_inf, level, level_cut, metric_betweenness,
                     nest_from_fuzzy_metric, nonsplit_bm, roundtrip_check,
                     standard_from_metric, supmin_convolve)
from kmfuzzy.oracle import (gen_random_metric, gen_random_nest, gen_random_step,
                            gen_random_step_space, grid_bm, grid_convolve, grid_for,
                            grid_level, grid_residual)

from conftest import record, worked_space

HALF = Fraction(1, 2)
SEEDS = range(500)


def corpus_space(seed):
    """Step space with n <= 6 points and at most 8 breakpoints per entry."""
    return gen_random_step_space(2 + seed % 5, 1 + seed % 8, seed)


def test_criterion_1_roundtrip():
    t0 = time.perf_counter()
    bad = []
    for seed in SEEDS:
        for obj in (corpus_space(seed), gen_random_nest(2 + seed % 5, seed % 8, 10_000 + seed)):
            same, diff = roundtrip_check(obj)
            if not same:
                bad.append((seed, diff))
    elapsed = time.perf_counter() - t0
    ok = not bad and elapsed <= 30
    record(1, ok, f"round-trip on 500 spaces + 500 nests: {len(bad)} diffs, {elapsed:.1f}s (limit 30s)")
    assert ok, bad[:3]


def test_criterion_2_equality():
    t0 = time.perf_counter()
    worst = Fraction(0)
    unequal = 0
    for seed in SEEDS:
        same, gap = check_equality(corpus_space(seed))
        unequal += not same
        worst = max(worst, gap)
    elapsed = time.perf_counter() - t0
    ok = unequal == 0 and elapsed <= 60
    record(2, ok, f"implication vs nest on 500 spaces: {unequal} unequal, max gap {worst}, "
                  f"{elapsed:.1f}s (limit 60s)")
    assert ok


def test_criterion_3_worked_fixture():
    space = worked_space()
    bm = bm_from_fuzzy_metric(space)
    bd = bd_from_nest(nest_from_fuzzy_metric(space))
    grid = grid_bm(space)
    got = [(B[0, 1, 2], B[0, 2, 1]) for B in (bm, bd)] + [(grid[(0, 1, 2)], grid[(0, 2, 1)])]
    ok = all(pair == (HALF, 0) for pair in got)
    record(3, ok, f"B(x,y,z), B(x,z,y) by implication / nest / grid: {[tuple(map(str, p)) for p in got]}")
    assert ok


def test_criterion_4_axiom_suites():
    crisp_fail = fuzzy_fail = 0
    for seed in SEEDS:
        space = corpus_space(seed)
        nest = nest_from_fuzzy_metric(space)
        crisp_fail += sum(not check_betweenness(betweenness_at_level(nest, a)).ok
                          for a in nest.probe_levels())
        fuzzy_fail += not check_fuzzy_axioms(bm_from_fuzzy_metric(space), "FBR").ok
        fuzzy_fail += not check_fuzzy_axioms(bd_from_nest(nest), "FBR").ok
    ok = crisp_fail == 0 and fuzzy_fail == 0
    record(4, ok, f"B1-B5 on every slice: {crisp_fail} failures; FBR1-FBR5 under min: {fuzzy_fail} failures")
    assert ok


def test_criterion_5_transitivity_suites():
    t0 = time.perf_counter()
    crisp, fuzzy = Counter(), Counter()
    for seed in range(200):
        n = 2 + seed % 5
        for c in check_transitivities(metric_betweenness(gen_random_metric(n, seed))).failures():
            crisp[c.name] += 1
        B = bm_from_fuzzy_metric(gen_random_step_space(n, 1 + seed % 8, seed))
        for c in check_fuzzy_transitivities(B).failures():
            fuzzy[c.name] += 1
    elapsed = time.perf_counter() - t0
    ok = not crisp and not fuzzy and elapsed <= 120
    record(5, ok, f"P/T failures over 200 metrics {dict(sorted(crisp.items()))}; "
                  f"FP/FT failures {dict(sorted(fuzzy.items()))}; {elapsed:.1f}s (limit 120s)")
    assert ok, "metric betweenness does not satisfy every four- and five-point property"


def test_criterion_6_nest_structure():
    bad = [seed for seed in SEEDS
           if not check_betweenness_nest(gen_random_nest(2 + seed % 5, seed % 8, seed)).ok]
    record(6, not bad, f"antitone inclusion and union identity on 500 nests: {len(bad)} failures")
    assert not bad


def test_criterion_7_oracles():
    mismatches = Counter()
    for seed in SEEDS:
        F = gen_random_step(1 + seed % 6, 2 * seed)
        G = gen_random_step(1 + (seed // 6) % 6, 2 * seed + 1)
        grid = grid_for(F, G)
        mismatches["level"] += any(grid_level(F, a, grid) != level(F, a) for a in grid.a)
        H = supmin_convolve(F, G)
        mismatches["convolve"] += any(evaluate(H, t) != v for t, v in grid_convolve(F, G, grid).items())
        mismatches["residual"] += grid_residual(F, G, grid) != godel_residual_inf(F, G)
    ok = sum(mismatches.values()) == 0
    record(7, ok, f"grid oracles vs engine on 500 pairs: mismatches {dict(mismatches)}")
    assert ok


def test_criterion_8_standard_degeneracy():
    bad = 0
    for seed in range(100):
        d = gen_random_metric(2 + seed % 5, seed)
        B = bm_from_fuzzy_metric(standard_from_metric(d))
        bad += not (set(B.values()) <= {0, 1} and level_cut(B, 1) == metric_betweenness(d))
    record(8, bad == 0, f"standard spaces with a grade strictly inside (0,1) or a wrong 1-cut: {bad} of 100")
    assert bad == 0


def test_criterion_9_negative_control():
    B = nonsplit_bm(worked_space())
    low = [((x, y), B[x, y, y]) for x in range(3) for y in range(3) if B[x, y, y] < 1]
    ok = bool(low)
    record(9, ok, f"fixed-split formula gives B(x,y,y) < 1 at {[(p, str(v)) for p, v in low[:3]]}")
    assert ok
