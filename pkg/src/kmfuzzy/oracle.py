"""Brute-force oracles and seeded instance generators.

The oracles never call the level-inversion engine: they evaluate step
functions by linear scan and take sups and infs over explicit finite sets of
candidate points. They are slow and meant only to validate the exact engine.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .distributions import INF, POINT_ONE, Distribution, Step, step
from .errors import GridTooCoarse, UnsupportedVariant
from .fuzzy_metric import FuzzyMetricSpace
from .grades import ONE, ZERO, TNorm, tnorm
from .nest import FiniteMetric, MetricNest, PairLevels, fuzzy_metric_from_nest


@dataclass(frozen=True)
class GridSpec:
    t: Tuple[Fraction, ...]
    a: Tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "t", tuple(sorted(set(Fraction(v) for v in self.t))))
        object.__setattr__(self, "a", tuple(sorted(set(Fraction(v) for v in self.a))))


def _as_pieces(F: Distribution):
    if F is POINT_ONE:
        return (), (ONE,)
    if not isinstance(F, Step):
        raise UnsupportedVariant("grid oracles work on step distributions")
    return F.breakpoints, F.values


def scan_eval(F: Distribution, t: Fraction) -> Fraction:
    """``F(t)`` by walking the pieces left to right."""
    if t <= 0:
        return ZERO
    bps, vals = _as_pieces(F)
    for b, v in zip(bps, vals):
        if t <= b:
            return v
    return vals[-1]


def _with_midpoints(points) -> List[Fraction]:
    pts = sorted(set(points))
    mids = [(p + q) / 2 for p, q in zip(pts, pts[1:])]
    return sorted(set(pts) | set(mids))


def grid_for(*dists: Distribution, sums: bool = True) -> GridSpec:
    """A grid holding every breakpoint, every pairwise breakpoint sum, all
    midpoints, and a point beyond the largest of them."""
    bps = sorted({b for F in dists for b in _as_pieces(F)[0]})
    pts = set(bps)
    if sums:
        pts |= {p + q for p in bps for q in bps}
    pts.add(ZERO)
    top = max(pts)
    pts.add(top + 1)
    t = [p for p in _with_midpoints(pts) if p > 0]
    values = {v for F in dists for v in _as_pieces(F)[1]}
    a = {Fraction(k, 64) for k in range(1, 64)} | {v for v in values if 0 < v < 1}
    return GridSpec(tuple(t), tuple(a))


def _require(grid: GridSpec, points):
    have = set(grid.t)
    missing = [p for p in points if p > 0 and p not in have]
    if missing:
        raise GridTooCoarse(f"grid lacks required points {missing[:4]}")
    top = max(points, default=ZERO)
    if not grid.t or grid.t[-1] <= top:
        raise GridTooCoarse("grid needs a point beyond the last breakpoint")


def grid_level(F: Distribution, a: Fraction, grid: GridSpec):
    """``max{t in grid : F(t) <= a}``, read as infinity when the tail qualifies."""
    bps, vals = _as_pieces(F)
    _require(grid, bps)
    best = ZERO
    for t in grid.t:
        if scan_eval(F, t) <= a:
            best = t
    if best == grid.t[-1]:
        return INF
    return best


def grid_convolve_at(F: Distribution, G: Distribution, t: Fraction) -> Fraction:
    """``max_s min(F(s), G(t-s))`` over every cell of the split interval ``[0, t]``.

    Both legs are constant between the points ``{0, t} u bps(F) u (t - bps(G))``,
    so those points and the cell midpoints exhaust all attainable values.
    """
    if t <= 0:
        return ZERO
    cuts = {ZERO, t}
    cuts |= {b for b in _as_pieces(F)[0] if b < t}
    cuts |= {t - b for b in _as_pieces(G)[0] if b < t}
    return max(min(scan_eval(F, s), scan_eval(G, t - s)) for s in _with_midpoints(cuts))


def grid_convolve(F: Distribution, G: Distribution, grid: GridSpec) -> Dict[Fraction, Fraction]:
    fb, gb = _as_pieces(F)[0], _as_pieces(G)[0]
    _require(grid, list(fb) + list(gb) + [p + q for p in fb for q in gb])
    return {t: grid_convolve_at(F, G, t) for t in grid.t}


def _godel(a: Fraction, b: Fraction) -> Fraction:
    return ONE if a <= b else b


def grid_residual(F: Distribution, G: Distribution, grid: GridSpec) -> Fraction:
    """``min_{t in grid} (F(t) -> G(t))`` with the Goedel implication."""
    _require(grid, list(_as_pieces(F)[0]) + list(_as_pieces(G)[0]))
    return min((_godel(scan_eval(F, t), scan_eval(G, t)) for t in grid.t), default=ONE)


def grid_bm(space: FuzzyMetricSpace) -> Dict[Tuple[int, int, int], Fraction]:
    """End-to-end grid evaluation of the implication-based construction."""
    n = space.n
    M = space.entries
    grid = grid_for(*[M[i][j] for i in range(n) for j in range(n)])
    out = {}
    for x in range(n):
        for y in range(n):
            for z in range(n):
                out[(x, y, z)] = min(
                    _godel(scan_eval(M[x][z], t), grid_convolve_at(M[x][y], M[y][z], t))
                    for t in grid.t)
    return out


def grid_residuum(kind: TNorm, a: Fraction, b: Fraction, steps: int = 10_000) -> Fraction:
    """``max{c on the grid k/steps : a * c <= b}``."""
    best = ZERO
    for k in range(steps + 1):
        c = Fraction(k, steps)
        if tnorm(kind, a, c) <= b:
            best = c
    return best


# --- generators -------------------------------------------------------------------

def _labels(n: int) -> Tuple[str, ...]:
    return tuple(f"p{i}" for i in range(n))


def _taxicab(pts) -> List[List[Fraction]]:
    return [[abs(p[0] - q[0]) + abs(p[1] - q[1]) for q in pts] for p in pts]


def random_points(n: int, rng: random.Random, span: int = 8, distinct: bool = True):
    pts = []
    while len(pts) < n:
        p = (Fraction(rng.randint(0, span), rng.choice((1, 1, 2))),
             Fraction(rng.randint(0, span // 2), rng.choice((1, 1, 2))))
        if distinct and p in pts:
            continue
        pts.append(p)
    return pts


def gen_random_metric(n: int, seed: int) -> FiniteMetric:
    """Taxicab distances between distinct random rational points of the plane."""
    if n < 1:
        raise ValueError("need at least one point")
    rng = random.Random(seed)
    return FiniteMetric(_labels(n), _taxicab(random_points(n, rng)))


def gen_random_nest(n: int, m: int, seed: int) -> MetricNest:
    """A nest whose slices are a base taxicab metric plus ``m`` stacked
    nonnegative pseudometric increments switched on at random levels."""
    rng = random.Random(seed)
    base = _taxicab(random_points(n, rng))
    levels = sorted(Fraction(k, 100) for k in rng.sample(range(1, 100), m))
    slices = [base]
    for _ in range(m):
        prev = slices[-1]
        if rng.random() < 0.25:
            slices.append(prev)
            continue
        scale = Fraction(rng.randint(1, 4), rng.choice((1, 2)))
        inc = _taxicab(random_points(n, rng, span=2, distinct=False))
        slices.append([[prev[i][j] + scale * inc[i][j] for j in range(n)] for i in range(n)])
    pairs = {(i, j): PairLevels(levels, [s[i][j] for s in slices])
             for i in range(n) for j in range(i + 1, n)}
    return MetricNest(_labels(n), pairs)


def gen_random_step_space(n: int, k: int, seed: int) -> FuzzyMetricSpace:
    """A valid step space with at most ``k`` breakpoints per entry."""
    if k < 1:
        raise ValueError("need at least one breakpoint")
    return fuzzy_metric_from_nest(gen_random_nest(n, k - 1, seed))


def gen_random_step(k: int, seed: int, start_zero: bool = False, end_one: bool = False) -> Distribution:
    """A random step distribution with at most ``k`` breakpoints."""
    rng = random.Random(seed)
    bps = sorted(Fraction(v, rng.choice((1, 2, 3))) for v in rng.sample(range(1, 40), k))
    bps = sorted(set(bps))
    vals = sorted(Fraction(rng.randint(0, 16), 16) for _ in range(len(bps) + 1))
    if start_zero:
        vals[0] = ZERO
    if end_one:
        vals[-1] = ONE
    return step(bps, vals)
