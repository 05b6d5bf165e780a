"""Classical finite metrics, nests of metrics, and the correspondence with
KM-fuzzy metric spaces under the minimum t-norm.

A nest stores, per unordered pair, a right-continuous nondecreasing step
function of the level ``a`` in (0, 1)::

    d_a = w[0]  on (0, a[0])
    d_a = w[j]  on [a[j-1], a[j])
    d_a = w[m]  on [a[m-1], 1)
"""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from . import distributions as dist
from .distributions import POINT_ONE, Step
from .errors import DegenerateLevel, ShapeMismatch, UnsupportedVariant
from .fuzzy_metric import FuzzyMetricSpace
from .grades import ONE, ZERO, TNorm, parse_rational
from .report import Check, Report

HALF = Fraction(1, 2)


def metric_problem(dist_matrix, points=None) -> Optional[Tuple[str, tuple, str]]:
    """First violated metric axiom as ``(kind, witness, detail)`` or None."""
    n = len(dist_matrix)
    name = (lambda i: points[i]) if points else (lambda i: i)
    for i in range(n):
        if dist_matrix[i][i] != 0:
            return "zero", (name(i),), f"d({name(i)},{name(i)})={dist_matrix[i][i]}"
    for i in range(n):
        for j in range(n):
            if dist_matrix[i][j] != dist_matrix[j][i]:
                return "symmetry", (name(i), name(j)), ""
            if i != j and dist_matrix[i][j] <= 0:
                return "positivity", (name(i), name(j)), f"d={dist_matrix[i][j]}"
    for i in range(n):
        for j in range(n):
            for k in range(n):
                lhs = dist_matrix[i][k]
                rhs = dist_matrix[i][j] + dist_matrix[j][k]
                if lhs > rhs:
                    return ("triangle", (name(i), name(j), name(k)),
                            f"d(x,z)={lhs} > d(x,y)+d(y,z)={rhs}")
    return None


@dataclass(frozen=True)
class FiniteMetric:
    points: Tuple[str, ...]
    dist: Tuple[Tuple[Fraction, ...], ...]

    def __post_init__(self):
        pts = tuple(self.points)
        rows = tuple(tuple(parse_rational(v) for v in row) for row in self.dist)
        if len(rows) != len(pts) or any(len(r) != len(pts) for r in rows):
            raise ShapeMismatch("distance matrix does not match the point list")
        object.__setattr__(self, "points", pts)
        object.__setattr__(self, "dist", rows)
        bad = metric_problem(rows, pts)
        if bad is not None:
            kind, w, detail = bad
            raise ValueError(f"not a metric ({kind} fails at {w}) {detail}".strip())

    @property
    def n(self) -> int:
        return len(self.points)

    def __call__(self, i: int, j: int) -> Fraction:
        return self.dist[i][j]


@dataclass(frozen=True)
class PairLevels:
    """Level breakpoints ``a`` and distances ``w`` (``len(w) == len(a) + 1``)."""

    a: Tuple[Fraction, ...]
    w: Tuple[Fraction, ...]

    def __post_init__(self):
        a = tuple(parse_rational(x) for x in self.a)
        w = tuple(parse_rational(x) for x in self.w)
        if len(w) != len(a) + 1:
            raise ShapeMismatch("need one more distance than level breakpoints")
        if any(not ZERO < x < ONE for x in a) or any(y <= x for x, y in zip(a, a[1:])):
            raise ValueError(f"level breakpoints must be strictly increasing in (0, 1): {a}")
        if any(x < 0 for x in w):
            raise ValueError("distances must be nonnegative")
        keep_a, keep_w = [], [w[0]]
        for x, y in zip(a, w[1:]):
            if y != keep_w[-1]:
                keep_a.append(x)
                keep_w.append(y)
        object.__setattr__(self, "a", tuple(keep_a))
        object.__setattr__(self, "w", tuple(keep_w))

    def at(self, a: Fraction) -> Fraction:
        return self.w[bisect_right(self.a, a)]


ZERO_PAIR = PairLevels((), (ZERO,))


@dataclass(frozen=True)
class MetricNest:
    points: Tuple[str, ...]
    pairs: Dict[Tuple[int, int], PairLevels]

    def __post_init__(self):
        pts = tuple(self.points)
        n = len(pts)
        pairs = {}
        for (i, j), p in self.pairs.items():
            if i == j or not (0 <= i < n and 0 <= j < n):
                raise ShapeMismatch(f"bad pair index {(i, j)}")
            key = (min(i, j), max(i, j))
            if key in pairs and pairs[key] != p:
                raise ShapeMismatch(f"pair {key} given twice with different data")
            pairs[key] = p
        missing = [(i, j) for i in range(n) for j in range(i + 1, n) if (i, j) not in pairs]
        if missing:
            raise ShapeMismatch(f"nest is missing pairs {missing[:3]}")
        object.__setattr__(self, "points", pts)
        object.__setattr__(self, "pairs", pairs)

    def __hash__(self):
        return hash((self.points, tuple(sorted(self.pairs.items()))))

    @property
    def n(self) -> int:
        return len(self.points)

    def pair(self, i: int, j: int) -> PairLevels:
        if i == j:
            return ZERO_PAIR
        return self.pairs[(min(i, j), max(i, j))]

    def distance(self, i: int, j: int, a) -> Fraction:
        return self.pair(i, j).at(parse_rational(a))

    def slice(self, a) -> List[List[Fraction]]:
        """The classical metric ``d_a`` as a matrix."""
        a = parse_rational(a)
        return [[self.distance(i, j, a) for j in range(self.n)] for i in range(self.n)]

    def breakpoints(self) -> List[Fraction]:
        return sorted({x for p in self.pairs.values() for x in p.a})

    def piece_starts(self) -> List[Fraction]:
        """Left ends of the pieces on which every ``d_a`` is constant (first is 0, open)."""
        return [ZERO] + self.breakpoints()

    def slice_levels(self) -> List[Fraction]:
        """One representative level per distinct slice."""
        bps = self.breakpoints()
        first = bps[0] / 2 if bps else HALF
        return [first] + bps

    def probe_levels(self) -> List[Fraction]:
        """Piece endpoints inside (0,1) together with every piece midpoint."""
        edges = [ZERO] + self.breakpoints() + [ONE]
        out = set(self.breakpoints())
        out.update((lo + hi) / 2 for lo, hi in zip(edges, edges[1:]))
        return sorted(out)


def validate_nest(nest: MetricNest) -> Report:
    rep = Report()
    bad = next(((nest.points[i], nest.points[j]) for (i, j), p in sorted(nest.pairs.items())
                if any(y < x for x, y in zip(p.w, p.w[1:]))), None)
    rep.add(Check("monotone", bad is None, bad,
                  "" if bad is None else "distances decrease as the level grows"))
    firsts = {}
    for a in nest.slice_levels():
        prob = metric_problem(nest.slice(a), nest.points)
        if prob is not None and prob[0] not in firsts:
            firsts[prob[0]] = (a, prob)
    for kind in ("positivity", "triangle"):
        if kind in firsts:
            a, (_, w, detail) = firsts[kind]
            rep.add(Check(kind, False, w, f"slice a={a}: {detail}"))
        else:
            rep.add(Check(kind, True))
    return rep


def nest_from_fuzzy_metric(space: FuzzyMetricSpace) -> MetricNest:
    """``d_a(x,y) = sup{t : M(x,y,t) <= a}`` materialized for a step space."""
    if not space.is_step:
        raise UnsupportedVariant("only step spaces have a finite nest; query level() instead")
    pairs = {}
    for i in range(space.n):
        for j in range(i + 1, space.n):
            F = space.entries[i][j]
            if F.values[0] != 0:
                raise DegenerateLevel(
                    f"M({space.points[i]},{space.points[j]},t) >= {F.values[0]} for every t>0, "
                    f"so d_a is zero on that pair for a < {F.values[0]}")
            if F.values[-1] != ONE:
                raise DegenerateLevel(
                    f"M({space.points[i]},{space.points[j]},-) never exceeds {F.values[-1]}")
            pairs[(i, j)] = PairLevels(F.values[1:-1], F.breakpoints)
    return MetricNest(space.points, pairs)


def fuzzy_metric_from_nest(nest: MetricNest) -> FuzzyMetricSpace:
    """``M(x,y,t) = sup{a : d_a(x,y) < t}`` for every pair."""
    n = nest.n
    rows = [[POINT_ONE] * n for _ in range(n)]
    for (i, j), p in nest.pairs.items():
        F = Step(p.w, (ZERO,) + p.a + (ONE,))
        rows[i][j] = rows[j][i] = F
    return FuzzyMetricSpace(nest.points, rows, TNorm.MIN)


def level_slice(space: FuzzyMetricSpace, a) -> List[list]:
    """``d_a`` straight from the entries; works for scaled spaces too."""
    return [[dist.level(space.entries[i][j], a) for j in range(space.n)] for i in range(space.n)]


def _space_diff(s1: FuzzyMetricSpace, s2: FuzzyMetricSpace) -> Optional[str]:
    if s1.points != s2.points:
        return "point labels differ"
    for i in range(s1.n):
        for j in range(s1.n):
            if s1.entries[i][j] != s2.entries[i][j]:
                return (f"pair ({s1.points[i]},{s1.points[j]}): "
                        f"{s1.entries[i][j]!r} != {s2.entries[i][j]!r}")
    return None


def _nest_diff(n1: MetricNest, n2: MetricNest) -> Optional[str]:
    if n1.points != n2.points:
        return "point labels differ"
    for key in sorted(n1.pairs):
        if n1.pairs[key] != n2.pairs.get(key):
            i, j = key
            return f"pair ({n1.points[i]},{n1.points[j]}): {n1.pairs[key]} != {n2.pairs.get(key)}"
    return None


def roundtrip_check(obj) -> Tuple[bool, Optional[str]]:
    """Convert there and back; report structural equality and the first difference."""
    if isinstance(obj, FuzzyMetricSpace):
        back = fuzzy_metric_from_nest(nest_from_fuzzy_metric(obj))
        diff = _space_diff(obj.with_tnorm(TNorm.MIN), back)
    elif isinstance(obj, MetricNest):
        back = nest_from_fuzzy_metric(fuzzy_metric_from_nest(obj))
        diff = _nest_diff(obj, back)
    else:
        raise TypeError(f"cannot round-trip {type(obj).__name__}")
    return diff is None, diff
