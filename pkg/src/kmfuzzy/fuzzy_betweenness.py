"""Fuzzy ternary relations and the two fuzzy betweenness constructions.

``bm_from_fuzzy_metric`` evaluates, for each triple,

    inf_{t>0} ( M(x,z,t) -> sup_{s+r=t} min(M(x,y,s), M(y,z,r)) )

with the Goedel implication, while ``bd_from_nest`` takes the supremum of
the levels ``a`` at which ``d_a(x,z) >= d_a(x,y) + d_a(y,z)``. The two agree
on every step space.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, List, Optional, Tuple

import numpy as np

from . import distributions as dist
from .fuzzy_metric import FuzzyMetricSpace
from .grades import ONE, ZERO, TNorm, parse_rational, tnorm
from .nest import MetricNest, nest_from_fuzzy_metric
from .relations import (FIVEPOINT, FOURPOINT, VARS4, VARS5, TernaryRelation,
                        betweenness_at_level, pattern_violation)
from .report import Check, Report

FP = {"F" + k: v for k, v in FOURPOINT.items()}
FT = {"F" + k: v for k, v in FIVEPOINT.items()}

SYSTEMS = {
    "Star": ("FB1", "FB2", "FB3", "FB4"),
    "StrongStar": ("SFB1", "SFB2", "SFB3", "SFB4"),
    "FBR": ("FBR1", "FBR2", "FBR3", "FBR4", "FBR5"),
}


class FuzzyTernaryRelation:
    """A fully populated ``n x n x n`` tensor of exact grades."""

    def __init__(self, grades):
        arr = np.empty(np.shape(grades)[:3], dtype=object)
        n = arr.shape[0]
        if arr.shape != (n, n, n):
            raise ValueError("grades must form an n x n x n tensor")
        for idx in np.ndindex(arr.shape):
            g = parse_rational(grades[idx[0]][idx[1]][idx[2]])
            if not ZERO <= g <= ONE:
                raise ValueError(f"grade {g} at {idx} outside [0, 1]")
            arr[idx] = g
        arr.setflags(write=False)
        self.grades = arr
        self.n = n
        self._ranks = None

    @classmethod
    def from_crisp(cls, T: TernaryRelation) -> "FuzzyTernaryRelation":
        return cls(np.where(T.data, ONE, ZERO))

    @classmethod
    def constant(cls, n: int, value=ONE) -> "FuzzyTernaryRelation":
        return cls(np.full((n, n, n), parse_rational(value), dtype=object))

    def __getitem__(self, xyz) -> Fraction:
        return self.grades[tuple(xyz)]

    def __eq__(self, other):
        return isinstance(other, FuzzyTernaryRelation) and self.n == other.n and \
            bool(np.all(self.grades == other.grades))

    def values(self) -> List[Fraction]:
        return sorted(set(self.grades.flat))

    def ranks(self) -> Tuple[np.ndarray, List[Fraction]]:
        """Order-preserving integer codes; min/max/<= commute with the encoding."""
        if self._ranks is None:
            levels = self.values()
            code = {v: k for k, v in enumerate(levels)}
            r = np.vectorize(code.__getitem__, otypes=[np.int64])(self.grades)
            self._ranks = (r, levels)
        return self._ranks

    def level_cut(self, a) -> TernaryRelation:
        return level_cut(self, a)

    def nonzero(self) -> List[Tuple[Tuple[int, int, int], Fraction]]:
        return [(tuple(int(v) for v in idx), self.grades[idx])
                for idx in np.ndindex(self.grades.shape) if self.grades[idx] > 0]

    def __repr__(self):
        return f"FuzzyTernaryRelation(n={self.n}, support={len(self.nonzero())})"


def level_cut(B: FuzzyTernaryRelation, a) -> TernaryRelation:
    a = parse_rational(a)
    return TernaryRelation(B.n, data=np.asarray(B.grades >= a, dtype=bool))


def max_discrepancy(A: FuzzyTernaryRelation, B: FuzzyTernaryRelation) -> Fraction:
    return max(abs(a - b) for a, b in zip(A.grades.flat, B.grades.flat))


# --- inequality checks under a t-norm ------------------------------------------

def _encoded(B: FuzzyTernaryRelation, kind: TNorm):
    """Array, conjunction and decoder suited to ``kind``."""
    if kind is TNorm.MIN:
        r, levels = B.ranks()
        return r, np.minimum, levels.__getitem__
    if kind is TNorm.PROD:
        return B.grades, lambda p, q: p * q, lambda v: v
    return B.grades, lambda p, q: np.maximum(p + q - 1, ZERO), lambda v: v


def _inequality(B, kind, name, ants, cons, variables, distinct=False) -> Check:
    arr, conj, decode = _encoded(B, kind)
    v = pattern_violation(arr, ants, cons, variables, conj, distinct)
    if v is None:
        return Check(name, True)
    idx, lhs, rhs = v
    return Check(name, False, idx, f"lhs={decode(lhs)} > rhs={decode(rhs)}")


def check_fp(B: FuzzyTernaryRelation, k: str, kind: TNorm = TNorm.MIN,
             distinct: bool = False) -> Check:
    """FP1..FP8; witness ``(x, y, s, t)``."""
    ants, cons = FP[k]
    return _inequality(B, kind, k, ants, cons, VARS4, distinct)


def check_ft(B: FuzzyTernaryRelation, k: str, kind: TNorm = TNorm.MIN,
             distinct: bool = False) -> Check:
    """FT1..FT6; witness ``(x, y, z, s, t)``."""
    ants, cons = FT[k]
    return _inequality(B, kind, k, ants, cons, VARS5, distinct)


def check_fuzzy_transitivities(B: FuzzyTernaryRelation, kind: TNorm = TNorm.MIN,
                               distinct: bool = False) -> Report:
    rep = Report()
    for k in FP:
        rep.add(check_fp(B, k, kind, distinct))
    for k in FT:
        rep.add(check_ft(B, k, kind, distinct))
    return rep


def _first(mask):
    hits = np.argwhere(np.asarray(mask, dtype=bool))
    return None if len(hits) == 0 else tuple(int(v) for v in hits[0])


def check_fuzzy_axioms(B: FuzzyTernaryRelation, system: str = "FBR",
                       kind: TNorm = TNorm.MIN) -> Report:
    """The axiom list of ``system`` ('Star', 'StrongStar' or 'FBR') under ``kind``."""
    names = SYSTEMS[system]
    g = B.grades
    n = B.n
    diag = np.arange(n)
    off = ~np.eye(n, dtype=bool)[None, :, :]
    swapped = g.transpose(0, 2, 1)
    rep = Report()

    w = _first(g != g.transpose(2, 1, 0))
    rep.add(Check(names[0], w is None, w,
                  "" if w is None else f"B(x,y,z)={g[w]} != B(z,y,x)={g[w[::-1]]}"))

    w = _first(g[:, diag, diag] != ONE)
    if w is not None:
        w = (w[0], w[1], w[1])
    rep.add(Check(names[1], w is None, w, "" if w is None else f"B(x,y,y)={g[w]}"))

    if system == "Star":
        w = _first((g == ONE) & (swapped == ONE) & off)
        detail = "B(x,y,z)=B(x,z,y)=1 with y != z"
    else:
        conj = np.frompyfunc(lambda p, q: tnorm(kind, p, q), 2, 1)
        w = _first((conj(g, swapped) != ZERO) & off)
        detail = "B(x,y,z)*B(x,z,y) > 0 with y != z"
    rep.add(Check(names[2], w is None, w, "" if w is None else detail))

    rep.add(_inequality(B, kind, names[3], ("oxy", "oyz"), ("oxz",), "oxyz"))
    if system == "FBR":
        rep.add(_inequality(B, kind, names[4], ("oxy", "oyz"), ("xyz",), "oxyz"))
    return rep


# --- the two constructions -------------------------------------------------------

def bm_from_fuzzy_metric(space: FuzzyMetricSpace) -> FuzzyTernaryRelation:
    """Implication-based fuzzy betweenness straight from the distributions."""
    n = space.n
    M = space.entries
    out = np.empty((n, n, n), dtype=object)
    for x in range(n):
        for y in range(n):
            for z in range(n):
                bound = dist.supmin_convolve(M[x][y], M[y][z])
                out[x, y, z] = dist.godel_residual_inf(M[x][z], bound)
    return FuzzyTernaryRelation(out)


def nonsplit_bm(space: FuzzyMetricSpace) -> FuzzyTernaryRelation:
    """The variant that replaces the split sup by the fixed split ``s = r = t/2``.

    Kept as a negative control: it is not reflexive in general.
    """
    n = space.n
    M = space.entries
    out = np.empty((n, n, n), dtype=object)
    for x in range(n):
        for y in range(n):
            for z in range(n):
                bound = dist.pointwise_min(dist.dilate(M[x][y], 2), dist.dilate(M[y][z], 2))
                out[x, y, z] = dist.godel_residual_inf(M[x][z], bound)
    return FuzzyTernaryRelation(out)


def _satisfied_pieces(nest: MetricNest) -> np.ndarray:
    """``sat[p, x, y, z]``: the betweenness equality holds on level piece ``p``."""
    reps = nest.slice_levels()
    S = np.empty((len(reps), nest.n, nest.n), dtype=object)
    for p, a in enumerate(reps):
        for i, row in enumerate(nest.slice(a)):
            for j, v in enumerate(row):
                S[p, i, j] = v
    xz = S[:, :, None, :]
    path = S[:, :, :, None] + S[:, None, :, :]
    return np.asarray(xz >= path, dtype=bool)


def bd_from_nest(nest: MetricNest) -> FuzzyTernaryRelation:
    """Supremum of the levels at which the triple is metric-between in ``d_a``.

    The satisfying set is a finite union of pieces ``[c_j, c_{j+1})``, so the
    supremum is the right end of the topmost satisfying piece.
    """
    sat = _satisfied_pieces(nest)
    edges = nest.breakpoints() + [ONE]
    n = nest.n
    out = np.empty((n, n, n), dtype=object)
    P = sat.shape[0]
    for idx in np.ndindex((n, n, n)):
        col = sat[(slice(None),) + idx]
        top = next((p for p in range(P - 1, -1, -1) if col[p]), None)
        out[idx] = ZERO if top is None else edges[top]
    return FuzzyTernaryRelation(out)


def check_cut_characterization(nest: MetricNest) -> Check:
    """``a <= B(x,y,z)`` iff the triple is between in every slice strictly below ``a``."""
    B = bd_from_nest(nest)
    starts = nest.piece_starts()
    slice_rel = [betweenness_at_level(nest, a) for a in nest.slice_levels()]
    for a in nest.probe_levels() + [ONE]:
        lhs = level_cut(B, a)
        rhs = TernaryRelation.full(nest.n)
        for c, rel in zip(starts, slice_rel):
            if c < a:
                rhs = rhs & rel
        if lhs != rhs:
            diff = np.argwhere(lhs.data != rhs.data)[0]
            return Check("cut", False, (a,) + tuple(int(v) for v in diff),
                         "cut of B and intersection of lower slices differ")
    return Check("cut", True)


def check_strict_characterization(space: FuzzyMetricSpace, levels: Optional[Iterable] = None) -> Check:
    """For strictly increasing (scaled) entries: ``a <= B(x,y,z)`` iff equality holds at ``a``."""
    if space.is_step:
        raise ValueError("the strict characterization needs strictly increasing entries")
    if levels is None:
        levels = [Fraction(k, 64) for k in range(1, 64)]
    B = bm_from_fuzzy_metric(space)
    M = space.entries
    n = space.n
    for a in levels:
        a = parse_rational(a)
        for x in range(n):
            for y in range(n):
                for z in range(n):
                    lhs = a <= B[x, y, z]
                    eq = dist.level(M[x][z], a) == dist.level(M[x][y], a) + dist.level(M[y][z], a)
                    if lhs != eq:
                        return Check("strict-cut", False, (a, x, y, z))
    return Check("strict-cut", True)


def check_equality(space: FuzzyMetricSpace) -> Tuple[bool, Fraction]:
    """Both constructions on a step space; returns (equal, max |difference|)."""
    bm = bm_from_fuzzy_metric(space)
    bd = bd_from_nest(nest_from_fuzzy_metric(space))
    gap = max_discrepancy(bm, bd)
    return gap == 0, gap
