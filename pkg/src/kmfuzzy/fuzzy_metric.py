"""Finite KM-fuzzy metric spaces and their axiom checks."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import TYPE_CHECKING, List, Optional, Sequence, Tuple

from . import distributions as dist
from .distributions import POINT_ONE, Distribution, Scaled
from .errors import (AsymmetricEntries, DiagonalNotOne, MixedVariant, OffDiagonalOne,
                     ShapeMismatch)
from .grades import ONE, TNorm, tnorm
from .report import Check, Report

if TYPE_CHECKING:
    from .nest import FiniteMetric


def structural_problems(points: Sequence[str], entries) -> List[Tuple[type, str, tuple]]:
    """Every violated structural invariant as ``(error class, message, pair)``."""
    n = len(points)
    if n < 1 or len(set(points)) != n:
        return [(ShapeMismatch, "points must be a non-empty list of distinct labels", ())]
    if len(entries) != n or any(len(row) != n for row in entries):
        return [(ShapeMismatch, f"entries must be a {n}x{n} matrix", ())]
    out = []
    for i in range(n):
        if entries[i][i] is not POINT_ONE:
            out.append((DiagonalNotOne, f"M({points[i]},{points[i]},-) is not 1 for t>0", (i, i)))
    for i in range(n):
        for j in range(i + 1, n):
            if entries[i][j] != entries[j][i]:
                out.append((AsymmetricEntries,
                            f"M({points[i]},{points[j]},-) != M({points[j]},{points[i]},-)", (i, j)))
    for i in range(n):
        for j in range(n):
            if i != j and entries[i][j] is POINT_ONE:
                out.append((OffDiagonalOne,
                            f"M({points[i]},{points[j]},t)=1 for all t>0 but the points differ",
                            (i, j)))
    families = {dist.family(entries[i][j]) for i in range(n) for j in range(n) if i != j}
    families.discard(None)
    if len(families) > 1:
        out.append((MixedVariant, f"off-diagonal entries mix families {sorted(map(str, families))}", ()))
    return out


@dataclass(frozen=True)
class FuzzyMetricSpace:
    points: Tuple[str, ...]
    entries: Tuple[Tuple[Distribution, ...], ...]
    tnorm: TNorm = TNorm.MIN

    def __post_init__(self):
        object.__setattr__(self, "points", tuple(self.points))
        object.__setattr__(self, "entries", tuple(tuple(row) for row in self.entries))
        object.__setattr__(self, "tnorm", TNorm(self.tnorm))
        problems = structural_problems(self.points, self.entries)
        if problems:
            cls, msg, _ = problems[0]
            raise cls(msg)

    @property
    def n(self) -> int:
        return len(self.points)

    def __getitem__(self, ij) -> Distribution:
        i, j = ij
        return self.entries[i][j]

    @property
    def family(self):
        """Shared family of the off-diagonal entries (None for a single point)."""
        for row in self.entries:
            for F in row:
                if F is not POINT_ONE:
                    return dist.family(F)
        return None

    @property
    def is_step(self) -> bool:
        return self.family in ("step", None)

    def with_tnorm(self, kind: TNorm) -> "FuzzyMetricSpace":
        return FuzzyMetricSpace(self.points, self.entries, kind)


def from_entries(points: Sequence[str], entries, kind: TNorm = TNorm.MIN) -> FuzzyMetricSpace:
    """Construct a space; ``None`` on the diagonal is read as POINT_ONE. FM4 is not checked."""
    rows = [list(row) for row in entries]
    for i, row in enumerate(rows):
        if i < len(row) and row[i] is None:
            row[i] = POINT_ONE
    return FuzzyMetricSpace(tuple(points), tuple(tuple(r) for r in rows), kind)


def standard_from_metric(d: "FiniteMetric", kind: TNorm = TNorm.MIN) -> FuzzyMetricSpace:
    n = len(d.points)
    rows = [[POINT_ONE if i == j else dist.standard(d.dist[i][j]) for j in range(n)]
            for i in range(n)]
    return FuzzyMetricSpace(d.points, rows, kind)


def exponential_from_metric(d: "FiniteMetric") -> FuzzyMetricSpace:
    n = len(d.points)
    rows = [[POINT_ONE if i == j else dist.exponential(d.dist[i][j]) for j in range(n)]
            for i in range(n)]
    return FuzzyMetricSpace(d.points, rows, TNorm.PROD)


# --- FM4 -------------------------------------------------------------------

def _level_witness(Fxy, Fyz, Fxz):
    """A grade at which the per-level triangle inequality fails, if any."""
    if isinstance(Fxz, Scaled) or isinstance(Fxy, Scaled) or isinstance(Fyz, Scaled):
        candidates = [Fraction(1, 2)]
    else:
        # levels are constant on [v_j, v_{j+1}); 0 stands for the first piece,
        # so move that representative inside (0, 1)
        vals = sorted({v for F in (Fxy, Fyz, Fxz) for v in dist._pieces(F)[1] if v < ONE})
        positive = [v for v in vals if v > 0]
        first = (positive[0] if positive else ONE) / 2
        candidates = [first] + positive
    for a in candidates:
        lhs = dist.level(Fxz, a)
        rhs = dist.level(Fxy, a) + dist.level(Fyz, a)
        if lhs > rhs:
            return a, lhs, rhs
    return None


def _rectangle_violation(kind: TNorm, F: Distribution, G: Distribution, H: Distribution):
    """Search the piece rectangles of two step legs for ``F(s)*G(r) > H(s+r)``.

    On a rectangle ``(p1,p2] x (q1,q2]`` the legs are constant and the
    smallest value of ``H`` over ``s + r`` is its right limit at ``p1 + q1``.
    """
    fb, fv = dist._pieces(F)
    gb, gv = dist._pieces(G)
    f_starts = (Fraction(0),) + tuple(fb)
    g_starts = (Fraction(0),) + tuple(gb)
    for p1, v in zip(f_starts, fv):
        for q1, w in zip(g_starts, gv):
            lhs = tnorm(kind, v, w)
            floor = dist.right_limit(H, p1 + q1)
            if lhs > floor:
                return (p1, q1, lhs, floor)
    return None


def _scaled_fm4(kind: TNorm, F: Scaled, G: Scaled, H: Scaled):
    """Decide FM4 for a triple of same-generator scaled entries.

    Returns ``(passed, detail)``.
    """
    d1, d2, d3 = F.scale, G.scale, H.scale
    if d3 <= d1 + d2:
        # holds under min, hence under every weaker t-norm
        return True, ""
    if F.generator is dist.Generator.EXP and kind is TNorm.PROD:
        # inf over s+r=t of d1/s + d2/r is (sqrt d1 + sqrt d2)^2 / t
        gap = d3 - d1 - d2
        ok = gap * gap <= 4 * d1 * d2
        return ok, f"needs (sqrt({d1})+sqrt({d2}))^2 >= {d3}"
    if kind is TNorm.MIN:
        return False, f"scale {d3} > {d1} + {d2}"
    # no closed form here: probe a log grid and say so
    grid = [10 ** (k / 8) for k in range(-32, 33)]
    ev = lambda D, t: float(dist.evaluate(D, Fraction(t)))
    for s in grid:
        for r in grid:
            a, b = ev(F, s), ev(G, r)
            lhs = a * b if kind is TNorm.PROD else max(0.0, a + b - 1)
            if lhs > ev(H, s + r) + 1e-12:
                return False, f"numeric probe: s={s:.4g}, r={r:.4g}"
    return True, "numeric probe, no violation found"


def check_fm4(space: FuzzyMetricSpace) -> Check:
    kind = space.tnorm
    M = space.entries
    n = space.n
    for x in range(n):
        for y in range(n):
            for z in range(n):
                Fxy, Fyz, Fxz = M[x][y], M[y][z], M[x][z]
                if Fxz is POINT_ONE or Fxy is POINT_ONE or Fyz is POINT_ONE:
                    continue  # a point-one leg makes the bound an identity
                scaled = isinstance(Fxz, Scaled)
                if kind is TNorm.MIN:
                    if dist.pointwise_le(dist.supmin_convolve(Fxy, Fyz), Fxz):
                        continue
                    w = _level_witness(Fxy, Fyz, Fxz)
                    detail = ""
                    if w is not None:
                        a, lhs, rhs = w
                        detail = f"at level a={a}: d_a(x,z)={lhs} > d_a(x,y)+d_a(y,z)={rhs}"
                    return Check("FM4", False, (x, y, z), detail)
                if scaled:
                    ok, detail = _scaled_fm4(kind, Fxy, Fyz, Fxz)
                    if not ok:
                        return Check("FM4", False, (x, y, z), detail)
                    continue
                v = _rectangle_violation(kind, Fxy, Fyz, Fxz)
                if v is not None:
                    p1, q1, lhs, floor = v
                    return Check("FM4", False, (x, y, z),
                                 f"on s>{p1}, r>{q1}: M(x,y,s)*M(y,z,r)={lhs} > M(x,z,{p1 + q1}+)={floor}")
    return Check("FM4", True)


def check_fm4_rectangles(space: FuzzyMetricSpace) -> bool:
    """FM4 on a step space by rectangle enumeration alone (any t-norm)."""
    n = space.n
    M = space.entries
    return all(_rectangle_violation(space.tnorm, M[x][y], M[y][z], M[x][z]) is None
               for x in range(n) for y in range(n) for z in range(n))


def validate(space: FuzzyMetricSpace) -> Report:
    """FM1-FM6 for a constructed space, each with a witness on failure."""
    rep = Report()
    rep.add(Check("FM1", True, detail="M(x,y,0)=0 by construction"))
    rep.add(Check("FM2", True, detail="diagonal is 1 for t>0, off-diagonal entries are not"))
    rep.add(Check("FM3", True, detail="entries symmetric"))
    rep.add(check_fm4(space))
    rep.add(Check("FM5", True, detail="left-continuous by construction"))
    n = space.n
    bad = next(((i, j) for i in range(n) for j in range(n)
                if i != j and dist.terminal_value(space.entries[i][j]) != ONE), None)
    if bad is None:
        rep.add(Check("FM6", True))
    else:
        i, j = bad
        rep.add(Check("FM6", False, bad,
                      f"lim M(x,y,t) = {dist.terminal_value(space.entries[i][j])} != 1"))
    return rep


def structural_report(points, entries) -> Report:
    """Report structural violations of raw data as FM2/FM3 failures (no exception)."""
    rep = Report()
    probs = structural_problems(points, entries)
    shape = [p for p in probs if p[0] in (ShapeMismatch, MixedVariant)]
    for cls, msg, w in shape:
        rep.add(Check("shape" if cls is ShapeMismatch else "family", False, w or None, msg))
    if shape:
        return rep
    fm2 = [p for p in probs if p[0] in (DiagonalNotOne, OffDiagonalOne)]
    fm3 = [p for p in probs if p[0] is AsymmetricEntries]
    label = lambda w: tuple(points[k] for k in w)
    rep.add(Check("FM2", not fm2, label(fm2[0][2]) if fm2 else None, fm2[0][1] if fm2 else ""))
    rep.add(Check("FM3", not fm3, label(fm3[0][2]) if fm3 else None, fm3[0][1] if fm3 else ""))
    return rep
