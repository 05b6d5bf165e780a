"""Distance distributions ``t -> M(x, y, t)`` and their exact algebra.

Three shapes are supported:

* :class:`Step` -- a finite, nondecreasing, left-continuous step function;
* :class:`Scaled` -- ``G(t / d)`` for the standard generator ``t/(t+1)`` or the
  exponential generator ``exp(-1/t)``;
* :data:`POINT_ONE` -- the diagonal entry, 1 for every ``t > 0``.

Every function is zero at ``t = 0``. The central tool is level inversion,
``level(F, a) = sup{t : F(t) <= a}``, which turns sup-min convolution into
addition of levels. Lattice conventions: ``sup {} = 0`` and ``inf {} = 1``.
"""

from __future__ import annotations

import enum
import math
from bisect import bisect_left, bisect_right
from dataclasses import dataclass
from decimal import Decimal, localcontext
from fractions import Fraction
from functools import total_ordering
from typing import Sequence, Tuple, Union

from .errors import MixedVariant
from .grades import ONE, ZERO, GradeLike, parse_rational

INF = math.inf


class Generator(enum.Enum):
    STANDARD = "standard"
    EXP = "exp"


@dataclass(frozen=True)
class Step:
    """Canonical step distribution.

    ``values[j]`` is taken on ``(breakpoints[j-1], breakpoints[j]]`` with an
    implicit ``breakpoints[-1] = 0``; the last value holds on
    ``(breakpoints[-1], inf)``. Adjacent equal values are merged on
    construction, so two Steps are equal exactly when the functions are.
    """

    breakpoints: Tuple[Fraction, ...]
    values: Tuple[Fraction, ...]

    def __post_init__(self):
        bps = tuple(parse_rational(t) for t in self.breakpoints)
        vals = tuple(parse_rational(v) for v in self.values)
        if len(vals) != len(bps) + 1:
            raise ValueError("a step distribution needs exactly one more value than breakpoints")
        if any(t <= 0 for t in bps) or any(b <= a for a, b in zip(bps, bps[1:])):
            raise ValueError(f"breakpoints must be positive and strictly increasing: {bps}")
        if any(not ZERO <= v <= ONE for v in vals):
            raise ValueError(f"values must lie in [0, 1]: {vals}")
        if any(b < a for a, b in zip(vals, vals[1:])):
            raise ValueError(f"values must be nondecreasing: {vals}")
        keep_bps, keep_vals = [], [vals[0]]
        for t, v in zip(bps, vals[1:]):
            if v != keep_vals[-1]:
                keep_bps.append(t)
                keep_vals.append(v)
        if keep_vals == [ONE]:
            raise ValueError("constant-one step is the diagonal distribution; use step() or POINT_ONE")
        object.__setattr__(self, "breakpoints", tuple(keep_bps))
        object.__setattr__(self, "values", tuple(keep_vals))

    def __repr__(self):
        bps = ", ".join(str(t) for t in self.breakpoints)
        vals = ", ".join(str(v) for v in self.values)
        return f"Step(t=({bps}), v=({vals}))"


@dataclass(frozen=True)
class Scaled:
    generator: Generator
    scale: Fraction

    def __post_init__(self):
        object.__setattr__(self, "generator", Generator(self.generator))
        d = parse_rational(self.scale)
        if d <= 0:
            raise ValueError("scale must be positive")
        object.__setattr__(self, "scale", d)


class _PointOne:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "POINT_ONE"

    def __reduce__(self):
        return (_PointOne, ())


POINT_ONE = _PointOne()

Distribution = Union[Step, Scaled, _PointOne]


def step(breakpoints: Sequence[GradeLike], values: Sequence[GradeLike]) -> Distribution:
    """Build a canonical step distribution, collapsing constant 1 to POINT_ONE."""
    vals = [parse_rational(v) for v in values]
    if vals and all(v == ONE for v in vals):
        return POINT_ONE
    return Step(tuple(breakpoints), tuple(vals))


def standard(d: GradeLike) -> Scaled:
    return Scaled(Generator.STANDARD, parse_rational(d))


def exponential(d: GradeLike) -> Scaled:
    return Scaled(Generator.EXP, parse_rational(d))


def family(F: Distribution):
    """Variant family tag; POINT_ONE is compatible with every family (None)."""
    if F is POINT_ONE:
        return None
    if isinstance(F, Step):
        return "step"
    return F.generator


def check_compatible(F: Distribution, G: Distribution):
    fa, fb = family(F), family(G)
    if fa is not None and fb is not None and fa != fb:
        raise MixedVariant(f"cannot combine {F!r} with {G!r}")


@total_ordering
@dataclass(frozen=True)
class ExpLevel:
    """The irrational level ``scale / ln(1/a)`` of an exponential distribution.

    Levels taken at the same ``a`` compare and add through their scales only,
    which keeps all same-level reasoning exact. Comparison against a rational
    uses 60-digit decimals; equality with a rational is impossible for
    rational ``a`` in (0, 1) because the logarithm is transcendental.
    """

    scale: Fraction
    a: Fraction

    def __add__(self, other):
        if isinstance(other, ExpLevel):
            if other.a != self.a:
                raise ValueError("exponential levels at different grades do not add exactly")
            return ExpLevel(self.scale + other.scale, self.a)
        if other == 0:
            return self
        if other == INF:
            return INF
        return NotImplemented

    __radd__ = __add__

    def _decimal(self) -> Decimal:
        with localcontext() as ctx:
            ctx.prec = 60
            a = Decimal(self.a.numerator) / Decimal(self.a.denominator)
            d = Decimal(self.scale.numerator) / Decimal(self.scale.denominator)
            return d / -a.ln()

    def __float__(self):
        return float(self._decimal())

    def __eq__(self, other):
        if isinstance(other, ExpLevel):
            if other.a == self.a:
                return self.scale == other.scale
            return self._decimal() == other._decimal()
        return False

    def __lt__(self, other):
        if isinstance(other, ExpLevel):
            if other.a == self.a:
                return self.scale < other.scale
            return self._decimal() < other._decimal()
        if other == INF:
            return True
        if isinstance(other, (int, Fraction)):
            with localcontext() as ctx:
                ctx.prec = 60
                q = Fraction(other)
                return self._decimal() < Decimal(q.numerator) / Decimal(q.denominator)
        return NotImplemented

    def __hash__(self):
        return hash((self.scale, self.a))

    def __repr__(self):
        return f"ExpLevel({self.scale}/ln(1/{self.a}) ~ {float(self):.6g})"


def _pieces(F: Distribution) -> Tuple[Tuple[Fraction, ...], Tuple[Fraction, ...]]:
    if F is POINT_ONE:
        return (), (ONE,)
    return F.breakpoints, F.values


def _eval_pieces(bps, vals, t: Fraction) -> Fraction:
    if t <= 0:
        return ZERO
    return vals[bisect_left(bps, t)]


def evaluate(F: Distribution, t: GradeLike):
    """``F(t)``; exact except for the exponential family, which returns a float."""
    t = parse_rational(t)
    if t < 0:
        raise ValueError("distributions are defined on [0, inf)")
    if t == 0:
        return ZERO
    if isinstance(F, Scaled):
        if F.generator is Generator.STANDARD:
            return t / (t + F.scale)
        return math.exp(-F.scale / t)
    return _eval_pieces(*_pieces(F), t)


def right_limit(F: Distribution, t: Fraction) -> Fraction:
    """``F(t+)``, the value just to the right of ``t`` (step shapes only)."""
    bps, vals = _pieces(F)
    return vals[bisect_right(bps, t)]


def level(F: Distribution, a: GradeLike):
    """``sup{t >= 0 : F(t) <= a}``.

    Returns a Fraction, :data:`INF`, or an :class:`ExpLevel` for the
    exponential family.
    """
    a = parse_rational(a)
    if a >= ONE:
        return INF
    if a < ZERO:
        raise ValueError("level index must be nonnegative")
    if F is POINT_ONE:
        return ZERO
    if isinstance(F, Scaled):
        if a == 0:
            return ZERO
        if F.generator is Generator.STANDARD:
            return a * F.scale / (1 - a)
        return ExpLevel(F.scale, a)
    j = bisect_right(F.values, a) - 1
    if j < 0:
        return ZERO
    if j == len(F.breakpoints):
        return INF
    return F.breakpoints[j]


def supmin_convolve(F: Distribution, G: Distribution) -> Distribution:
    """``H(t) = sup_{s+r=t} min(F(s), G(r))`` via ``level(H,a) = level(F,a) + level(G,a)``."""
    check_compatible(F, G)
    if F is POINT_ONE:
        return G
    if G is POINT_ONE:
        return F
    if isinstance(F, Scaled):
        return Scaled(F.generator, F.scale + G.scale)
    bps, vals = [], []
    prev = ZERO
    for a in sorted(set(F.values) | set(G.values)):
        total = level(F, a) + level(G, a)
        if total == INF:
            vals.append(a)
            break
        if total > prev:
            vals.append(a)
            bps.append(total)
            prev = total
    return step(bps, vals)


def _probe_points(F: Distribution, G: Distribution):
    # right endpoints of every merged piece, plus one point in the unbounded tail
    pts = sorted(set(_pieces(F)[0]) | set(_pieces(G)[0]))
    pts.append(pts[-1] + 1 if pts else ONE)
    return pts


def pointwise_le(F: Distribution, G: Distribution) -> bool:
    """True iff ``F(t) <= G(t)`` for all ``t >= 0``."""
    check_compatible(F, G)
    if G is POINT_ONE:
        return True
    if F is POINT_ONE:
        return False
    if isinstance(F, Scaled):
        return F.scale >= G.scale
    return all(_eval_pieces(*_pieces(F), t) <= _eval_pieces(*_pieces(G), t)
               for t in _probe_points(F, G))


def godel_residual_inf(F: Distribution, G: Distribution) -> Fraction:
    """``inf_{t>0} (F(t) -> G(t))`` under the Goedel implication."""
    check_compatible(F, G)
    if G is POINT_ONE:
        return ONE
    if isinstance(G, Scaled):
        # both strictly increasing from 0: either F <= G everywhere or G wins
        # nowhere and its infimum near 0 is 0
        if F is POINT_ONE:
            return ZERO
        return ONE if F.scale >= G.scale else ZERO
    fb, fv = _pieces(F)
    result = ONE
    for t in _probe_points(F, G):
        f, g = _eval_pieces(fb, fv, t), _eval_pieces(G.breakpoints, G.values, t)
        if f > g and g < result:
            result = g
    return result


def pointwise_min(F: Distribution, G: Distribution) -> Distribution:
    check_compatible(F, G)
    if F is POINT_ONE:
        return G
    if G is POINT_ONE:
        return F
    if isinstance(F, Scaled):
        return F if F.scale >= G.scale else G
    pts = _probe_points(F, G)
    vals = [min(evaluate(F, t), evaluate(G, t)) for t in pts]
    return step(pts[:-1], vals)


def dilate(F: Distribution, factor: GradeLike) -> Distribution:
    """``t -> F(t / factor)`` for a positive rational factor."""
    c = parse_rational(factor)
    if c <= 0:
        raise ValueError("dilation factor must be positive")
    if F is POINT_ONE:
        return F
    if isinstance(F, Scaled):
        return Scaled(F.generator, F.scale * c)
    return Step(tuple(t * c for t in F.breakpoints), F.values)


def terminal_value(F: Distribution) -> Fraction:
    """``lim_{t -> inf} F(t)``."""
    if isinstance(F, Scaled):
        return ONE
    return _pieces(F)[1][-1]
