"""Finite binary and ternary relations, their compositions, the four- and
five-point transitivity properties, and betweenness relations built from
orders, lattices, metrics and nests of metrics.

Relations are dense numpy boolean arrays over ``range(n)``. Every property
check is exhaustive and reports the lexicographically first violating tuple.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from .errors import UniverseMismatch
from .report import Check, Report

# (antecedents, consequents) over the variables in VARS4 / VARS5; a consequent
# list with two entries is a disjunction.
VARS4 = "xyst"
FOURPOINT: Dict[str, Tuple[Tuple[str, ...], Tuple[str, ...]]] = {
    "P1": (("xst", "sty"), ("xsy",)),
    "P2": (("xst", "syt"), ("xsy",)),
    "P3": (("xst", "syt"), ("xyt",)),
    "P4": (("sxt", "syt"), ("sxy", "syx")),
    "P5": (("sxt", "syt"), ("sxy", "yxt")),
    "P6": (("xst", "yst"), ("xyt", "yxt")),
    "P7": (("xst", "yst"), ("xys", "yxs")),
    "P8": (("xst", "yst"), ("xys", "yxt")),
}

VARS5 = "xyzst"
FIVEPOINT: Dict[str, Tuple[Tuple[str, ...], Tuple[str, ...]]] = {
    "T1": (("xyt", "stz"), ("xyz",)),
    "T2": (("xyt", "tsz"), ("xyz",)),
    "T3": (("xyt", "tzs"), ("xyz",)),
    "T4": (("sxt", "tyz"), ("xyz",)),
    "T5": (("xst", "tyz"), ("xyz",)),
    "T6": (("xst", "syz"), ("xyz",)),
}


# --- pattern engine ----------------------------------------------------------

def _gather(arr: np.ndarray, pattern: str, variables: str) -> np.ndarray:
    n = arr.shape[0]
    grids = np.ogrid[tuple(slice(0, n) for _ in variables)]
    return arr[tuple(grids[variables.index(v)] for v in pattern)]


def _distinct_mask(n: int, k: int) -> np.ndarray:
    grids = np.ogrid[tuple(slice(0, n) for _ in range(k))]
    mask = np.ones((n,) * k, dtype=bool)
    for i in range(k):
        for j in range(i + 1, k):
            mask &= grids[i] != grids[j]
    return mask


def pattern_violation(arr: np.ndarray, antecedents: Sequence[str], consequents: Sequence[str],
                      variables: str, conj: Callable = np.minimum, distinct: bool = False):
    """First assignment where ``conj(antecedents) > max(consequents)``.

    Returns ``None`` or ``(assignment, lhs, rhs)``. ``arr`` may hold booleans
    (as 0/1), integer ranks, or Fraction objects. With ``distinct`` only
    assignments of pairwise different points are examined.
    """
    lhs = _gather(arr, antecedents[0], variables)
    for pat in antecedents[1:]:
        lhs = conj(lhs, _gather(arr, pat, variables))
    rhs = _gather(arr, consequents[0], variables)
    for pat in consequents[1:]:
        rhs = np.maximum(rhs, _gather(arr, pat, variables))
    shape = (arr.shape[0],) * len(variables)
    lhs_b = np.broadcast_to(lhs, shape)
    rhs_b = np.broadcast_to(rhs, shape)
    bad = np.asarray(lhs_b > rhs_b, dtype=bool)
    if distinct:
        bad = bad & _distinct_mask(arr.shape[0], len(variables))
    bad = np.argwhere(bad)
    if len(bad) == 0:
        return None
    idx = tuple(int(i) for i in bad[0])
    return idx, lhs_b[idx], rhs_b[idx]


# --- relations ----------------------------------------------------------------

class BinaryRelation:
    def __init__(self, n: int, pairs: Iterable[Tuple[int, int]] = (), data=None):
        if data is None:
            data = np.zeros((n, n), dtype=bool)
            for i, j in pairs:
                data[i, j] = True
        self.data = np.array(data, dtype=bool)
        self.data.setflags(write=False)
        self.n = n

    @classmethod
    def identity(cls, n: int) -> "BinaryRelation":
        return cls(n, data=np.eye(n, dtype=bool))

    def pairs(self) -> List[Tuple[int, int]]:
        return [tuple(int(v) for v in p) for p in np.argwhere(self.data)]

    def __contains__(self, pair) -> bool:
        return bool(self.data[tuple(pair)])

    def __eq__(self, other):
        return isinstance(other, BinaryRelation) and self.n == other.n and \
            np.array_equal(self.data, other.data)

    def __repr__(self):
        return f"BinaryRelation(n={self.n}, pairs={self.pairs()})"


class TernaryRelation:
    def __init__(self, n: int, triples: Iterable[Tuple[int, int, int]] = (), data=None):
        if data is None:
            data = np.zeros((n, n, n), dtype=bool)
            for t in triples:
                if any(not 0 <= v < n for v in t):
                    raise IndexError(f"triple {t} outside range({n})")
                data[tuple(t)] = True
        self.data = np.array(data, dtype=bool)
        if self.data.shape != (n, n, n):
            raise ValueError(f"expected shape {(n, n, n)}, got {self.data.shape}")
        self.data.setflags(write=False)
        self.n = n

    @classmethod
    def full(cls, n: int) -> "TernaryRelation":
        return cls(n, data=np.ones((n, n, n), dtype=bool))

    def triples(self) -> List[Tuple[int, int, int]]:
        return [tuple(int(v) for v in t) for t in np.argwhere(self.data)]

    def __contains__(self, triple) -> bool:
        return bool(self.data[tuple(triple)])

    def __len__(self):
        return int(self.data.sum())

    def __eq__(self, other):
        return isinstance(other, TernaryRelation) and self.n == other.n and \
            np.array_equal(self.data, other.data)

    def __le__(self, other: "TernaryRelation") -> bool:
        _same_universe(self, other)
        return not np.any(self.data & ~other.data)

    def __or__(self, other):
        _same_universe(self, other)
        return TernaryRelation(self.n, data=self.data | other.data)

    def __and__(self, other):
        _same_universe(self, other)
        return TernaryRelation(self.n, data=self.data & other.data)

    def __repr__(self):
        return f"TernaryRelation(n={self.n}, triples={self.triples()})"


def _same_universe(a, b):
    if a.n != b.n:
        raise UniverseMismatch(f"universes of size {a.n} and {b.n}")


# --- basic properties ----------------------------------------------------------

def _first(mask: np.ndarray):
    hits = np.argwhere(mask)
    return None if len(hits) == 0 else tuple(int(v) for v in hits[0])


def check_basic(T: TernaryRelation, which: str) -> Check:
    """Reflexive, Symmetric, Antisymmetric or Complete, with the first violation."""
    d = T.data
    n = T.n
    diag = np.arange(n)
    if which == "Reflexive":
        bad = _first(~d[:, diag, diag])
        w = None if bad is None else (bad[0], bad[1], bad[1])
    elif which == "Symmetric":
        w = _first(d & ~d.transpose(2, 1, 0))
    elif which == "Antisymmetric":
        neq = ~np.eye(n, dtype=bool)[None, :, :]
        w = _first(d & d.transpose(0, 2, 1) & neq)
    elif which == "Complete":
        some = np.zeros_like(d)
        for perm in ((0, 1, 2), (0, 2, 1), (1, 0, 2), (1, 2, 0), (2, 0, 1), (2, 1, 0)):
            # entry (a,b,c) of the transposed view is d at the permuted triple
            some = some | d.transpose(np.argsort(perm))
        w = _first(~some)
    else:
        raise ValueError(f"unknown basic property {which!r}")
    return Check(which, w is None, w)


# --- projections and compositions ---------------------------------------------

def projections(T: TernaryRelation) -> Tuple[BinaryRelation, BinaryRelation, BinaryRelation]:
    """Left, middle and right projections ``(P_l, P_m, P_r)``."""
    d = T.data
    return (BinaryRelation(T.n, data=d.any(axis=0)),
            BinaryRelation(T.n, data=d.any(axis=1)),
            BinaryRelation(T.n, data=d.any(axis=2)))


def compose_tb(T: TernaryRelation, R: BinaryRelation) -> TernaryRelation:
    """``{(x,y,z) : exists t, (x,y,t) in T and (t,z) in R}``."""
    _same_universe(T, R)
    out = np.einsum("xyt,tz->xyz", T.data.astype(np.int64), R.data.astype(np.int64)) > 0
    return TernaryRelation(T.n, data=out)


def compose_bt(R: BinaryRelation, T: TernaryRelation) -> TernaryRelation:
    """``{(x,y,z) : exists t, (x,t) in R and (t,y,z) in T}``."""
    _same_universe(T, R)
    out = np.einsum("xt,tyz->xyz", R.data.astype(np.int64), T.data.astype(np.int64)) > 0
    return TernaryRelation(T.n, data=out)


def compose_i(T: TernaryRelation, S: TernaryRelation, i: int) -> TernaryRelation:
    _same_universe(T, S)
    if i in (1, 2, 3):
        return compose_tb(T, projections(S)[i - 1])
    if i in (4, 5, 6):
        return compose_bt(projections(T)[i - 4], S)
    raise ValueError(f"composition index must be 1..6, got {i}")


def compose_i_direct(T: TernaryRelation, S: TernaryRelation, i: int) -> TernaryRelation:
    """Brute-force loop over the defining quantifiers; a cross-check for compose_i."""
    _same_universe(T, S)
    n = T.n
    t_in, s_in = T.data, S.data
    out = np.zeros((n, n, n), dtype=bool)
    rules = {
        1: lambda x, y, z, t, s: t_in[x, y, t] and s_in[s, t, z],
        2: lambda x, y, z, t, s: t_in[x, y, t] and s_in[t, s, z],
        3: lambda x, y, z, t, s: t_in[x, y, t] and s_in[t, z, s],
        4: lambda x, y, z, t, s: t_in[s, x, t] and s_in[t, y, z],
        5: lambda x, y, z, t, s: t_in[x, s, t] and s_in[t, y, z],
        6: lambda x, y, z, t, s: t_in[x, s, t] and s_in[s, y, z],
    }
    rule = rules[i]
    rng = range(n)
    for x in rng:
        for y in rng:
            for z in rng:
                out[x, y, z] = any(rule(x, y, z, t, s) for t in rng for s in rng)
    return TernaryRelation(n, data=out)


# --- transitivity ----------------------------------------------------------------

def _crisp_detail(ants, cons, variables, idx) -> str:
    env = dict(zip(variables, idx))
    show = lambda pat: "(" + ",".join(str(env[c]) for c in pat) + ")"
    return (" and ".join(show(p) for p in ants) + " in T but "
            + " and ".join(show(p) for p in cons) + " not in T")


def check_fourpoint(T: TernaryRelation, k: str, distinct: bool = False) -> Check:
    """Property ``k`` in P1..P8; the witness is ``(x, y, s, t)``.

    ``distinct`` restricts the quantifier to pairwise different points.
    """
    ants, cons = FOURPOINT[k]
    v = pattern_violation(T.data.astype(np.uint8), ants, cons, VARS4, distinct=distinct)
    if v is None:
        return Check(k, True)
    return Check(k, False, v[0], _crisp_detail(ants, cons, VARS4, v[0]))


def check_fivepoint(T: TernaryRelation, k: str, distinct: bool = False) -> Check:
    """Property ``k`` in T1..T6; the witness is ``(x, y, z, s, t)``.

    Runs both the direct implication and ``T o_i T <= T``; they must agree.
    The composition form has no distinct-point analogue, so it is skipped
    when ``distinct`` is set.
    """
    ants, cons = FIVEPOINT[k]
    v = pattern_violation(T.data.astype(np.uint8), ants, cons, VARS5, distinct=distinct)
    if not distinct:
        by_composition = compose_i(T, T, int(k[1])) <= T
        if by_composition != (v is None):
            raise RuntimeError(f"{k}: composition and direct checks disagree")
    if v is None:
        return Check(k, True)
    return Check(k, False, v[0], _crisp_detail(ants, cons, VARS5, v[0]))


def check_transitivities(T: TernaryRelation, distinct: bool = False) -> Report:
    rep = Report()
    for k in FOURPOINT:
        rep.add(check_fourpoint(T, k, distinct))
    for k in FIVEPOINT:
        rep.add(check_fivepoint(T, k, distinct))
    return rep


# --- betweenness -------------------------------------------------------------------

def check_betweenness(B: TernaryRelation) -> Report:
    d = B.data
    n = B.n
    eye = np.eye(n, dtype=bool)
    rep = Report()

    rep.add(Check("B1", *_opt(_first(d != d.transpose(2, 1, 0)))))
    both = d & d.transpose(0, 2, 1)
    # closure: both orders present exactly when y == z
    rep.add(Check("B2", *_opt(_first(both != eye[None, :, :]))))
    v = pattern_violation(d.astype(np.uint8), ("oxy", "oyz"), ("oxz",), "oxyz")
    rep.add(Check("B3", v is None, None if v is None else v[0]))
    reflexive = check_basic(B, "Reflexive")
    rep.add(Check("B4", reflexive.passed, reflexive.witness))
    anti = check_basic(B, "Antisymmetric")
    rep.add(Check("B5", anti.passed, anti.witness))
    agree = rep["B2"].passed == (rep["B4"].passed and rep["B5"].passed)
    rep.add(Check("B2<=>B4&B5", agree,
                  detail="" if agree else "closure disagrees with reflexivity+antisymmetry"))
    return rep


def _opt(w):
    return (w is None, w)


def is_betweenness(B: TernaryRelation) -> bool:
    return check_betweenness(B).ok


@dataclass(frozen=True)
class PosetTable:
    leq: np.ndarray

    def __post_init__(self):
        leq = np.array(self.leq, dtype=bool)
        n = leq.shape[0]
        if leq.shape != (n, n):
            raise ValueError("order table must be square")
        if not leq.diagonal().all():
            raise ValueError("order is not reflexive")
        if np.any(leq & leq.T & ~np.eye(n, dtype=bool)):
            raise ValueError("order is not antisymmetric")
        if np.any((leq.astype(int) @ leq.astype(int) > 0) & ~leq):
            raise ValueError("order is not transitive")
        leq.setflags(write=False)
        object.__setattr__(self, "leq", leq)

    @classmethod
    def from_pairs(cls, n: int, pairs) -> "PosetTable":
        leq = np.eye(n, dtype=bool)
        for i, j in pairs:
            leq[i, j] = True
        return cls(leq)

    @classmethod
    def chain(cls, n: int) -> "PosetTable":
        return cls(np.triu(np.ones((n, n), dtype=bool)))

    @property
    def n(self) -> int:
        return self.leq.shape[0]


@dataclass(frozen=True)
class LatticeTable:
    join: np.ndarray
    meet: np.ndarray

    def __post_init__(self):
        j = np.array(self.join, dtype=np.int64)
        m = np.array(self.meet, dtype=np.int64)
        n = j.shape[0]
        if j.shape != (n, n) or m.shape != (n, n):
            raise ValueError("join and meet must be square tables of the same size")
        if not (np.array_equal(j, j.T) and np.array_equal(m, m.T)):
            raise ValueError("join/meet are not commutative")
        a = np.arange(n)
        A, B, C = np.ix_(a, a, a)
        for name, op in (("join", j), ("meet", m)):
            if not np.array_equal(op[op[A, B], C], op[A, op[B, C]]):
                raise ValueError(f"{name} is not associative")
        X, Y = np.ix_(a, a)
        if not (np.all(j[X, m[X, Y]] == X) and np.all(m[X, j[X, Y]] == X)):
            raise ValueError("absorption fails")
        j.setflags(write=False)
        m.setflags(write=False)
        object.__setattr__(self, "join", j)
        object.__setattr__(self, "meet", m)

    @property
    def n(self) -> int:
        return self.join.shape[0]


def order_betweenness(p: PosetTable) -> TernaryRelation:
    n = p.n
    leq = p.leq
    eye = np.eye(n, dtype=bool)
    x_eq_y = eye[:, :, None]
    y_eq_z = eye[None, :, :]
    up = leq[:, :, None] & leq[None, :, :]      # x <= y <= z
    down = leq.T[:, :, None] & leq.T[None, :, :]  # z <= y <= x
    return TernaryRelation(n, data=x_eq_y | y_eq_z | up | down)


def lattice_betweenness(l: LatticeTable) -> TernaryRelation:
    n = l.n
    j, m = l.join, l.meet
    a = np.arange(n)
    X, Y, Z = np.ix_(a, a, a)
    lower = j[m[X, Y], m[Y, Z]]
    upper = m[j[X, Y], j[Y, Z]]
    return TernaryRelation(n, data=(lower == Y) & (upper == Y))


def metric_betweenness_matrix(dist_matrix, form: str = "eq") -> TernaryRelation:
    """``{(x,y,z) : d(x,z) = d(x,y) + d(y,z)}`` (``form="ge"`` uses ``>=``)."""
    D = np.empty((len(dist_matrix),) * 2, dtype=object)
    for i, row in enumerate(dist_matrix):
        for j, v in enumerate(row):
            D[i, j] = v
    xz = D[:, None, :]
    path = D[:, :, None] + D[None, :, :]
    out = (xz == path) if form == "eq" else (xz >= path)
    return TernaryRelation(D.shape[0], data=np.asarray(out, dtype=bool))


def metric_betweenness(d, form: str = "eq") -> TernaryRelation:
    return metric_betweenness_matrix(d.dist, form)


def betweenness_at_level(nest, a) -> TernaryRelation:
    """Metric betweenness of the slice ``d_a`` of a nest."""
    return metric_betweenness_matrix(nest.slice(a))


def check_betweenness_nest(nest) -> Report:
    """Antitone inclusion and the union identity over all probe levels."""
    levels = nest.probe_levels()
    rels = [betweenness_at_level(nest, a) for a in levels]
    rep = Report()
    bad = next(((levels[k], levels[k + 1]) for k in range(len(levels) - 1)
                if not rels[k + 1] <= rels[k]), None)
    rep.add(Check("antitone", bad is None, bad,
                  "" if bad is None else "B at the higher level is not inside B at the lower"))
    bad = None
    for k, a in enumerate(levels):
        union = rels[k]
        for r in rels[k + 1:]:
            union = union | r
        if union != rels[k]:
            bad = (a,)
            break
    rep.add(Check("union", bad is None, bad))
    return rep
