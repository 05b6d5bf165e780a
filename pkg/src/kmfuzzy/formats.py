"""JSON interchange with fractions carried as strings.

Each file kind is recognized by its keys:

* space: ``points``, ``entries`` (and optionally ``tnorm``)
* nest: ``points``, ``pairs``
* metric: ``points``, ``dist``
* relation: ``n``, ``triples``
* fuzzy relation: ``n``, ``grades``
* poset: ``n``, ``pairs``
* lattice: ``n``, ``join``, ``meet``
"""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path
from typing import Any, Tuple, Union

import numpy as np

from . import distributions as dist
from .distributions import POINT_ONE, Distribution, Scaled, Step
from .errors import ParseError, SchemaError
from .fuzzy_betweenness import FuzzyTernaryRelation
from .fuzzy_metric import FuzzyMetricSpace
from .grades import TNorm, format_rational, parse_rational
from .nest import FiniteMetric, MetricNest, PairLevels
from .relations import LatticeTable, PosetTable, TernaryRelation

KINDS = ("space", "nest", "metric", "relation", "fuzzy", "poset", "lattice")


def _q(x) -> Fraction:
    # JSON numbers arrive as int or float; floats are refused by parse_rational
    return parse_rational(x)


# --- distributions ------------------------------------------------------------

def dist_to_json(F: Distribution) -> dict:
    if F is POINT_ONE:
        return {"one": True}
    if isinstance(F, Step):
        return {"t": [format_rational(t) for t in F.breakpoints],
                "v": [format_rational(v) for v in F.values]}
    return {"gen": F.generator.value, "d": format_rational(F.scale)}


def dist_from_json(obj) -> Distribution:
    if not isinstance(obj, dict):
        raise SchemaError(f"distribution must be an object, got {obj!r}")
    if obj.get("one") is True:
        return POINT_ONE
    if "t" in obj and "v" in obj:
        try:
            return dist.step([_q(t) for t in obj["t"]], [_q(v) for v in obj["v"]])
        except ValueError as e:
            raise SchemaError(str(e)) from None
    if "gen" in obj and "d" in obj:
        try:
            return Scaled(dist.Generator(obj["gen"]), _q(obj["d"]))
        except ValueError as e:
            raise SchemaError(str(e)) from None
    raise SchemaError(f"unrecognized distribution {obj!r}")


# --- spaces and nests -----------------------------------------------------------

def space_entries_from_json(obj) -> Tuple[Tuple[str, ...], list, TNorm]:
    """Raw ``(points, entries, tnorm)`` without structural validation."""
    points = tuple(str(p) for p in obj["points"])
    n = len(points)
    kind = TNorm.parse(obj.get("tnorm", "min"))
    rows = obj["entries"]
    if not isinstance(rows, list) or len(rows) != n:
        raise SchemaError(f"entries must be a list of {n} rows")
    out = []
    for i, row in enumerate(rows):
        if not isinstance(row, list):
            raise SchemaError(f"row {i} is not a list")
        if len(row) == n - 1:
            row = row[:i] + [None] + row[i:]
        if len(row) != n:
            raise SchemaError(f"row {i} has {len(row)} entries, expected {n} or {n - 1}")
        out.append([POINT_ONE if (j == i and F is None) else dist_from_json(F)
                    for j, F in enumerate(row)])
    return points, out, kind


def space_from_json(obj) -> FuzzyMetricSpace:
    points, entries, kind = space_entries_from_json(obj)
    return FuzzyMetricSpace(points, entries, kind)


def space_to_json(space: FuzzyMetricSpace) -> dict:
    return {"points": list(space.points), "tnorm": space.tnorm.value,
            "entries": [[dist_to_json(F) for F in row] for row in space.entries]}


def nest_from_json(obj) -> MetricNest:
    points = tuple(str(p) for p in obj["points"])
    index = {p: k for k, p in enumerate(points)}
    pairs = {}
    for key, val in obj["pairs"].items():
        parts = key.split("|")
        if len(parts) != 2 or any(p not in index for p in parts):
            raise SchemaError(f"pair key {key!r} must be 'x|y' with known points")
        try:
            pairs[(index[parts[0]], index[parts[1]])] = PairLevels(
                [_q(a) for a in val.get("a", [])], [_q(w) for w in val["w"]])
        except ValueError as e:
            raise SchemaError(f"pair {key}: {e}") from None
    return MetricNest(points, pairs)


def nest_to_json(nest: MetricNest) -> dict:
    pts = nest.points
    return {"points": list(pts),
            "pairs": {f"{pts[i]}|{pts[j]}": {"a": [format_rational(a) for a in p.a],
                                             "w": [format_rational(w) for w in p.w]}
                      for (i, j), p in sorted(nest.pairs.items())}}


def metric_from_json(obj) -> FiniteMetric:
    try:
        return FiniteMetric(tuple(str(p) for p in obj["points"]),
                            [[_q(v) for v in row] for row in obj["dist"]])
    except ValueError as e:
        raise SchemaError(str(e)) from None


def metric_to_json(d: FiniteMetric) -> dict:
    return {"points": list(d.points),
            "dist": [[format_rational(v) for v in row] for row in d.dist]}


# --- relations ----------------------------------------------------------------------

def relation_from_json(obj) -> TernaryRelation:
    try:
        return TernaryRelation(int(obj["n"]), [tuple(int(v) for v in t) for t in obj["triples"]])
    except (IndexError, ValueError, TypeError) as e:
        raise SchemaError(str(e)) from None


def relation_to_json(T: TernaryRelation) -> dict:
    return {"n": T.n, "triples": [list(t) for t in T.triples()]}


def fuzzy_from_json(obj) -> FuzzyTernaryRelation:
    n = int(obj["n"])
    g = obj["grades"]
    if isinstance(g, dict):
        # sparse form: {"x,y,z": grade}
        arr = np.full((n, n, n), Fraction(0), dtype=object)
        for key, v in g.items():
            arr[tuple(int(c) for c in key.split(","))] = _q(v)
        g = arr
    try:
        B = FuzzyTernaryRelation(g)
    except (ValueError, IndexError, TypeError) as e:
        raise SchemaError(str(e)) from None
    if B.n != n:
        raise SchemaError(f"grades tensor has size {B.n}, header says {n}")
    return B


def fuzzy_to_json(B: FuzzyTernaryRelation, sparse: bool = False) -> dict:
    if sparse:
        return {"n": B.n, "grades": {",".join(map(str, idx)): format_rational(v)
                                     for idx, v in B.nonzero()}}
    return {"n": B.n, "grades": [[[format_rational(B.grades[x, y, z]) for z in range(B.n)]
                                  for y in range(B.n)] for x in range(B.n)]}


def poset_from_json(obj) -> PosetTable:
    try:
        return PosetTable.from_pairs(int(obj["n"]), [tuple(p) for p in obj["pairs"]])
    except (ValueError, IndexError) as e:
        raise SchemaError(str(e)) from None


def poset_to_json(p: PosetTable) -> dict:
    pairs = [[int(i), int(j)] for i, j in np.argwhere(p.leq) if i != j]
    return {"n": p.n, "pairs": pairs}


def lattice_from_json(obj) -> LatticeTable:
    try:
        L = LatticeTable(obj["join"], obj["meet"])
    except ValueError as e:
        raise SchemaError(str(e)) from None
    if L.n != int(obj["n"]):
        raise SchemaError("lattice tables do not match n")
    return L


def lattice_to_json(L: LatticeTable) -> dict:
    return {"n": L.n, "join": L.join.tolist(), "meet": L.meet.tolist()}


# --- dispatch -------------------------------------------------------------------------

def detect(obj: Any) -> str:
    if not isinstance(obj, dict):
        raise SchemaError("top level must be a JSON object")
    keys = set(obj)
    if {"points", "entries"} <= keys:
        return "space"
    if {"points", "pairs"} <= keys:
        return "nest"
    if {"points", "dist"} <= keys:
        return "metric"
    if {"n", "triples"} <= keys:
        return "relation"
    if {"n", "grades"} <= keys:
        return "fuzzy"
    if {"join", "meet"} <= keys:
        return "lattice"
    if {"n", "pairs"} <= keys:
        return "poset"
    raise SchemaError(f"cannot tell what kind of file has keys {sorted(keys)}")


_READERS = {"space": space_from_json, "nest": nest_from_json, "metric": metric_from_json,
            "relation": relation_from_json, "fuzzy": fuzzy_from_json,
            "poset": poset_from_json, "lattice": lattice_from_json}


def from_json(obj, kind: str = None):
    kind = kind or detect(obj)
    try:
        return _READERS[kind](obj)
    except KeyError as e:
        raise SchemaError(f"{kind} file is missing key {e}") from None
    except (TypeError, AttributeError) as e:
        raise SchemaError(f"malformed {kind} file: {e}") from None


def to_json(obj) -> dict:
    if isinstance(obj, FuzzyMetricSpace):
        return space_to_json(obj)
    if isinstance(obj, MetricNest):
        return nest_to_json(obj)
    if isinstance(obj, FiniteMetric):
        return metric_to_json(obj)
    if isinstance(obj, TernaryRelation):
        return relation_to_json(obj)
    if isinstance(obj, FuzzyTernaryRelation):
        return fuzzy_to_json(obj)
    if isinstance(obj, PosetTable):
        return poset_to_json(obj)
    if isinstance(obj, LatticeTable):
        return lattice_to_json(obj)
    raise TypeError(f"no JSON form for {type(obj).__name__}")


def loads(text: str):
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"invalid JSON: {e}") from None
    return from_json(obj)


def dumps(obj, indent: int = 2) -> str:
    return json.dumps(to_json(obj), indent=indent)


def load(path: Union[str, Path]):
    return loads(Path(path).read_text())


def load_raw(path: Union[str, Path]) -> Tuple[str, dict]:
    """The parsed JSON object with its detected kind, nothing constructed yet."""
    try:
        obj = json.loads(Path(path).read_text())
    except json.JSONDecodeError as e:
        raise ParseError(f"invalid JSON: {e}") from None
    return detect(obj), obj


def dump(obj, path: Union[str, Path]):
    Path(path).write_text(dumps(obj) + "\n")
