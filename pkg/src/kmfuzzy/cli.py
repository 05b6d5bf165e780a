"""Command-line front end.

Exit codes: 0 when every reported check passes, 1 when some property fails,
2 for unreadable or ill-formed input.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction
from pathlib import Path
from typing import List, Optional

from . import formats, oracle
from .errors import KMError
from .fuzzy_betweenness import (FP, FT, FuzzyTernaryRelation, bd_from_nest,
                                bm_from_fuzzy_metric, check_equality, check_fp, check_ft,
                                check_fuzzy_axioms, max_discrepancy)
from .fuzzy_metric import FuzzyMetricSpace, structural_report, validate
from .grades import TNorm, format_rational, parse_rational
from .nest import (MetricNest, fuzzy_metric_from_nest, level_slice,
                   metric_problem, nest_from_fuzzy_metric, roundtrip_check, validate_nest)
from .relations import (FIVEPOINT, FOURPOINT, TernaryRelation, betweenness_at_level,
                        check_betweenness, check_betweenness_nest, check_fivepoint,
                        check_fourpoint, lattice_betweenness, metric_betweenness,
                        metric_betweenness_matrix, order_betweenness)
from .report import Check, Report, _jsonable

OK, FAILED, BAD_INPUT = 0, 1, 2

CRISP_PROPS = ["B1", "B2", "B3", "B4", "B5"] + list(FOURPOINT) + list(FIVEPOINT)
FUZZY_PROPS = ["FB", "SFB", "FBR"] + list(FP) + list(FT)
GROUPS = {"B": CRISP_PROPS[:5], "P": list(FOURPOINT), "T": list(FIVEPOINT),
          "FP": list(FP), "FT": list(FT)}


class InputError(Exception):
    pass


# --- output helpers ------------------------------------------------------------

def _emit(args, payload: dict, text: str):
    if args.format == "json":
        print(json.dumps(_jsonable(payload), indent=2))
    else:
        print(text)


def _report_out(args, rep: Report, header: str = "") -> int:
    payload = rep.to_dict()
    if header:
        payload["input"] = header
    text = (header + "\n" if header else "") + rep.text()
    _emit(args, payload, text)
    return OK if rep.ok else FAILED


def _level(args) -> Fraction:
    a = parse_rational(args.level)
    if not 0 < a < 1:
        raise InputError("--level must lie strictly between 0 and 1")
    return a


def _load(args):
    if not args.input:
        raise InputError("--input is required")
    path = Path(args.input)
    if not path.exists():
        raise InputError(f"no such file: {path}")
    return formats.load_raw(path)


def _construct(kind, obj, args):
    x = formats.from_json(obj, kind)
    if isinstance(x, FuzzyMetricSpace) and args.tnorm:
        x = x.with_tnorm(TNorm.parse(args.tnorm))
    return x


# --- validate --------------------------------------------------------------------

def cmd_validate(args) -> int:
    kind, obj = _load(args)
    if kind == "space":
        points, entries, tn = formats.space_entries_from_json(obj)
        structural = structural_report(points, entries)
        if not structural.ok:
            return _report_out(args, structural, "space")
        space = FuzzyMetricSpace(points, entries, TNorm.parse(args.tnorm) if args.tnorm else tn)
        rep = validate(space)
        return _report_out(args, rep, f"space ({space.n} points, t-norm {space.tnorm.value})")
    if kind == "metric":
        pts = [str(p) for p in obj["points"]]
        rows = [[parse_rational(v) for v in row] for row in obj["dist"]]
        prob = metric_problem(rows, pts)
        rep = Report()
        for name in ("zero", "symmetry", "positivity", "triangle"):
            failed = prob is not None and prob[0] == name
            rep.add(Check(name, not failed, prob[1] if failed else None,
                          prob[2] if failed else ""))
        return _report_out(args, rep, "metric")
    x = _construct(kind, obj, args)
    if kind == "nest":
        rep = validate_nest(x)
        return _report_out(args, rep, f"nest ({x.n} points, {len(x.slice_levels())} distinct slices)")
    if kind == "relation":
        return _report_out(args, check_betweenness(x), "relation (betweenness axioms)")
    if kind == "fuzzy":
        kind_t = TNorm.parse(args.tnorm or "min")
        return _report_out(args, check_fuzzy_axioms(x, "FBR", kind_t), "fuzzy relation (FBR axioms)")
    if kind == "poset":
        return _report_out(args, check_betweenness(order_betweenness(x)), "order betweenness")
    if kind == "lattice":
        return _report_out(args, check_betweenness(lattice_betweenness(x)), "lattice betweenness")
    raise InputError(f"cannot validate a {kind} file")


# --- convert ---------------------------------------------------------------------

def _roundtrip_batch(args) -> int:
    count = args.count
    failures = []
    t0 = time.perf_counter()
    for k in range(count):
        seed = args.seed + k
        n = 2 + seed % 5
        space = oracle.gen_random_step_space(n, 1 + seed % 8, seed)
        nest = oracle.gen_random_nest(n, seed % 8, seed)
        for obj in (space, nest):
            same, diff = roundtrip_check(obj)
            if not same:
                failures.append((seed, type(obj).__name__, diff))
    elapsed = time.perf_counter() - t0
    payload = {"count": count, "seed": args.seed, "failures": failures, "seconds": elapsed}
    text = f"round-trip on {count} spaces and {count} nests: {len(failures)} differences ({elapsed:.2f}s)"
    for f in failures[:5]:
        text += f"\n  seed {f[0]} {f[1]}: {f[2]}"
    _emit(args, payload, text)
    return OK if not failures else FAILED


def cmd_convert(args) -> int:
    if not args.input:
        if args.roundtrip:
            return _roundtrip_batch(args)
        raise InputError("--input is required")
    kind, obj = _load(args)
    x = _construct(kind, obj, args)
    if isinstance(x, FuzzyMetricSpace):
        out = nest_from_fuzzy_metric(x)
    elif isinstance(x, MetricNest):
        out = fuzzy_metric_from_nest(x)
    else:
        raise InputError(f"convert takes a space or a nest, not a {kind} file")
    text = formats.dumps(out)
    if args.output:
        Path(args.output).write_text(text + "\n")
    elif not args.roundtrip:
        print(text)
    if args.roundtrip:
        same, diff = roundtrip_check(x)
        msg = "round-trip exact" if same else f"round-trip differs: {diff}"
        _emit(args, {"roundtrip": same, "diff": diff}, msg)
        return OK if same else FAILED
    return OK


# --- betweenness ---------------------------------------------------------------------

def _fuzzy_text(B: FuzzyTernaryRelation, points) -> str:
    lines = [f"B({points[x]},{points[y]},{points[z]}) = {format_rational(v)}"
             for (x, y, z), v in B.nonzero()]
    return "\n".join(lines) if lines else "(all grades are 0)"


def _method(x, method: str) -> FuzzyTernaryRelation:
    if method == "implication":
        if isinstance(x, MetricNest):
            x = fuzzy_metric_from_nest(x)
        return bm_from_fuzzy_metric(x)
    if isinstance(x, FuzzyMetricSpace):
        x = nest_from_fuzzy_metric(x)
    return bd_from_nest(x)


def cmd_betweenness(args) -> int:
    kind, obj = _load(args)
    x = _construct(kind, obj, args)
    if kind == "metric":
        T = metric_betweenness(x)
        return _crisp_out(args, T, x.points, "metric betweenness")
    if kind not in ("space", "nest"):
        raise InputError("betweenness takes a space, nest or metric file")
    points = x.points
    if args.level is not None:
        a = _level(args)
        T = betweenness_at_level(x, a) if isinstance(x, MetricNest) else \
            metric_betweenness_matrix(level_slice(x, a))
        return _crisp_out(args, T, points, f"betweenness of the slice at level {a}")
    if args.compare:
        bm = _method(x, "implication")
        bd = _method(x, "nest")
        gap = max_discrepancy(bm, bd)
        _emit(args, {"max_discrepancy": format_rational(gap)},
              f"max discrepancy between the two methods: {format_rational(gap)}")
        return OK if gap == 0 else FAILED
    if not args.method:
        raise InputError("betweenness needs --level, --method or --compare")
    B = _method(x, args.method)
    payload = formats.fuzzy_to_json(B, sparse=args.sparse)
    payload["points"] = list(points)
    _emit(args, payload, _fuzzy_text(B, points))
    return OK


def _crisp_out(args, T: TernaryRelation, points, title) -> int:
    named = [[points[v] for v in t] for t in T.triples()]
    text = title + "\n" + "\n".join("(" + ",".join(t) + ")" for t in named)
    _emit(args, {"n": T.n, "points": list(points), "triples": T.triples()}, text)
    return OK


# --- check ---------------------------------------------------------------------------

def _expand(props: Optional[str], fuzzy: bool) -> List[str]:
    if not props or props == "all":
        return list(FUZZY_PROPS if fuzzy else CRISP_PROPS)
    out = []
    for p in props.split(","):
        p = p.strip()
        if p in GROUPS:
            out.extend(GROUPS[p])
        elif p in CRISP_PROPS or p in FUZZY_PROPS:
            out.append(p)
        else:
            raise InputError(f"unknown property {p!r}")
    return out


def cmd_check(args) -> int:
    kind, obj = _load(args)
    x = _construct(kind, obj, args)
    tn = TNorm.parse(args.tnorm or "min")
    crisp: Optional[TernaryRelation] = None
    fuzzy: Optional[FuzzyTernaryRelation] = None
    if kind == "relation":
        crisp = x
    elif kind == "fuzzy":
        fuzzy = x
    elif kind == "metric":
        crisp = metric_betweenness(x)
    elif kind == "poset":
        crisp = order_betweenness(x)
    elif kind == "lattice":
        crisp = lattice_betweenness(x)
    elif kind in ("space", "nest"):
        if args.level is not None:
            a = _level(args)
            crisp = betweenness_at_level(x, a) if kind == "nest" else \
                metric_betweenness_matrix(level_slice(x, a))
        else:
            fuzzy = _method(x, args.method or "implication")
            if isinstance(x, FuzzyMetricSpace):
                tn = TNorm.parse(args.tnorm) if args.tnorm else x.tnorm
    props = _expand(args.properties, fuzzy is not None)
    rep = Report()
    if crisp is not None:
        basic = check_betweenness(crisp)
        for p in props:
            if p in basic:
                rep.add(basic[p])
            elif p in FOURPOINT:
                rep.add(check_fourpoint(crisp, p, args.distinct))
            elif p in FIVEPOINT:
                rep.add(check_fivepoint(crisp, p, args.distinct))
            else:
                raise InputError(f"{p} applies to fuzzy relations only")
    else:
        systems = {"FB": "Star", "SFB": "StrongStar", "FBR": "FBR"}
        for p in props:
            if p in systems:
                for c in check_fuzzy_axioms(fuzzy, systems[p], tn):
                    rep.add(c)
            elif p in FP:
                rep.add(check_fp(fuzzy, p, tn, args.distinct))
            elif p in FT:
                rep.add(check_ft(fuzzy, p, tn, args.distinct))
            else:
                raise InputError(f"{p} applies to crisp relations only")
    return _report_out(args, rep)


# --- generate and harness ----------------------------------------------------------

def cmd_generate(args) -> int:
    if args.what == "space":
        x = oracle.gen_random_step_space(args.n, args.k, args.seed)
    elif args.what == "nest":
        x = oracle.gen_random_nest(args.n, args.k, args.seed)
    else:
        x = oracle.gen_random_metric(args.n, args.seed)
    text = formats.dumps(x)
    if args.output:
        Path(args.output).write_text(text + "\n")
    else:
        print(text)
    return OK


def cmd_harness(args) -> int:
    """Seeded sweep: generator validity, round-trip, equality and axiom suites."""
    rep = Report()
    t0 = time.perf_counter()
    first = {}
    for k in range(args.count):
        seed = args.seed + k
        n = 2 + seed % (args.n - 1)
        space = oracle.gen_random_step_space(n, 1 + seed % 8, seed)
        nest = nest_from_fuzzy_metric(space)
        results = {
            "valid": validate(space).ok and validate_nest(nest).ok,
            "roundtrip": roundtrip_check(space)[0] and roundtrip_check(nest)[0],
            "equality": check_equality(space)[0],
            "B-axioms": all(check_betweenness(betweenness_at_level(nest, a)).ok
                            for a in nest.slice_levels()),
            "FBR": check_fuzzy_axioms(bm_from_fuzzy_metric(space)).ok,
            "nest-structure": check_betweenness_nest(nest).ok,
        }
        for name, ok in results.items():
            if not ok and name not in first:
                first[name] = seed
    for name in ("valid", "roundtrip", "equality", "B-axioms", "FBR", "nest-structure"):
        rep.add(Check(name, name not in first, (first[name],) if name in first else None,
                      "" if name not in first else "first failing seed"))
    elapsed = time.perf_counter() - t0
    return _report_out(args, rep, f"harness: {args.count} seeds from {args.seed} ({elapsed:.1f}s)")


# --- entry point ---------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="kmfuzzy", description=__doc__.splitlines()[0])
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", help="JSON input file (kind detected from its keys)")
    common.add_argument("--tnorm", choices=["min", "prod", "luk"])
    common.add_argument("--format", choices=["text", "json"], default="text")
    common.add_argument("--seed", type=int, default=0)
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("validate", parents=[common], help="check the axioms of an input file")

    p = sub.add_parser("convert", parents=[common], help="space <-> nest")
    p.add_argument("--output")
    p.add_argument("--roundtrip", action="store_true",
                   help="convert back and demand exact equality; without --input, run a seeded batch")
    p.add_argument("--count", type=int, default=500)

    p = sub.add_parser("betweenness", parents=[common], help="crisp or fuzzy betweenness")
    p.add_argument("--level")
    p.add_argument("--method", choices=["implication", "nest"])
    p.add_argument("--compare", action="store_true")
    p.add_argument("--sparse", action="store_true", help="JSON output lists only grades > 0")

    p = sub.add_parser("check", parents=[common], help="betweenness axioms and transitivities")
    p.add_argument("--properties", help="comma list, e.g. B,P1,T,FBR,FP,FT (default: all)")
    p.add_argument("--level")
    p.add_argument("--method", choices=["implication", "nest"])
    p.add_argument("--distinct", action="store_true",
                   help="quantify P/T/FP/FT over pairwise distinct points only")

    p = sub.add_parser("generate", parents=[common], help="seeded random instance")
    p.add_argument("what", choices=["space", "nest", "metric"])
    p.add_argument("--n", type=int, default=4)
    p.add_argument("--k", type=int, default=3, help="breakpoints per entry or nest levels")
    p.add_argument("--output")

    p = sub.add_parser("harness", parents=[common], help="seeded randomized sweep")
    p.add_argument("--count", type=int, default=100)
    p.add_argument("--n", type=int, default=6, help="largest number of points")
    return parser


COMMANDS = {"validate": cmd_validate, "convert": cmd_convert, "betweenness": cmd_betweenness,
            "check": cmd_check, "generate": cmd_generate, "harness": cmd_harness}


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except (InputError, KMError, ValueError, KeyError) as e:
        print(f"error: {type(e).__name__}: {e}", file=sys.stderr)
        return BAD_INPUT


if __name__ == "__main__":
    sys.exit(main())
