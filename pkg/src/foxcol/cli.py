"""``foxcol`` command line.

Exit status is 0 on success, 1 on a domain error (a question the library
declines to answer) and 2 on a usage error.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
import time

from . import acceptance
from .analysis import classify_triple, harary_check, mincol_bounds, min_colors_of_diagram, \
    three_color_feasible
from .coloring import (ColoredDiagram, braid_coloring, color_spectrum, count_colorings,
                       determinant, enumerate_colorings, palette_of)
from .diagram import Diagram, ParseError, braid_closure, braid_word_parse, rational_diagram, \
    torus_diagram
from .modular import DEFAULT_CAP, BudgetExceeded, DomainError
from .moves import teneva_reduce, teneva_search, teneva_transform

VERBS = ("count", "spectrum", "mincol", "teneva", "classify", "det", "harary", "verify")
NEEDS_SOURCE = {"count", "spectrum", "mincol", "teneva", "det", "harary"}
NEEDS_R = {"count", "mincol", "teneva", "harary"}


class UsageError(Exception):
    pass


def _cap() -> int:
    raw = os.environ.get("FOXCOL_CAP")
    if raw is None:
        return DEFAULT_CAP
    try:
        cap = int(raw)
    except ValueError:
        raise UsageError(f"FOXCOL_CAP must be an integer, got {raw!r}") from None
    if cap < 1:
        raise UsageError(f"FOXCOL_CAP must be positive, got {cap}")
    return cap


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="foxcol", description="Fox colorings of knot diagrams.")
    p.add_argument("verb", choices=VERBS)
    p.add_argument("values", nargs="*", type=int, help="three colors for classify")
    src = p.add_mutually_exclusive_group()
    src.add_argument("--torus", type=int, metavar="N", help="closure of s1^N")
    src.add_argument("--braid", metavar="WORD", help='braid word such as "B2: s1^5"')
    src.add_argument("--rational", metavar="A,B,...", help="twist vector, e.g. 8,-9")
    src.add_argument("--file", metavar="PATH", help="diagram JSON file")
    p.add_argument("-r", type=int, help="modulus (the prime for harary)")
    p.add_argument("--r-max", type=int, default=None, help="largest modulus for spectrum")
    p.add_argument("-a", type=int, help="top-left color")
    p.add_argument("-b", type=int, help="top-right color")
    p.add_argument("--steps", type=int, help="R3 moves in the transformation")
    p.add_argument("--rounds", type=int, default=2, help="search rounds (non-torus teneva)")
    p.add_argument("--beam", type=int, default=10, help="search beam width")
    p.add_argument("--format", choices=("table", "json"), default="table")
    p.add_argument("--no-timing", action="store_true", help="omit the timing field")
    return p


def _source(args) -> Diagram:
    if args.torus is not None:
        return torus_diagram(args.torus)
    if args.braid is not None:
        return braid_closure(braid_word_parse(args.braid))
    if args.rational is not None:
        try:
            tv = [int(x) for x in args.rational.split(",")]
        except ValueError:
            raise UsageError(f"--rational expects integers separated by commas, "
                             f"got {args.rational!r}") from None
        return rational_diagram(tv)
    with open(args.file, encoding="utf-8") as fh:
        return Diagram.from_json(fh.read())


def _source_echo(args) -> dict:
    for key in ("torus", "braid", "rational", "file"):
        if getattr(args, key) is not None:
            return {key: getattr(args, key)}
    return {}


def _check_usage(args):
    has_source = any(getattr(args, k) is not None for k in ("torus", "braid", "rational", "file"))
    if args.verb in NEEDS_SOURCE and not has_source:
        raise UsageError(f"{args.verb} needs one of --torus, --braid, --rational, --file")
    if args.verb in NEEDS_R and args.r is None:
        raise UsageError(f"{args.verb} needs -r")
    if args.verb == "spectrum" and args.r_max is None and args.r is None:
        raise UsageError("spectrum needs --r-max")
    if args.verb == "classify":
        if len(args.values) != 3 or args.r is None:
            raise UsageError("classify needs three colors and -r, e.g. classify 0 1 2 -r 5")
    elif args.values:
        raise UsageError(f"unexpected positional values {args.values}")
    if args.steps is not None and args.verb != "teneva":
        raise UsageError("--steps only applies to teneva")


def _tag(value, provenance):
    return {"value": value, "provenance": provenance}


# ---------------------------------------------------------------------------
# verbs; each returns (inputs, results) with tagged results

def _count(args):
    d = _source(args)
    return {"r": args.r}, {"count": _tag(count_colorings(d, args.r), "formula")}


def _spectrum(args):
    d = _source(args)
    r_max = args.r_max if args.r_max is not None else args.r
    spec = [[r, c] for r, c in color_spectrum(d, r_max)]
    return {"r_max": r_max}, {"spectrum": _tag(spec, "formula")}


def _mincol(args):
    d = _source(args)
    res = {"diagram_minimum": _tag(min_colors_of_diagram(d, args.r, _cap()), "enumeration")}
    if args.torus is not None:
        rep = mincol_bounds(args.torus, args.r)
        res["branch"] = _tag(rep.branch, "theorem")
        res["lower"] = _tag(rep.lower, rep.provenance["lower"])
        res["upper"] = _tag(rep.upper, rep.provenance["upper"])
        res["witnesses"] = _tag([w.to_dict() for w in rep.witnesses], "witness")
    return {"r": args.r}, res


def _teneva(args):
    d = _source(args)
    r = args.r
    if args.torus is not None:
        n = args.torus
        a = 0 if args.a is None else args.a
        b = args.b if args.b is not None else (a + r // math.gcd(n, r)) % r
        inputs = {"r": r, "a": a, "b": b, "steps": args.steps}
        if args.steps is not None:
            out, trace = teneva_transform(braid_coloring(n, r, a, b), args.steps)
        else:
            out, trace = teneva_reduce(n, r, a, b)
        provenance = "enumeration"
    else:
        col = next((c for c in enumerate_colorings(d, r, _cap()) if not c.is_trivial), None)
        if col is None:
            raise DomainError(f"the diagram has no nontrivial {r}-coloring")
        res = teneva_search(ColoredDiagram(d, col), rounds=args.rounds, beam=args.beam)
        out, trace = res.diagram, res.trace
        inputs = {"r": r, "rounds": args.rounds, "beam": args.beam}
        provenance = "search"
    return inputs, {
        "initial_palette_size": _tag(len(trace.initial_palette), "enumeration"),
        "palette_size": _tag(palette_of(out).size, provenance),
        "palette_sizes": _tag(trace.palette_sizes(), provenance),
        "trace": _tag(trace.to_dict(), provenance),
    }


def _classify(args):
    a, b, c = args.values
    tc = classify_triple(a, b, c, args.r)
    return {"colors": [a, b, c], "r": args.r}, {
        "class": _tag(tc.to_dict(), "enumeration"),
        "three_colors_possible": _tag(three_color_feasible(args.r), "theorem"),
    }


def _det(args):
    return {}, {"determinant": _tag(determinant(_source(args)), "formula")}


def _harary(args):
    d = _source(args)
    return {"p": args.r}, {"injective": _tag(harary_check(d, args.r, _cap()), "enumeration")}


def _verify(args):
    results = acceptance.run_all()
    payload = {f"criterion_{c.number}": _tag({"title": c.title, "passed": c.passed,
                                             "detail": c.detail}, "theorem")
               for c in results}
    payload["all_passed"] = _tag(all(c.passed for c in results), "theorem")
    return {}, payload


DISPATCH = {"count": _count, "spectrum": _spectrum, "mincol": _mincol, "teneva": _teneva,
            "classify": _classify, "det": _det, "harary": _harary, "verify": _verify}


def _table(report: dict) -> str:
    lines = [f"{report['verb']}  {json.dumps(report['inputs'], sort_keys=True)}"]
    for key, item in report["results"].items():
        value = item["value"]
        if isinstance(value, (dict, list)):
            value = json.dumps(value, sort_keys=True)
        lines.append(f"  {key}: {value}  [{item['provenance']}]")
    if "timing" in report:
        lines.append(f"  ({report['timing']['seconds']:.3f} s)")
    return "\n".join(lines)


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:          # argparse already printed the message
        return int(exc.code or 0)
    t0 = time.perf_counter()
    try:
        _check_usage(args)
        inputs, results = DISPATCH[args.verb](args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"foxcol: error: {exc}", file=sys.stderr)
        return 2
    except (DomainError, ParseError, BudgetExceeded, OSError, ValueError) as exc:
        print(f"foxcol: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    report = {"verb": args.verb, "inputs": {**_source_echo(args), **inputs},
              "results": results}
    if not args.no_timing:
        report["timing"] = {"seconds": round(time.perf_counter() - t0, 6)}
    if args.format == "json":
        print(json.dumps(report, sort_keys=True))
    elif args.verb == "verify":
        for key, item in results.items():
            if key.startswith("criterion_"):
                c = item["value"]
                status = "PASS" if c["passed"] else "FAIL"
                print(f"[{status}] {key[10:]:>2}. {c['title']}: {c['detail']}")
    else:
        print(_table(report))
    if args.verb == "verify":
        return 0 if results["all_passed"]["value"] else 1
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
