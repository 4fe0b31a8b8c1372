"""Command line front end: every subcommand prints one JSON document.

Exit codes: 0 on success, 1 on a domain error (reported as
``{"error": <type>, "detail": <message>}``), 2 on a usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction
from pathlib import Path
from typing import Any, Sequence

from .ehrhart import h_star, polar_dual_points
from .errors import SympolyError
from .facets import enumerate_facets, face_lattice, incidence
from .families import (Complete, Cycle, EdgeJoinOddCycles, OuterplanarBipartite, Tree, Wheel,
                       invariants)
from .flows import Multigraph, dual_points_via_mobius, nowhere_zero_flows
from .genfun import BadWordSet, gj_cyclic, gj_linear
from .graph import Graph, load_graph, parse_graph_text
from .kr import kr_generators, section_vertices, verify_section_equality
from .verify import run_suite
from .volume import triangulation, triangulation_to_json

_SAFE_INT = 2 ** 53


def to_jsonable(x: Any) -> Any:
    """Lossless JSON: big ints and non-integral fractions become strings."""
    if isinstance(x, bool) or x is None or isinstance(x, str):
        return x
    if isinstance(x, int):
        return x if abs(x) < _SAFE_INT else str(x)
    if isinstance(x, Fraction):
        return to_jsonable(x.numerator) if x.denominator == 1 else str(x)
    if isinstance(x, float):
        return x
    if isinstance(x, dict):
        return {str(k): to_jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [to_jsonable(v) for v in x]
    if hasattr(x, "to_json"):
        return to_jsonable(x.to_json())
    raise TypeError(f"cannot serialize {type(x).__name__}")


def _int_list(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma separated integers, got {text!r}") from None


def _word_list(text: str) -> list[str]:
    return [w for w in text.split(",") if w]


# -- subcommand handlers ----------------------------------------------------

def cmd_facets(a) -> dict:
    g = load_graph(a.graph)
    facets = enumerate_facets(g)
    out: dict[str, Any] = {"count": len(facets)}
    if not a.count_only:
        out["facets"] = facets
    if a.fvector:
        out["fvector"] = face_lattice(incidence(g, facets))[0]
    return out


def cmd_volume(a) -> dict:
    g = load_graph(a.graph)
    tri = triangulation(g, a.workers)
    out: dict[str, Any] = {"volume": sum(t.volume for t in tri), "facets": len(tri)}
    if a.triangulation:
        Path(a.triangulation).write_text(json.dumps(triangulation_to_json(g, tri)))
        out["triangulation"] = str(a.triangulation)
    return out


def cmd_hstar(a) -> dict:
    return h_star(load_graph(a.graph)).to_json()


def cmd_dualpoints(a) -> dict:
    return {"count": polar_dual_points(load_graph(a.graph))}


def cmd_dualpoints_mobius(a) -> dict:
    return {"count": dual_points_via_mobius(load_graph(a.graph))}


def cmd_flows(a) -> dict:
    n, edges = parse_graph_text(Path(a.graph).read_text())
    g = Multigraph.from_edges(edges, n)
    return {"k": a.k, "count": nowhere_zero_flows(g, a.k)}


def cmd_gj(a) -> dict:
    alphabet = a.symbols
    if alphabet is not None and len(alphabet) != a.alphabet:
        raise argparse.ArgumentTypeError("--symbols must have exactly --alphabet characters")
    b = BadWordSet.from_strings(a.bad, a.alphabet, alphabet)
    if a.cyclic:
        res = gj_cyclic(b)
        gf = res.genfun
        extra = {"corrections": [c.to_json() for c in res.corrections]}
    else:
        gf = gj_linear(b)
        extra = {}
    return {"genfun": gf.to_json(), "text": str(gf), "series": gf.series(a.orders), **extra}


def cmd_family(a) -> dict:
    spec = {
        "cycle": lambda: Cycle(a.k),
        "tree": lambda: Tree(a.n),
        "complete": lambda: Complete(a.n),
        "wheel": lambda: Wheel(a.n),
        "join-odd": lambda: EdgeJoinOddCycles(a.i, a.j),
        "outerplanar": lambda: OuterplanarBipartite(tuple(a.a), a.s, a.t),
    }[a.family]()
    return invariants(spec)


def cmd_kr(a) -> dict:
    g = load_graph(a.graph)
    out: dict[str, Any] = {"generators": kr_generators(g, a.subset),
                           "section_vertices": section_vertices(g, a.subset)}
    if a.verify:
        out["equal"] = verify_section_equality(g, a.subset)
    return out


def cmd_verify(a) -> dict:
    results = run_suite(a.criteria)
    return {"suite": a.suite, "passed": all(r.passed for r in results),
            "criteria": [r.to_json() for r in results]}


# -- parser -------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="sympoly", description="Symmetric edge polytope toolkit.")
    p.add_argument("--pretty", action="store_true", help="human readable output")
    p.add_argument("--report", action="store_true",
                   help="wrap the result with command, inputs and timing")
    sub = p.add_subparsers(dest="command", required=True)

    def graph_cmd(name: str, handler, help_text: str) -> argparse.ArgumentParser:
        sp = sub.add_parser(name, help=help_text)
        sp.add_argument("graph", help="graph JSON or edge-list file")
        sp.set_defaults(handler=handler)
        return sp

    sp = graph_cmd("facets", cmd_facets, "facet labelings")
    sp.add_argument("--count-only", action="store_true")
    sp.add_argument("--fvector", action="store_true")

    sp = graph_cmd("volume", cmd_volume, "normalized volume via the facet triangulation")
    sp.add_argument("--triangulation", metavar="OUT", help="write the triangulation JSON here")
    sp.add_argument("--workers", type=int, default=None)

    graph_cmd("hstar", cmd_hstar, "Ehrhart polynomial, h* and gamma")
    graph_cmd("dualpoints", cmd_dualpoints, "lattice points of the polar dual")
    graph_cmd("dualpoints-mobius", cmd_dualpoints_mobius, "polar dual points via the flat lattice")

    sp = graph_cmd("flows", cmd_flows, "nowhere-zero k-flows (multigraphs allowed)")
    sp.add_argument("--k", type=int, default=2)

    sp = sub.add_parser("gj", help="cluster-method generating functions")
    sp.add_argument("--alphabet", type=int, required=True, help="alphabet size k")
    sp.add_argument("--bad", type=_word_list, required=True, help="comma separated bad words")
    sp.add_argument("--symbols", help="explicit symbol order, e.g. '+0-'")
    sp.add_argument("--cyclic", action="store_true")
    sp.add_argument("--orders", type=int, default=10)
    sp.set_defaults(handler=cmd_gj)

    sp = sub.add_parser("family", help="closed formulas for graph families")
    fam = sp.add_subparsers(dest="family", required=True)
    fam.add_parser("cycle").add_argument("--k", type=int, required=True)
    fam.add_parser("tree").add_argument("--n", type=int, required=True)
    fam.add_parser("complete").add_argument("--n", type=int, required=True)
    fam.add_parser("wheel").add_argument("--n", type=int, required=True)
    jp = fam.add_parser("join-odd")
    jp.add_argument("--i", type=int, required=True)
    jp.add_argument("--j", type=int, required=True)
    op = fam.add_parser("outerplanar")
    op.add_argument("--a", type=_int_list, required=True)
    op.add_argument("--s", type=int, required=True)
    op.add_argument("--t", type=int, required=True)
    sp.set_defaults(handler=cmd_family)

    sp = graph_cmd("kr", cmd_kr, "KR polytope of the graph metric on a vertex subset")
    sp.add_argument("--subset", type=_int_list, required=True)
    sp.add_argument("--verify", action="store_true")

    sp = sub.add_parser("verify", help="run the reproduction suite")
    sp.add_argument("--suite", choices=["paper"], default="paper")
    sp.add_argument("--criteria", type=_int_list, default=None,
                    help="comma separated criterion numbers (default: all)")
    sp.set_defaults(handler=cmd_verify)
    return p


def _pretty(data: Any, indent: int = 0) -> str:
    pad = "  " * indent
    if isinstance(data, dict):
        if "criteria" in data:
            lines = []
            for c in data["criteria"]:
                mark = "PASS" if c["passed"] else "FAIL"
                lines.append(f"{pad}{c['criterion']:>3}  {mark}  {c['title']}  ({c['seconds']}s)")
                for f in c["failures"]:
                    lines.append(f"{pad}       {f['name']}: expected {f['expected']}, got {f['actual']}")
            lines.append(f"{pad}overall: {'PASS' if data['passed'] else 'FAIL'}")
            return "\n".join(lines)
        lines = []
        for k, v in data.items():
            if isinstance(v, (dict, list)) and len(json.dumps(v)) > 70:
                lines.append(f"{pad}{k}:")
                lines.append(_pretty(v, indent + 1))
            else:
                lines.append(f"{pad}{k}: {json.dumps(v)}")
        return "\n".join(lines)
    if isinstance(data, list):
        return "\n".join(f"{pad}{json.dumps(v)}" for v in data)
    return f"{pad}{json.dumps(data)}"


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    start = time.perf_counter()
    try:
        result = args.handler(args)
    except argparse.ArgumentTypeError as exc:
        print(json.dumps({"error": "UsageError", "detail": str(exc)}), file=sys.stderr)
        return 2
    except (SympolyError, ValueError, OSError) as exc:
        print(json.dumps({"error": type(exc).__name__, "detail": str(exc)}))
        return 1
    data = to_jsonable(result)
    if args.report:
        inputs = {k: v for k, v in vars(args).items()
                  if k not in ("handler", "pretty", "report")}
        data = {"command": args.command, "inputs": to_jsonable(inputs), "outputs": data,
                "seconds": round(time.perf_counter() - start, 3)}
    print(_pretty(data) if args.pretty else json.dumps(data))
    if args.command == "verify" and not result["passed"]:
        return 1
    return 0


def main() -> None:
    sys.exit(run())
