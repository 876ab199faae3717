"""Command line front end.

Exit codes: 0 success, 1 a solver self-check failed, 2 unreadable input,
3 invalid instance or data (the class name says which rule), 4 instance
too large for the oracle, 5 solver and oracle disagree.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import math
import os
import sys
from pathlib import Path

from .book import (InvalidSolution, book_to_json, to_book_embedding,
                   validate_book_embedding)
from .decompose import StPolygon, decompose
from .graph import (OuterplanarStDigraph, ParseError, ValidationError,
                    graph_from_json, graph_to_json)
from .oracle import (GeneratorParams, InfeasibleParams, InstanceTooLarge,
                     brute_force_optimal, generate)
from .polygon import polygon_costs
from .render import render_svg
from .rhombus import is_hamiltonian
from .solver import CompletionSolution, solution_problems, solve

_ORACLE_DEFAULT = 12


def _read_text(path: str | None) -> str:
    if path in (None, "-"):
        return sys.stdin.read()
    return Path(path).read_text()


def _write_text(path: str | None, text: str) -> None:
    if path in (None, "-"):
        sys.stdout.write(text + "\n")
    else:
        Path(path).write_text(text + "\n")


def _read_graph(args) -> OuterplanarStDigraph:
    return graph_from_json(_read_text(args.input))


def _dump(payload) -> str:
    return json.dumps(payload, indent=2, sort_keys=True)


def _solution_payload(g: OuterplanarStDigraph, sol: CompletionSolution):
    return {
        "crossings": sol.crossings,
        "order": g.names_of(sol.order),
        "completion_edges": [[g.name(u), g.name(v)]
                             for u, v in sol.completion_edges],
        "records": [
            {
                "completion_edge": [g.name(r.completion_edge[0]),
                                    g.name(r.completion_edge[1])],
                "crossed_edge": [g.name(r.crossed_edge[0]),
                                 g.name(r.crossed_edge[1])],
                "ordinal": r.ordinal,
            }
            for r in sol.records
        ],
    }


def _named_edge(g, e):
    return None if e is None else [g.name(e[0]), g.name(e[1])]


def _cmd_check(args) -> int:
    g = _read_graph(args)
    payload = {
        "n": g.n,
        "edges": g.edge_count,
        "left": g.names_of(g.left_seq),
        "right": g.names_of(g.right_seq),
        "hamiltonian": is_hamiltonian(g),
    }
    _write_text(args.output, _dump(payload))
    return 0


def _cmd_decompose(args) -> int:
    g = _read_graph(args)
    elements = decompose(g)
    polys = [el for el in elements if isinstance(el, StPolygon)]
    costs = iter(polygon_costs(g, polys))
    out = []
    for el in elements:
        if isinstance(el, StPolygon):
            pc = next(costs)
            out.append({
                "kind": "polygon",
                "source": g.name(el.source),
                "sink": g.name(el.sink),
                "left": g.names_of(el.left_vertices),
                "right": g.names_of(el.right_vertices),
                "median": _named_edge(g, el.median),
                "lower_limit": _named_edge(g, el.lower_limit),
                "upper_limit": _named_edge(g, el.upper_limit),
                "costs": {
                    "1L": pc.c1L,
                    "1R": pc.c1R,
                    "2L": None if math.isinf(pc.c2L) else pc.c2L,
                    "2R": None if math.isinf(pc.c2R) else pc.c2R,
                },
            })
        else:
            out.append({"kind": "free", "vertex": g.name(el.vertex)})
    _write_text(args.output, _dump(out))
    return 0


def _solve_checked(g: OuterplanarStDigraph) -> CompletionSolution:
    sol = solve(g)
    probs = solution_problems(g, sol)
    if probs:
        raise AssertionError("; ".join(probs))
    return sol


def _cmd_solve(args) -> int:
    g = _read_graph(args)
    sol = _solve_checked(g)
    _write_text(args.output, _dump(_solution_payload(g, sol)))
    if args.svg:
        _write_text(args.svg, render_svg(g, to_book_embedding(g, sol)))
    return 0


def _cmd_embed(args) -> int:
    g = _read_graph(args)
    sol = _solve_checked(g)
    be = to_book_embedding(g, sol)
    probs = validate_book_embedding(be, g)
    if probs:
        raise AssertionError("; ".join(probs))
    _write_text(args.output, book_to_json(g, be))
    if args.svg:
        _write_text(args.svg, render_svg(g, be))
    return 0


def _cmd_render(args) -> int:
    g = _read_graph(args)
    sol = _solve_checked(g)
    _write_text(args.output, render_svg(g, to_book_embedding(g, sol)))
    return 0


def _cmd_oracle(args) -> int:
    g = _read_graph(args)
    best, witness = brute_force_optimal(g, max_vertices=args.max_oracle)
    payload = {
        "crossings": None if math.isinf(best) else best,
        "order": None if witness is None else g.names_of(witness),
    }
    _write_text(args.output, _dump(payload))
    return 0


def _cmd_compare(args) -> int:
    g = _read_graph(args)
    sol = _solve_checked(g)
    best, _ = brute_force_optimal(g, max_vertices=args.max_oracle)
    if sol.crossings != best:
        print(f"mismatch: solver found {sol.crossings} crossings, "
              f"oracle found {best}", file=sys.stderr)
        return 5
    _write_text(args.output, _dump({"crossings": best, "match": True}))
    return 0


def _cmd_gen(args) -> int:
    params = GeneratorParams(n=args.n, left_fraction=args.left_fraction,
                             chord_density=args.density, seed=args.seed)
    if args.count == 1:
        _write_text(args.output, graph_to_json(generate(params)))
        return 0
    lines = []
    for i in range(args.count):
        g = generate(dataclasses.replace(params, seed=params.seed + i))
        lines.append(json.dumps(json.loads(graph_to_json(g)),
                                sort_keys=True, separators=(",", ":")))
    _write_text(args.output, "\n".join(lines))
    return 0


def _parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="hpcc",
        description="Crossing-minimal acyclic hamiltonian completion of "
                    "outerplanar st-digraphs.")
    sub = top.add_subparsers(dest="command", required=True)
    oracle_default = int(os.environ.get("HPCC_MAX_ORACLE", _ORACLE_DEFAULT))

    def add(name, func, help_, *, svg=False, oracle=False):
        p = sub.add_parser(name, help=help_)
        p.set_defaults(func=func)
        if name != "gen":
            p.add_argument("-i", "--input", default=None,
                           help="graph JSON file, default stdin")
        p.add_argument("-o", "--output", default=None,
                       help="output file, default stdout")
        if svg:
            p.add_argument("--svg", default=None,
                           help="also write an SVG rendering here")
        if oracle:
            p.add_argument("--max-oracle", type=int, default=oracle_default,
                           help="largest n the oracle will enumerate")
        return p

    add("check", _cmd_check, "validate an instance and summarise it")
    add("decompose", _cmd_decompose, "print polygons, free vertices, costs")
    add("solve", _cmd_solve, "minimise crossings", svg=True)
    add("embed", _cmd_embed, "emit the two-page book embedding", svg=True)
    add("render", _cmd_render, "emit an SVG of the solved embedding")
    add("oracle", _cmd_oracle, "exhaustive minimum for small instances",
        oracle=True)
    add("compare", _cmd_compare, "solver against oracle", oracle=True)

    p = add("gen", _cmd_gen, "generate a random valid instance")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--density", type=float, default=0.3)
    p.add_argument("--left-fraction", type=float, default=0.5)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=1,
                   help="emit this many instances as JSON lines")
    return top


def main(argv=None) -> int:
    args = _parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"ParseError: {exc}", file=sys.stderr)
        return 2
    except InstanceTooLarge as exc:
        print(f"InstanceTooLarge: {exc}", file=sys.stderr)
        return 4
    except (InvalidSolution, AssertionError) as exc:
        print(f"self-check failed: {exc}", file=sys.stderr)
        return 1
    except (ValidationError, InfeasibleParams) as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 3
    except OSError as exc:
        print(f"cannot read or write: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
