"""Minimum-crossing acyclic hamiltonian completion.

Dynamic program over the decomposition, bottom-up, with two cells per
element: the best cost so far given that the path walks the element's
left chain last, or its right chain last.  Junctions between consecutive
elements are plain graph edges except when two polygons share an edge.
There the later polygon's entry run is spliced below the earlier sink,
which reroutes one jump; the rerouted jump crosses the shared edge once,
and nothing else changes, so the transition charges exactly +1.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .crossings import CrossingRecord, build_hp_extended, solution_crossings
from .decompose import FreeVertex, StPolygon, decompose
from .graph import (OuterplanarStDigraph, Edge, VertexId, NotAPermutation,
                    ValidationError, is_linear_extension, _LEFT)
from .polygon import PolygonCosts, channel_order, polygon_costs

_L, _R = 0, 1


@dataclass(frozen=True)
class CompletionSolution:
    order: list[VertexId]
    completion_edges: list[Edge]
    records: list[CrossingRecord]
    crossings: int


def _junction(prev, nxt) -> str:
    if isinstance(prev, StPolygon) and isinstance(nxt, StPolygon):
        if prev.sink == nxt.source:
            return "vertex"
        if nxt.lower_limit == (nxt.source, prev.sink):
            return "edge"
    return "gap"


def _shared_edge_terms(cL, cR, pc: PolygonCosts, sink_on_left: bool):
    # +1 marks the combinations whose spliced jump crosses the shared
    # edge: the previous path ends on the sink's chain and the new
    # channel opens with vertices of the other chain.
    if sink_on_left:
        terms_l = ((cL + pc.c1L + 1, _L, "1L"), (cR + pc.c1L, _R, "1L"),
                   (cL + pc.c2L, _L, "2L"), (cR + pc.c2L, _R, "2L"))
        terms_r = ((cL + pc.c1R, _L, "1R"), (cR + pc.c1R, _R, "1R"),
                   (cL + pc.c2R + 1, _L, "2R"), (cR + pc.c2R, _R, "2R"))
    else:
        terms_l = ((cL + pc.c1L, _L, "1L"), (cR + pc.c1L, _R, "1L"),
                   (cL + pc.c2L, _L, "2L"), (cR + pc.c2L + 1, _R, "2L"))
        terms_r = ((cL + pc.c1R, _L, "1R"), (cR + pc.c1R + 1, _R, "1R"),
                   (cL + pc.c2R, _L, "2R"), (cR + pc.c2R, _R, "2R"))
    return min(terms_l, key=lambda t: t[0]), min(terms_r, key=lambda t: t[0])


def _plan(g: OuterplanarStDigraph, elements, costs):
    """DP forward pass; returns (best, channel tag per element)."""
    back = []
    cL = cR = None
    prev = None
    ci = 0
    for el in elements:
        if cL is None:
            base, bprev = 0, None
        else:
            base, bprev = (cR, _R) if cR <= cL else (cL, _L)
        if isinstance(el, FreeVertex):
            nL = nR = base
            row = (bprev, None, bprev, None)
        else:
            pc = costs[ci]
            ci += 1
            if prev is not None and _junction(prev, el) == "edge":
                on_left = bool(g.side[prev.sink] == _LEFT)
                (nL, pL, tL), (nR, pR, tR) = \
                    _shared_edge_terms(cL, cR, pc, on_left)
                row = (pL, tL, pR, tR)
            else:
                (vL, tL), (vR, tR) = pc.left_best, pc.right_best
                nL, nR = base + vL, base + vR
                row = (bprev, tL, bprev, tR)
        back.append(row)
        cL, cR = nL, nR
        prev = el

    if cL is None:
        return 0, []
    cell = _R if cR <= cL else _L
    best = cR if cell == _R else cL
    tags = [None] * len(elements)
    for i in reversed(range(len(elements))):
        pL, tL, pR, tR = back[i]
        tags[i] = tR if cell == _R else tL
        cell = pR if cell == _R else pL
    return best, tags


def _splice(g: OuterplanarStDigraph, elements, costs, tags) -> list[VertexId]:
    order: list[VertexId] = []
    prev = None
    ci = 0
    for el, tag in zip(elements, tags):
        if isinstance(el, FreeVertex):
            local = [el.vertex]
        else:
            pc = costs[ci]
            ci += 1
            local = channel_order(el, tag, pc.split(tag))
        if not order:
            order = local
        else:
            kind = _junction(prev, el)
            if kind == "vertex":
                assert order[-1] == el.source
                order.extend(local[1:])
            elif kind == "edge":
                t_prev = prev.sink
                assert order[-1] == t_prev
                at = local.index(t_prev)
                mid, rest = local[1:at], local[at + 1:]
                if mid:
                    side = g.side[t_prev]
                    i = len(order) - 2
                    while g.side[order[i]] == side:
                        i -= 1
                    assert order[i] == el.source
                    order[i + 1:i + 1] = mid
                order.extend(rest)
            else:
                assert g.has_edge(order[-1], local[0]), \
                    "elements not joined by an edge"
                order.extend(local)
        prev = el

    if not order or order[0] != g.s:
        assert not order or g.has_edge(g.s, order[0])
        order.insert(0, g.s)
    if order[-1] != g.t:
        assert g.has_edge(order[-1], g.t)
        order.append(g.t)
    return order


def solve(g: OuterplanarStDigraph) -> CompletionSolution:
    """Optimal completion; the recount at the end guards the plan."""
    elements = decompose(g)
    costs = polygon_costs(
        g, [el for el in elements if isinstance(el, StPolygon)])
    best, tags = _plan(g, elements, costs)
    order = _splice(g, elements, costs, tags)
    ces, records, total = solution_crossings(g, order)
    if total != best:
        raise AssertionError(
            f"planned {best} crossings but the order realises {total}")
    return CompletionSolution(order=order, completion_edges=ces,
                              records=records, crossings=total)


def _owners(g: OuterplanarStDigraph, elements) -> dict[VertexId, int]:
    own: dict[VertexId, int] = {}
    for i, el in enumerate(elements):
        if isinstance(el, FreeVertex):
            own.setdefault(el.vertex, i)
        else:
            own.setdefault(el.source, i)
            own.setdefault(el.sink, i)
            for v in el.left_vertices:
                own.setdefault(v, i)
            for v in el.right_vertices:
                own.setdefault(v, i)
    own.setdefault(g.s, 0)
    own.setdefault(g.t, max(len(elements) - 1, 0))
    return own


def solution_problems(g: OuterplanarStDigraph,
                      sol: CompletionSolution) -> list[str]:
    """Everything wrong with a claimed solution, in plain words."""
    probs = []
    try:
        if not is_linear_extension(g, sol.order):
            return ["order reverses at least one edge"]
    except NotAPermutation as exc:
        return [f"order is not a permutation of the vertices: {exc}"]

    ces, records, total = solution_crossings(g, sol.order)
    if set(sol.completion_edges) != set(ces) or \
            len(sol.completion_edges) != len(ces):
        probs.append("completion edges do not match the order's gaps")
    if set(sol.records) != set(records) or len(sol.records) != len(records):
        probs.append("crossing records do not match a recount")
    if sol.crossings != total:
        probs.append(f"claims {sol.crossings} crossings, recount says {total}")

    per_edge = Counter(r.crossed_edge for r in records)
    worst = max(per_edge.values(), default=0)
    if worst > 2:
        probs.append(f"an edge is crossed {worst} times, 2 is the most "
                     f"an optimal drawing ever needs")

    elements = decompose(g)
    own = _owners(g, elements)
    limit_of = {el.upper_limit: i for i, el in enumerate(elements)
                if isinstance(el, StPolygon) and el.upper_limit is not None}
    hits: dict[Edge, list[Edge]] = {}
    for r in records:
        if r.crossed_edge in limit_of:
            hits.setdefault(r.crossed_edge, []).append(r.completion_edge)
    for lim, ce_list in hits.items():
        i = limit_of[lim]
        if len(ce_list) > 1:
            probs.append(f"limit edge {lim} is crossed {len(ce_list)} times")
            continue
        f, h = ce_list[0]
        if not (own.get(h, -1) <= i < own.get(f, -1)):
            probs.append(f"the crossing of limit edge {lim} does not come "
                         f"from the element above it")

    try:
        build_hp_extended(g, sol.order)
    except ValidationError as exc:
        probs.append(f"subdividing the crossings fails: {exc}")
    return probs


def verify_solution(g: OuterplanarStDigraph, sol: CompletionSolution) -> bool:
    return not solution_problems(g, sol)
