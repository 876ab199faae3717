"""Decomposition into maximal st-polygons and free vertices.

Every median and every weak face seeds one polygon; the polygon then grows
each chain run outward until the chords incident to its source and sink cut
it off.  What no polygon covers is a free vertex.  Elements are returned
bottom-up; consecutive polygons overlap in at most a shared vertex or a
shared two-sided edge.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .embedding import face_vertices, median_scan
from .graph import (OuterplanarStDigraph, Edge, VertexId, topo_index,
                    _LEFT, _RIGHT)
from .rhombus import _weak_face_mask


@dataclass(frozen=True)
class StPolygon:
    source: VertexId
    sink: VertexId
    left_lo: int            # left chain ranks strictly inside the polygon
    left_hi: int            # inclusive; left_hi < left_lo means empty
    right_lo: int
    right_hi: int
    n: int                  # host graph size, for rank -> id on the right
    median: Edge | None
    lower_limit: Edge | None
    upper_limit: Edge | None

    @property
    def left_vertices(self) -> list[VertexId]:
        return list(range(self.left_lo, self.left_hi + 1))

    @property
    def right_vertices(self) -> list[VertexId]:
        return [self.n - j for j in range(self.right_lo, self.right_hi + 1)]

    @property
    def representative(self) -> VertexId:
        return self.source


@dataclass(frozen=True)
class FreeVertex:
    vertex: VertexId

    @property
    def representative(self) -> VertexId:
        return self.vertex


DecompositionElement = StPolygon | FreeVertex


def _limit_tables(g: OuterplanarStDigraph):
    """Per-vertex extreme two-sided neighbours, as opposite-chain ranks.

    lo_out[v] = rank of v's lowest out-neighbour on the other chain,
    hi_in[v] the highest such in-neighbour; 0 / -1 where none exists.
    Only two-sided edges contribute, which is all a polygon limit can be.
    """
    tabs = g._cache.get("limits")
    if tabs is None:
        lo_out = np.full(g.n, g.n, dtype=np.int64)
        hi_in = np.full(g.n, -1, dtype=np.int64)
        st, sh = g.side[g.tail], g.side[g.head]
        ts = ((st == _LEFT) & (sh == _RIGHT)) | ((st == _RIGHT) & (sh == _LEFT))
        u, v = g.tail[ts], g.head[ts]
        np.minimum.at(lo_out, u, g.rank[v])
        np.maximum.at(hi_in, v, g.rank[u])
        lo_out[lo_out == g.n] = 0
        tabs = g._cache["limits"] = (lo_out, hi_in)
    return tabs


def _grow(g: OuterplanarStDigraph, src: VertexId, snk: VertexId) -> StPolygon:
    """Maximal polygon with the given source and sink.

    A chain run starts right above the source (or at the source's lowest
    out-neighbour on that chain, when the source sits on the other chain)
    and ends symmetrically under the sink.
    """
    median = (src, snk) if g.has_edge(src, snk) else None
    lo_out, hi_in = _limit_tables(g)

    def run(side_code, top_rank):
        if src == g.s:
            lo = 1
        elif g.side[src] == side_code:
            lo = int(g.rank[src]) + 1
        else:
            lo = int(lo_out[src])
            assert lo > 0, "polygon source has no limit edge"
        if snk == g.t:
            hi = top_rank
        elif g.side[snk] == side_code:
            hi = int(g.rank[snk]) - 1
        else:
            hi = int(hi_in[snk])
            assert hi >= 0, "polygon sink has no limit edge"
        return lo, hi

    llo, lhi = run(_LEFT, g.k)
    rlo, rhi = run(_RIGHT, g.m)

    if src == g.s:
        lower = None
    elif g.side[src] == _LEFT:
        lower = (src, g.n - rlo)
    else:
        lower = (src, llo)
    if snk == g.t:
        upper = None
    elif g.side[snk] == _LEFT:
        upper = (g.n - rhi, snk)
    else:
        upper = (lhi, snk)
    return StPolygon(src, snk, llo, lhi, rlo, rhi, g.n, median, lower, upper)


def median_candidates(g: OuterplanarStDigraph):
    """Median edges with their fan witnesses, bottom-up."""
    scan = median_scan(g)
    ti = topo_index(g)
    u, v = g.tail[scan.edges], g.head[scan.edges]
    order = np.lexsort((ti[v], ti[u]))
    return [((int(u[i]), int(v[i])),
             (int(scan.left_witness[i]), int(scan.right_witness[i])))
            for i in order]


def _canonical_face(g, face_idx, src, snk):
    verts = face_vertices(g, face_idx)
    mids = [v for v in verts if v != src and v != snk]
    mids.sort(key=lambda v: (g.side[v], int(g.rank[v])))
    return (src, *mids, snk)


def weak_polygon_seeds(g: OuterplanarStDigraph):
    """Faces with interior vertices on both chains, with their grown limits."""
    f, weak = _weak_face_mask(g)
    ti = topo_index(g)
    cand = np.flatnonzero(weak)
    order = np.lexsort((ti[f.snk_of[cand]], ti[f.src_of[cand]]))
    out = []
    for i in cand[order]:
        src, snk = int(f.src_of[i]), int(f.snk_of[i])
        p = _grow(g, src, snk)
        out.append((_canonical_face(g, int(i), src, snk),
                    (p.lower_limit, p.upper_limit)))
    return out


def decompose(g: OuterplanarStDigraph) -> list[DecompositionElement]:
    scan = median_scan(g)
    f, weak = _weak_face_mask(g)
    polys = [_grow(g, int(u), int(v))
             for u, v in zip(g.tail[scan.edges], g.head[scan.edges])]
    polys += [_grow(g, int(f.src_of[i]), int(f.snk_of[i]))
              for i in np.flatnonzero(weak)]

    cov_l = np.zeros(g.k + 2, dtype=np.int64)
    cov_r = np.zeros(g.m + 2, dtype=np.int64)
    for p in polys:
        cov_l[p.left_lo] += 1
        cov_l[p.left_hi + 1] -= 1
        cov_r[p.right_lo] += 1
        cov_r[p.right_hi + 1] -= 1
    cov_l = np.cumsum(cov_l)
    cov_r = np.cumsum(cov_r)
    if (g.k and cov_l[1:g.k + 1].max(initial=0) > 1) or \
            (g.m and cov_r[1:g.m + 1].max(initial=0) > 1):
        raise AssertionError("internal: polygon chains overlap")
    # Endpoints stack on top of chains: one vertex may be sink of a polygon,
    # chain vertex of the next, and source of the one after.
    seen_src: set[int] = set()
    seen_snk: set[int] = set()
    for p in polys:
        if p.source in seen_src or p.sink in seen_snk:
            raise AssertionError("internal: polygons share a source or sink")
        seen_src.add(p.source)
        seen_snk.add(p.sink)
        for v in (p.source, p.sink):
            if g.side[v] == _LEFT:
                cov_l[g.rank[v]] += 1
            elif g.side[v] == _RIGHT:
                cov_r[g.rank[v]] += 1

    elements: list[DecompositionElement] = list(polys)
    elements += [FreeVertex(int(r)) for r in
                 np.flatnonzero(cov_l[1:g.k + 1] == 0) + 1]
    elements += [FreeVertex(int(g.n - r)) for r in
                 np.flatnonzero(cov_r[1:g.m + 1] == 0) + 1]
    ti = topo_index(g)
    elements.sort(key=lambda el: int(ti[el.representative]))
    return elements
