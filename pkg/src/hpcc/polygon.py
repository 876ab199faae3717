"""Channel costs inside st-polygons.

A hamiltonian path threads a polygon in one of four shapes: straight up
one chain then the other (one jump between the chains), or up a prefix of
one chain, across, and back for the suffix (two jumps).  Only the jumps
are completion edges, so each shape's cost is the jump crossing counts.

Costing sweeps one jump endpoint along a chain run while the other stays
fixed.  For a fixed chord, the set of sweep ordinals it crosses is one
contiguous interval (or its complement), so every chord contributes a
constant number of difference-array events and all polygons of a
decomposition are costed together in four vectorized passes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .decompose import StPolygon
from .graph import (OuterplanarStDigraph, Edge, ValidationError, build_graph,
                    _LEFT, _RIGHT)

CHANNELS = ("1L", "1R", "2L", "2R")

_BIG = np.iinfo(np.int64).max


class NotAnStPolygon(ValidationError):
    """The polygon does not describe an st-polygon of this graph."""


@dataclass(frozen=True)
class PolygonCosts:
    polygon: StPolygon
    c1L: int
    c1R: int
    c2L: int | float        # inf when the left run cannot be split
    c2R: int | float
    q2L: int | None         # split point realising c2L (lefts before the jump)
    q2R: int | None
    w1L: tuple[Edge, ...]
    w1R: tuple[Edge, ...]
    w2L: tuple[Edge, ...] | None
    w2R: tuple[Edge, ...] | None

    def cost(self, tag: str) -> int | float:
        return getattr(self, "c" + tag)

    def jumps(self, tag: str) -> tuple[Edge, ...]:
        w = getattr(self, "w" + tag)
        if w is None:
            raise ValueError(f"channel {tag} is not available here")
        return w

    def split(self, tag: str) -> int | None:
        return getattr(self, "q" + tag) if tag in ("2L", "2R") else None

    def order(self, tag: str) -> list[int]:
        return channel_order(self.polygon, tag, self.split(tag))

    @property
    def left_best(self) -> tuple[int | float, str]:
        return (self.c1L, "1L") if self.c1L <= self.c2L else (self.c2L, "2L")

    @property
    def right_best(self) -> tuple[int | float, str]:
        return (self.c1R, "1R") if self.c1R <= self.c2R else (self.c2R, "2R")


def channel_order(p: StPolygon, tag: str, q: int | None = None) -> list[int]:
    """Vertex order a channel assigns to the polygon, source to sink."""
    lefts, rights = p.left_vertices, p.right_vertices
    if tag in ("2L", "2R"):
        run = lefts if tag == "2L" else rights
        if q is None or not 1 <= q < len(run):
            raise ValueError(f"channel {tag} needs a split in 1..{len(run) - 1}")
    if tag == "1L":
        mid = rights + lefts
    elif tag == "1R":
        mid = lefts + rights
    elif tag == "2L":
        mid = lefts[:q] + rights + lefts[q:]
    elif tag == "2R":
        mid = rights[:q] + lefts + rights[q:]
    else:
        raise ValueError(f"unknown channel {tag!r}")
    return [p.source] + mid + [p.sink]


def _validate(g: OuterplanarStDigraph, polys: list[StPolygon]) -> None:
    for p in polys:
        if p.n != g.n:
            raise NotAnStPolygon(f"polygon built for n={p.n}, graph has n={g.n}")
        if not (1 <= p.left_lo <= p.left_hi <= g.k
                and 1 <= p.right_lo <= p.right_hi <= g.m):
            raise NotAnStPolygon(
                f"polygon at {p.source} needs nonempty runs on both chains")
        med = (p.source, p.sink) if g.has_edge(p.source, p.sink) else None
        if p.median != med:
            raise NotAnStPolygon(
                f"polygon at {p.source} disagrees with the graph about "
                f"the edge {p.source}->{p.sink}")


def _interior_owner(g: OuterplanarStDigraph, polys: list[StPolygon]):
    own = np.full(g.n, -1, dtype=np.int64)
    for pi, p in enumerate(polys):
        own[p.left_lo:p.left_hi + 1] = pi
        own[g.n - p.right_hi:g.n - p.right_lo + 1] = pi
    return own


def _local_pairs(g: OuterplanarStDigraph, polys: list[StPolygon]):
    """(edge id, polygon id) pairs; an edge shared by two polygons is listed
    under both.  Rejects edges that would pierce a polygon interior."""
    own = _interior_owner(g, polys)
    sig = np.fromiter((p.source for p in polys), np.int64, len(polys))
    tau = np.fromiter((p.sink for p in polys), np.int64, len(polys))
    SIG, TAU = np.append(sig, -1), np.append(tau, -1)

    pit, pih = own[g.tail], own[g.head]
    both = (pit >= 0) & (pit == pih)
    bad = both & (g.side[g.tail] != g.side[g.head])
    if bad.any():
        e = int(np.flatnonzero(bad)[0])
        raise NotAnStPolygon(
            f"edge {g.name(g.tail[e])}->{g.name(g.head[e])} joins the two "
            f"chain runs inside one polygon")
    ok_t = (pit >= 0) & (both | (g.head == SIG[pit]) | (g.head == TAU[pit]))
    ok_h = (pih >= 0) & (~both) & \
        ((g.tail == SIG[pih]) | (g.tail == TAU[pih]))

    eids = np.arange(g.edge_count, dtype=np.int64)
    pe = [eids[ok_t], eids[ok_h]]
    pp = [pit[ok_t], pih[ok_h]]
    med_p = np.asarray([pi for pi, p in enumerate(polys)
                        if p.median is not None], dtype=np.int64)
    pe.append(np.searchsorted(g._edge_keys, sig[med_p] * g.n + tau[med_p]))
    pp.append(med_p)
    return np.concatenate(pe), np.concatenate(pp)


def local_edges(g: OuterplanarStDigraph, p: StPolygon) -> list[Edge]:
    """Edges with both endpoints on the polygon, boundary included."""
    _validate(g, [p])
    pe, _ = _local_pairs(g, [p])
    pe = np.sort(pe)
    return [(int(g.tail[e]), int(g.head[e])) for e in pe]


def _jump_costs(pa, pb, base, fixv, orda, ordb, lena, flat_len):
    """Crossing counts for one jump family, summed per sweep ordinal.

    pa/pb: chord endpoints (ids are cycle positions, so also positions).
    fixv: the jump's fixed endpoint per pair.  orda/ordb: the chord
    endpoints mapped to sweep ordinals; values in [1, lena] are on the
    moving run.  Returns the cumulative difference array.
    """
    d = np.zeros(flat_len, dtype=np.int64)
    skip = (pa == fixv) | (pb == fixv)
    in0 = (pa < fixv) & (fixv < pb)     # fixed endpoint ids == positions
    lo = np.maximum(np.minimum(orda, ordb) + 1, 1)
    hi = np.minimum(np.maximum(orda, ordb) - 1, lena)

    m = ~skip & ~in0 & (lo <= hi)       # crossed while moving inside chord
    np.add.at(d, base[m] + lo[m], 1)
    np.add.at(d, base[m] + hi[m] + 1, -1)

    m = ~skip & in0                     # crossed while moving outside
    np.add.at(d, base[m] + 1, 1)
    np.add.at(d, base[m] + lena[m] + 1, -1)
    mi = m & (lo <= hi)
    np.add.at(d, base[mi] + lo[mi], -1)
    np.add.at(d, base[mi] + hi[mi] + 1, 1)
    for q in (orda, ordb):              # shared endpoints never cross
        ms = m & (q >= 1) & (q <= lena)
        np.add.at(d, base[ms] + q[ms], -1)
        np.add.at(d, base[ms] + q[ms] + 1, 1)
    return np.cumsum(d)


def _segment_best(c_first, c_second, off, width, count):
    """min of c_first[q] + c_second[q+1] over q in 1..len-1, per segment."""
    n_flat = len(c_first)
    q = np.arange(n_flat) - np.repeat(off[:-1], width)
    valid = (q >= 1) & (q <= np.repeat(count - 1, width))
    shifted = np.concatenate([c_second[1:], [0]])
    enc = np.where(valid, (c_first + shifted) * n_flat + q, _BIG)
    best = np.minimum.reduceat(enc, off[:-1])
    cost = np.where(best == _BIG, -1, best // max(n_flat, 1))
    split = np.where(best == _BIG, 0, best % max(n_flat, 1))
    return cost, split


def polygon_costs(g: OuterplanarStDigraph,
                  polys: list[StPolygon]) -> list[PolygonCosts]:
    """All four channel costs for every polygon, with jump witnesses."""
    if not polys:
        return []
    _validate(g, polys)
    pe, pp = _local_pairs(g, polys)
    pa = np.minimum(g.tail[pe], g.head[pe])
    pb = np.maximum(g.tail[pe], g.head[pe])

    P = len(polys)
    llo = np.fromiter((p.left_lo for p in polys), np.int64, P)
    lhi = np.fromiter((p.left_hi for p in polys), np.int64, P)
    rlo = np.fromiter((p.right_lo for p in polys), np.int64, P)
    rhi = np.fromiter((p.right_hi for p in polys), np.int64, P)
    K, M = lhi - llo + 1, rhi - rlo + 1

    offR = np.zeros(P + 1, dtype=np.int64)
    np.cumsum(M + 2, out=offR[1:])
    offL = np.zeros(P + 1, dtype=np.int64)
    np.cumsum(K + 2, out=offL[1:])

    # moving right ordinal q: position n - rlo + 1 - q; moving left
    # ordinal i: position llo - 1 + i.  Ordinal in range iff the chord
    # endpoint lies on that run.
    cr = g.n - rlo[pp] + 1
    cl = llo[pp] - 1
    ra, rb = cr - pa, cr - pb
    la, lb = pa - cl, pb - cl
    baseR, baseL = offR[pp], offL[pp]
    mR, kL = M[pp], K[pp]

    f1 = _jump_costs(pa, pb, baseR, llo[pp], ra, rb, mR, int(offR[-1]))
    f2 = _jump_costs(pa, pb, baseR, lhi[pp], ra, rb, mR, int(offR[-1]))
    f3 = _jump_costs(pa, pb, baseL, g.n - rlo[pp], la, lb, kL, int(offL[-1]))
    f4 = _jump_costs(pa, pb, baseL, g.n - rhi[pp], la, lb, kL, int(offL[-1]))

    c1L = f1[offR[:-1] + M]
    c1R = f2[offR[:-1] + 1]
    c2R, q2R = _segment_best(f1, f2, offR, M + 2, M)
    c2L, q2L = _segment_best(f3, f4, offL, K + 2, K)

    out = []
    for pi, p in enumerate(polys):
        lam1, lamK = p.left_lo, p.left_hi
        rho1, rhoM = g.n - p.right_lo, g.n - p.right_hi
        w2L = w2R = None
        if c2R[pi] >= 0:
            q = int(q2R[pi])
            w2R = ((g.n - (p.right_lo + q - 1), lam1),
                   (lamK, g.n - (p.right_lo + q)))
        if c2L[pi] >= 0:
            q = int(q2L[pi])
            w2L = ((p.left_lo + q - 1, rho1), (rhoM, p.left_lo + q))
        out.append(PolygonCosts(
            polygon=p,
            c1L=int(c1L[pi]), c1R=int(c1R[pi]),
            c2L=int(c2L[pi]) if c2L[pi] >= 0 else math.inf,
            c2R=int(c2R[pi]) if c2R[pi] >= 0 else math.inf,
            q2L=int(q2L[pi]) if c2L[pi] >= 0 else None,
            q2R=int(q2R[pi]) if c2R[pi] >= 0 else None,
            w1L=((rhoM, lam1),), w1R=((lamK, rho1),),
            w2L=w2L, w2R=w2R))
    return out


def polygon_subgraph(g: OuterplanarStDigraph, p: StPolygon):
    """The polygon as a standalone instance; vertex names carry over."""
    _validate(g, [p])
    pe, _ = _local_pairs(g, [p])
    edges = [(g.name(g.tail[e]), g.name(g.head[e])) for e in np.sort(pe)]
    return build_graph([g.name(v) for v in p.left_vertices],
                       [g.name(v) for v in p.right_vertices],
                       edges, s=g.name(p.source), t=g.name(p.sink))
