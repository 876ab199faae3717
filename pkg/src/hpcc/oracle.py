"""Exhaustive reference solver and random instance generator.

The scorer here is deliberately independent of the indexed crossing engine:
it tests every chord pair by raw interleaving, so the two implementations
check each other in the test suite.
"""

from __future__ import annotations

import random
from bisect import bisect_left, bisect_right, insort
from dataclasses import dataclass
from math import inf

from .graph import OuterplanarStDigraph, ValidationError, build_graph


class InstanceTooLarge(ValueError):
    pass


class InfeasibleParams(ValueError):
    pass


class _NaiveScorer:
    """Pairwise interleave counting; no shared code with the fast engine."""

    def __init__(self, g: OuterplanarStDigraph):
        self.eset = g.edge_set
        self.chords = [
            (min(u, v), max(u, v), u, v)
            for u, v in self.eset
        ]

    def completion_edges(self, order):
        prev = order[0]
        out = []
        for v in order[1:]:
            if (prev, v) not in self.eset:
                out.append((prev, v))
            prev = v
        return out

    def crossings_of(self, f, h):
        a, b = (f, h) if f < h else (h, f)
        out = []
        for ca, cb, cu, cv in self.chords:
            if f == cu or f == cv or h == cu or h == cv:
                continue
            if (ca < a < cb) != (ca < b < cb):
                out.append((cu, cv))
        return out

    def score(self, order):
        total = 0
        per_edge: dict[tuple, int] = {}
        for f, h in self.completion_edges(order):
            for e in self.crossings_of(f, h):
                total += 1
                per_edge[e] = per_edge.get(e, 0) + 1
        return total, per_edge


def enumerate_hamiltonian_orders(g: OuterplanarStDigraph):
    """Yield every linear extension, left chain preferred at each branch.

    Interleavings of the two chains that respect the two-sided edges are
    exactly the linear extensions, so candidate hamiltonian orders need no
    per-permutation filtering.
    """
    k, m, n = g.k, g.m, g.n
    req_l = [0] * (k + 2)
    req_r = [0] * (m + 2)
    for u, v in zip(g.tail.tolist(), g.head.tolist()):
        if 1 <= u <= k and v >= k + 2:
            j = n - v
            if u > req_r[j]:
                req_r[j] = u
        elif u >= k + 2 and 1 <= v <= k:
            j = n - u
            if j > req_l[v]:
                req_l[v] = j
    for i in range(2, k + 1):
        req_l[i] = max(req_l[i], req_l[i - 1])
    for j in range(2, m + 1):
        req_r[j] = max(req_r[j], req_r[j - 1])

    prefix = [0]

    def walk(i, j):
        if i > k and j > m:
            yield tuple(prefix) + (k + 1,)
            return
        if i <= k and req_l[i] < j:
            prefix.append(i)
            yield from walk(i + 1, j)
            prefix.pop()
        if j <= m and req_r[j] < i:
            prefix.append(n - j)
            yield from walk(i, j + 1)
            prefix.pop()

    yield from walk(1, 1)


def brute_force_optimal(g: OuterplanarStDigraph, max_vertices: int = 12,
                        max_crossings_per_edge: int | None = None):
    """Minimum crossings over every hamiltonian order, with first witness.

    Any acyclic completion set yields a hamiltonian order whose consecutive
    completion edges cost no more than the full set, so minimising over
    orders also minimises over arbitrary completion sets.  With a per-edge
    cap the search may be infeasible, in which case (inf, None) comes back.
    """
    if g.n > max_vertices:
        raise InstanceTooLarge(
            f"n={g.n} exceeds the oracle limit {max_vertices}")
    scorer = _NaiveScorer(g)
    best, witness = inf, None
    for order in enumerate_hamiltonian_orders(g):
        total, per_edge = scorer.score(order)
        if max_crossings_per_edge is not None and per_edge and \
                max(per_edge.values()) > max_crossings_per_edge:
            continue
        if total < best:
            best, witness = total, order
            if best == 0 and max_crossings_per_edge is None:
                break
    return best, witness


@dataclass(frozen=True)
class GeneratorParams:
    n: int
    left_fraction: float = 0.5
    chord_density: float = 0.3
    seed: int = 0


def _laminar_intervals(rng, limit, density):
    """Random laminar interval family over positions 0..limit."""
    out = []
    stack = [(0, limit)]
    while stack:
        lo, hi = stack.pop()
        if hi - lo < 2:
            continue
        if rng.random() < density:
            out.append((lo, hi))
        split = rng.randint(lo + 1, hi - 1)
        stack.append((lo, split))
        stack.append((split, hi))
    return out


def generate(params: GeneratorParams) -> OuterplanarStDigraph:
    """Seeded random instance; the same params always give the same graph."""
    n = params.n
    if n < 2:
        raise InfeasibleParams(f"n={n} is below the minimum of 2")
    if not 0.0 <= params.left_fraction <= 1.0:
        raise InfeasibleParams("left_fraction must be within [0, 1]")
    if not 0.0 <= params.chord_density <= 1.0:
        raise InfeasibleParams("chord_density must be within [0, 1]")

    for attempt in range(50):
        seed = params.seed if attempt == 0 else params.seed + 1000003 * attempt
        try:
            return _generate_once(n, params.left_fraction,
                                  params.chord_density, seed)
        except ValidationError:
            continue
    raise InfeasibleParams("could not generate a valid instance")


def _generate_once(n, left_fraction, density, seed):
    rng = random.Random(seed)
    k = min(n - 2, max(0, round((n - 2) * left_fraction)))
    m = n - 2 - k
    lefts = [f"l{i}" for i in range(1, k + 1)]
    rights = [f"r{j}" for j in range(1, m + 1)]

    def lname(c):
        return "s" if c == 0 else ("t" if c == k + 1 else lefts[c - 1])

    def rname(c):
        return "s" if c == 0 else ("t" if c == m + 1 else rights[c - 1])

    edges: set[tuple[str, str]] = set()
    chain = ["s"] + lefts + ["t"]
    edges.update(zip(chain, chain[1:]))
    chain = ["s"] + rights + ["t"]
    edges.update(zip(chain, chain[1:]))

    lam_l = _laminar_intervals(rng, k + 1, density)
    lam_r = _laminar_intervals(rng, m + 1, density)
    edges.update((lname(a), lname(b)) for a, b in lam_l)
    edges.update((rname(a), rname(b)) for a, b in lam_r)

    if ("s", "t") not in edges and k >= 1 and m >= 1:
        cov_l = [False] * (k + 1)
        for a, b in lam_l:
            for x in range(a + 1, min(b, k + 1)):
                cov_l[x] = True
        cov_r = [False] * (m + 1)
        for a, b in lam_r:
            for x in range(a + 1, min(b, m + 1)):
                cov_r[x] = True

        chain_ij: list[tuple[int, int]] = []   # accepted (i, j), sorted
        at_left: dict[int, list] = {}
        at_right: dict[int, list] = {}
        for _ in range(int(round(density * (k + m)))):
            i = rng.randint(1, k)
            j = rng.randint(1, m)
            l_to_r = rng.random() < 0.5
            if cov_l[i] or cov_r[j]:
                continue
            p = bisect_left(chain_ij, (i, -1))
            if p > 0 and chain_ij[p - 1][1] > j:
                continue
            q = bisect_right(chain_ij, (i, n))
            if q < len(chain_ij) and chain_ij[q][1] < j:
                continue
            u, v = (lefts[i - 1], rights[j - 1])
            if (u, v) in edges or (v, u) in edges:
                continue
            # a shared endpoint with an opposing chord closes a cycle
            # through the side path between the far ends
            bad = False
            for jj, d2 in at_left.get(i, ()):
                if l_to_r and not d2 and jj >= j:
                    bad = True
                if not l_to_r and d2 and jj <= j:
                    bad = True
            for ii, d2 in at_right.get(j, ()):
                if l_to_r and not d2 and ii <= i:
                    bad = True
                if not l_to_r and d2 and ii >= i:
                    bad = True
            if bad:
                continue
            insort(chain_ij, (i, j))
            at_left.setdefault(i, []).append((j, l_to_r))
            at_right.setdefault(j, []).append((i, l_to_r))
            edges.add((u, v) if l_to_r else (v, u))

    return build_graph(lefts, rights, sorted(edges), s="s", t="t")
