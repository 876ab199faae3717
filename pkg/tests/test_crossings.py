"""Crossing counts for completion edges against the embedded instance."""

import numpy as np
import pytest
from hypothesis import given, settings

from hpcc.crossings import (
    NotLinearExtension,
    SameSideCompletionEdge,
    build_hp_extended,
    crossings_along_edges,
    edge_crossings,
    scan_order,
    solution_crossings,
)
from hpcc.graph import topological_order
from strategies import instances


class TestEdgeCrossings:
    def test_ordered_from_tail(self, chorded_polygon):
        # (l2, r1) first cuts the covering chord (l1, t), then (s, t)
        assert edge_crossings(chorded_polygon, (2, 4)) == [(1, 3), (0, 3)]

    def test_shared_endpoint_never_crosses(self, chorded_polygon):
        assert edge_crossings(chorded_polygon, (4, 1)) == [(0, 3)]

    def test_rejects_chain_to_itself(self, chorded_polygon):
        with pytest.raises(SameSideCompletionEdge):
            edge_crossings(chorded_polygon, (1, 2))


class TestSolutionCrossings:
    @pytest.mark.parametrize(
        "order, ces, total",
        [
            ((0, 1, 2, 4, 3), [(2, 4)], 2),
            ((0, 4, 1, 2, 3), [(4, 1)], 1),
            ((0, 1, 4, 2, 3), [(1, 4), (4, 2)], 3),
        ],
    )
    def test_all_extensions_of_chorded_polygon(self, chorded_polygon, order, ces, total):
        got_ces, records, got_total = solution_crossings(chorded_polygon, order)
        assert got_ces == ces
        assert got_total == total
        assert len(records) == total

    def test_ordinals_restart_per_edge(self, chorded_polygon):
        _, records, _ = solution_crossings(chorded_polygon, (0, 1, 4, 2, 3))
        assert [(r.completion_edge, r.crossed_edge, r.ordinal) for r in records] == [
            ((1, 4), (0, 3), 0),
            ((4, 2), (0, 3), 0),
            ((4, 2), (1, 3), 1),
        ]

    def test_rejects_direction_violation(self, chorded_polygon):
        with pytest.raises(NotLinearExtension):
            scan_order(chorded_polygon, (0, 2, 1, 4, 3))

    def test_rejects_repeated_vertex(self, chorded_polygon):
        with pytest.raises(NotLinearExtension):
            scan_order(chorded_polygon, (0, 1, 1, 4, 3))


def test_grouping_by_crossed_edge(chorded_polygon):
    g = chorded_polygon
    scan = scan_order(g, (0, 1, 2, 4, 3))
    eids, offsets, rows = crossings_along_edges(g, scan)
    pairs = [(g.name(g.tail[e]), g.name(g.head[e])) for e in eids]
    assert pairs == [("s", "t"), ("l1", "t")]
    assert offsets.tolist() == [0, 1, 2]
    assert rows.tolist() == [1, 0]


def test_hp_extension_subdivides_each_crossing(chorded_polygon):
    hp = build_hp_extended(chorded_polygon, (0, 1, 2, 4, 3))
    assert hp.n_original == 5
    assert hp.names == ["s", "l1", "l2", "t", "r1", "x0", "x1"]
    assert hp.hamiltonian_order == [0, 1, 2, 5, 6, 4, 3]
    assert sorted(hp.crossing_of) == [5, 6]
    # 7 originals - 2 crossed + 2*2 halves + 3 arcs of the completion edge
    assert len(hp.edges) == 12


@settings(max_examples=150, deadline=None)
@given(instances())
def test_scan_of_topological_order(g):
    order = topological_order(g)
    scan = scan_order(g, order)
    edge = g.has_edges(order[:-1], order[1:])
    assert scan.ce_spine.tolist() == np.flatnonzero(~edge).tolist()
    assert scan.total == len(scan.pair_eid)
    # ordinals count 0..k-1 within each completion edge, in ce order
    counts = np.bincount(scan.pair_ce, minlength=len(scan.ce_tail))
    expect = np.concatenate([np.arange(c) for c in counts]) \
        if scan.total else np.empty(0, dtype=np.int64)
    assert scan.pair_ordinal.tolist() == expect.tolist()
    ces = list(zip(scan.ce_tail.tolist(), scan.ce_head.tolist()))
    assert scan.total == sum(len(edge_crossings(g, ce)) for ce in ces)
    hp = build_hp_extended(g, order)
    assert len(hp.names) == g.n + scan.total
    arcs = set(hp.edges)
    walk = hp.hamiltonian_order
    assert all((u, v) in arcs for u, v in zip(walk, walk[1:]))
