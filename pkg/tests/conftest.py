"""Named instances used across the suite.

The four small graphs are the canonical regression fixtures; expected
crossing numbers were confirmed against the brute-force oracle before
being frozen here.
"""

import pytest

from hpcc import build_graph


@pytest.fixture
def weak_rhombus():
    """Quadrilateral face, no median: 0 crossings."""
    return build_graph(["a"], ["b"],
                       [("s", "a"), ("a", "t"), ("s", "b"), ("b", "t")],
                       s="s", t="t")


@pytest.fixture
def strong_rhombus():
    """Quadrilateral plus its median: 1 crossing."""
    return build_graph(["a"], ["b"],
                       [("s", "a"), ("a", "t"), ("s", "b"), ("b", "t"), ("s", "t")],
                       s="s", t="t")


@pytest.fixture
def chorded_polygon():
    """Two left vertices, one right, median and a covering chord: 1 crossing."""
    return build_graph(["l1", "l2"], ["r1"],
                       [("s", "l1"), ("l1", "l2"), ("l2", "t"),
                        ("s", "r1"), ("r1", "t"), ("s", "t"), ("l1", "t")],
                       s="s", t="t")


@pytest.fixture
def stacked_rhombi():
    """Two strong rhombi sharing the middle vertex m: 2 crossings."""
    return build_graph(["a", "m", "c"], ["b", "d"],
                       [("s", "a"), ("a", "m"), ("m", "c"), ("c", "t"),
                        ("s", "b"), ("b", "d"), ("d", "t"),
                        ("b", "m"), ("m", "d"), ("s", "m"), ("m", "t")],
                       s="s", t="t")


@pytest.fixture
def edge_linked_polygons():
    """Two polygons joined by a shared two-sided edge (b, a): 2 crossings."""
    return build_graph(["x", "a", "c"], ["b", "d"],
                       [("s", "x"), ("x", "a"), ("a", "c"), ("c", "t"),
                        ("s", "b"), ("b", "d"), ("d", "t"),
                        ("s", "a"), ("b", "t"), ("b", "a")],
                       s="s", t="t")


@pytest.fixture
def double_crossing():
    """Instance whose optimum crosses one edge twice (3 < 4 restricted)."""
    right = [f"r{i}" for i in range(1, 8)]
    edges = ([("s", "l1"), ("l1", "t"), ("s", "r1")]
             + [(f"r{i}", f"r{i + 1}") for i in range(1, 7)]
             + [("r7", "t"), ("s", "t"), ("s", "r2"), ("s", "r3"), ("s", "r4"),
                ("r4", "t"), ("r5", "t"), ("r6", "t")])
    return build_graph(["l1"], right, edges, s="s", t="t")
