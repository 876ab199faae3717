"""Crossing-minimal acyclic hamiltonian completion of embedded
outerplanar st-digraphs, and the matching two-page book embeddings."""

from .graph import (
    OuterplanarStDigraph,
    SideKind,
    SidePosition,
    EdgeClass,
    ParseError,
    ValidationError,
    MultipleSources,
    MultipleSinks,
    CycleDetected,
    SideNotAPath,
    EmbeddingNotPlane,
    DuplicateEdge,
    UnknownVertex,
    EdgeNotInGraph,
    NotAPermutation,
    build_graph,
    classify_edge,
    edge_classes,
    graph_from_json,
    graph_to_json,
    is_linear_extension,
    topological_order,
)
from .crossings import (
    CrossingRecord,
    HpExtendedGraph,
    NotLinearExtension,
    SameSideCompletionEdge,
    build_hp_extended,
    edge_crossings,
    solution_crossings,
)
from .rhombus import (
    Rhombus,
    RhombusKind,
    extract_hamiltonian_path,
    find_strong_rhombus,
    find_weak_rhombus,
    is_hamiltonian,
)
from .decompose import FreeVertex, StPolygon, decompose
from .polygon import (
    NotAnStPolygon,
    PolygonCosts,
    channel_order,
    local_edges,
    polygon_costs,
    polygon_subgraph,
)
from .solver import (
    CompletionSolution,
    solution_problems,
    solve,
    verify_solution,
)
from .book import (
    BookEmbedding,
    EdgeDrawing,
    InvalidSolution,
    Segment,
    SpineNotLinearExtension,
    book_from_json,
    book_to_json,
    from_book_embedding,
    to_book_embedding,
    validate_book_embedding,
)
from .oracle import (
    GeneratorParams,
    InfeasibleParams,
    InstanceTooLarge,
    brute_force_optimal,
    enumerate_hamiltonian_orders,
    generate,
)
from .render import render_svg

__version__ = "0.1.0"

__all__ = [
    "OuterplanarStDigraph", "SideKind", "SidePosition", "EdgeClass",
    "ParseError", "ValidationError", "MultipleSources", "MultipleSinks",
    "CycleDetected", "SideNotAPath", "EmbeddingNotPlane", "DuplicateEdge",
    "UnknownVertex", "EdgeNotInGraph", "NotAPermutation", "build_graph",
    "classify_edge", "edge_classes", "graph_from_json", "graph_to_json",
    "is_linear_extension", "topological_order",
    "CrossingRecord", "HpExtendedGraph", "NotLinearExtension",
    "SameSideCompletionEdge", "build_hp_extended", "edge_crossings",
    "solution_crossings",
    "Rhombus", "RhombusKind", "extract_hamiltonian_path",
    "find_strong_rhombus", "find_weak_rhombus", "is_hamiltonian",
    "FreeVertex", "StPolygon", "decompose",
    "NotAnStPolygon", "PolygonCosts", "channel_order", "local_edges",
    "polygon_costs", "polygon_subgraph",
    "CompletionSolution", "solution_problems", "solve", "verify_solution",
    "BookEmbedding", "EdgeDrawing", "InvalidSolution", "Segment",
    "SpineNotLinearExtension", "book_from_json", "book_to_json",
    "from_book_embedding", "to_book_embedding", "validate_book_embedding",
    "GeneratorParams", "InfeasibleParams", "InstanceTooLarge",
    "brute_force_optimal", "enumerate_hamiltonian_orders", "generate",
    "render_svg",
    "__version__",
]
