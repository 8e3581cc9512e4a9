"""Exact treewidth and rankwidth, cutset decompositions and induced-pattern
detection for small graphs, with seeded verification suites."""
from .budget import Budget, BudgetExhausted
from .graph import Graph, GraphInputError
from .codecs import read_graph, read_graph6, write_graph, write_graph6
from .width import rankwidth, rankwidth_exact, treewidth, treewidth_exact
from .detect import Detection, detect_isk4, detect_unique_chord_cycle, detect_wheel, is_t_clean
from .prime import prime_decompose
from .harness import verify_lemma

__version__ = "0.1.0"

__all__ = ["Budget", "BudgetExhausted", "Graph", "GraphInputError", "read_graph", "read_graph6",
           "write_graph", "write_graph6", "treewidth", "treewidth_exact", "rankwidth", "rankwidth_exact",
           "Detection", "detect_isk4", "detect_unique_chord_cycle", "detect_wheel", "is_t_clean",
           "prime_decompose", "verify_lemma"]
