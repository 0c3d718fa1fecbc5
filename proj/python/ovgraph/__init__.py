"""Compact exact-match overlap graphs over equal-length strings.

Build a graph whose edge (i, j) with weight w records that the last
(length - w) symbols of string i equal the first (length - w) symbols of
string j, for every weight up to a threshold.  Each adjacency row is held
as a handful of disjoint rank intervals, so the whole graph fits in
O(lambda * n * log n) bits regardless of how many edges it encodes.
"""

from ._core import (
    Alphabet,
    Corpus,
    Graph,
    all_pairs,
    build_graph,
    max_proper_overlap,
    ov_max,
    prefix_interval,
)

__all__ = [
    "Alphabet",
    "Corpus",
    "Graph",
    "all_pairs",
    "build_graph",
    "max_proper_overlap",
    "ov_max",
    "prefix_interval",
]

__version__ = "1.0.0"
