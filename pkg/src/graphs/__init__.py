# Module graphes: représentation, couplages, graph6, formes canoniques
from .graph import Graph, non_adjacent_subgraph, max_matching_size, enumerate_matchings
from .graph6 import encode_graph6, decode_graph6
from .canonical import CanonicalForm, canonical_form, dedup_by_iso

__all__ = [
    'Graph', 'non_adjacent_subgraph', 'max_matching_size', 'enumerate_matchings',
    'encode_graph6', 'decode_graph6', 'CanonicalForm', 'canonical_form', 'dedup_by_iso',
]
