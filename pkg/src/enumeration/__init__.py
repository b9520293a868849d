# Module d'énumération: balayage de C7 et campagnes de vérification
from .checks import CheckOutcome, check_graph
from .corpus import c7_chord_supergraphs, random_graph_masks
from .search import VerificationRunner, minimize_counterexample

__all__ = [
    'CheckOutcome',
    'VerificationRunner',
    'c7_chord_supergraphs',
    'check_graph',
    'minimize_counterexample',
    'random_graph_masks',
]
