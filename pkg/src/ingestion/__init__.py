# Module d'ingestion des graphes (liste d'arêtes, graph6)
from .graph_loader import GraphLoader

__all__ = ['GraphLoader']
