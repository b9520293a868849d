# Module d'écriture des sorties (JSON, CSV, DOT, contre-exemples)
from .report_writer import ReportWriter, dumps_json, graph_to_dot, graph_to_edge_list, skeleton_to_dot

__all__ = ['ReportWriter', 'dumps_json', 'graph_to_dot', 'graph_to_edge_list', 'skeleton_to_dot']
