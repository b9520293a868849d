"""Interface en ligne de commande matchtop.

Codes de sortie: 0 succès, 1 divergence de vérification ou de classification,
2 entrée invalide, 3 limite de capacité.
"""

import logging
import os
import sys
import time
from functools import wraps
from typing import Any, Dict, List, Optional

import click
import networkx as nx

from src.analytics.report import Report, log_enumeration_summary
from src.classification.classifier import classify, is_matroid, kmn_table, matching_complex_dimension
from src.config import Config
from src.enumeration.search import VerificationRunner
from src.errors import CapabilityError, MatchtopError
from src.graphs.canonical import canonical_form
from src.graphs.graph import Graph, max_matching_size, structural_predicates
from src.graphs.graph6 import encode_graph6
from src.ingestion.graph_loader import GraphLoader
from src.storage.report_writer import ReportWriter, dumps_json, graph_to_dot, skeleton_to_dot
from src.topology.complex import f_vector, matching_complex, one_skeleton_graph
from src.topology.homology import homology_summary

logger = logging.getLogger(__name__)

LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'


def setup_logging(config: Config, verbose: bool, json_output: bool = False):
    """Configure le logging racine (stderr quand stdout porte du JSON)"""
    stream = sys.stderr if json_output else sys.stdout
    handlers: List[logging.Handler] = [logging.StreamHandler(stream)]
    if os.path.exists('logs'):
        handlers.append(logging.FileHandler('logs/matchtop.log', mode='a'))
    if config.LOG_JSON:
        from pythonjsonlogger import jsonlogger

        formatter = jsonlogger.JsonFormatter(LOG_FORMAT)
    else:
        formatter = logging.Formatter(LOG_FORMAT)
    for handler in handlers:
        handler.setFormatter(formatter)
    level = logging.DEBUG if verbose else getattr(logging, config.LOG_LEVEL.upper(), logging.INFO)
    logging.basicConfig(level=level, handlers=handlers, force=True)
    if verbose:
        logger.info("Mode verbeux activé")


def guarded(func):
    """Traduit les exceptions du projet en codes de sortie"""

    @wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except MatchtopError as e:
            logger.error(f"❌ {type(e).__name__}: {e}")
            sys.exit(e.exit_code)
        except KeyboardInterrupt:
            logger.info("❌ Interruption par l'utilisateur")
            sys.exit(1)

    return wrapper


def _emit(report: Report, json_output: bool, text_lines: Optional[List[str]] = None):
    if json_output:
        click.echo(dumps_json(report.model_dump(mode="json")))
    else:
        for line in text_lines or []:
            click.echo(line)


def _input_echo(g: Graph, source: str, fmt: str) -> Dict[str, Any]:
    try:
        form = canonical_form(g).text
    except CapabilityError:
        form = None
    return {"source": source, "format": fmt, "graph6": encode_graph6(g), "canonical_form": form}


def analyze_graph(g: Graph) -> Dict[str, Any]:
    """Analyse structurelle de G et de M(G)"""
    summary = structural_predicates(g)
    payload: Dict[str, Any] = {
        "n": g.n,
        "edge_count": g.edge_count,
        "components": len(summary.components),
        "connected": summary.is_connected,
        "bipartite": summary.is_bipartite,
        "bipartition": [list(side) for side in summary.bipartition] if summary.bipartition else None,
        "degree_sequence": list(summary.degree_sequence),
        "max_matching": max_matching_size(g, 4) if g.edge_count else 0,
        "dim": matching_complex_dimension(g),
        "matroid": is_matroid(g),
    }
    if g.edge_count:
        complex_ = matching_complex(g)
        payload["f_vector"] = f_vector(complex_)
        payload["m_components"] = nx.number_connected_components(one_skeleton_graph(complex_))
        payload.update(homology_summary(complex_))
    return payload


@click.group()
@click.option('--verbose', '-v', is_flag=True, help='Mode verbeux (logs détaillés)')
@click.option('--threads', type=int, default=None, help='Nombre de processus (défaut: MATCHTOP_THREADS ou nombre de coeurs)')
@click.pass_context
def cli(ctx, verbose, threads):
    """Complexes de couplages: analyse, classification et vérifications"""
    ctx.ensure_object(dict)
    ctx.obj['config'] = Config()
    ctx.obj['verbose'] = verbose
    ctx.obj['threads'] = threads


def _prepare(ctx, json_output: bool) -> Config:
    config = ctx.obj['config']
    setup_logging(config, ctx.obj['verbose'], json_output)
    return config


format_option = click.option(
    '--format', 'fmt', type=click.Choice(['auto', 'edgelist', 'graph6']), default='auto',
    help="Format d'entrée (détection automatique par défaut)",
)
json_option = click.option('--json', 'json_output', is_flag=True, help='Sortie JSON')


@cli.command()
@click.argument('source')
@format_option
@json_option
@click.pass_context
@guarded
def analyze(ctx, source, fmt, json_output):
    """Analyse un graphe: structure, dim M(G), f-vecteur, nombres de Betti"""
    config = _prepare(ctx, json_output)
    start = time.time()
    loader = GraphLoader(config)
    graphs = [g.normalized() for g in loader.load_graphs(source, fmt)]
    payloads = [analyze_graph(g) for g in graphs]
    report = Report(
        command="analyze",
        input={"graphs": [_input_echo(g, source, fmt) for g in graphs]},
        payload=payloads[0] if len(payloads) == 1 else payloads,
        timings={"total_seconds": round(time.time() - start, 3)},
    )
    lines = []
    for g, payload in zip(graphs, payloads):
        lines.append(f"📊 {encode_graph6(g)}")
        lines.extend(f"  {key}: {value}" for key, value in payload.items())
    _emit(report, json_output, lines)


@cli.command(name='classify')
@click.argument('source')
@format_option
@json_option
@click.pass_context
@guarded
def classify_command(ctx, source, fmt, json_output):
    """Classe M(G): verdicts Buchsbaum / CM, familles et certificat"""
    config = _prepare(ctx, json_output)
    start = time.time()
    graphs = [g.normalized() for g in GraphLoader(config).load_graphs(source, fmt)]
    results = [classify(g) for g in graphs]
    payloads = [r.to_payload() for r in results]
    report = Report(
        command="classify",
        input={"graphs": [_input_echo(g, source, fmt) for g in graphs]},
        payload=payloads[0] if len(payloads) == 1 else payloads,
        timings={"total_seconds": round(time.time() - start, 3)},
    )
    lines = []
    for g, result in zip(graphs, results):
        lines.append(
            f"{encode_graph6(g)}: dim={result.dim_of_matching_complex} "
            f"buchsbaum={result.is_buchsbaum} cm={result.is_cm} "
            f"familles={','.join(result.families) or '-'} matroide={result.is_matroid}"
        )
        if result.certificate.failing_edge_label:
            lines.append(f"  arête fautive {result.certificate.failing_edge_label}: {result.certificate.reason}")
    _emit(report, json_output, lines)


def _finish_enumeration(command: str, enumeration, json_output: bool, extra_lines: List[str]):
    log_enumeration_summary(enumeration)
    report = Report(
        command=command,
        input=enumeration.parameters | ({"seed": enumeration.seed} if enumeration.seed is not None else {}),
        payload=enumeration.deterministic_dump(),
        timings={"runtime_seconds": enumeration.runtime_seconds},
    )
    _emit(report, json_output, extra_lines)
    if not enumeration.ok:
        paths = [d.counterexample_path for d in enumeration.discrepancies if d.counterexample_path]
        logger.error(f"❌ Divergences détectées; contre-exemples: {', '.join(paths) or 'aucun fichier'}")
        sys.exit(1)


@cli.command(name='scan-c7')
@click.option('--out', type=click.Path(dir_okay=False), help='Fichier CSV de sortie')
@json_option
@click.pass_context
@guarded
def scan_c7_command(ctx, out, json_output):
    """Balayage des sur-graphes de C7 (tableau par nombre de cordes)"""
    config = _prepare(ctx, json_output)
    logger.info("🚀 ÉTAPE 1: Balayage des ensembles de cordes")
    logger.info("-" * 40)
    runner = VerificationRunner(config, ctx.obj['threads'])
    enumeration = runner.scan_c7()
    table = enumeration.table_frame()
    if out:
        logger.info("💾 ÉTAPE 2: Écriture du tableau")
        ReportWriter(config).write_table(table, out)
    _finish_enumeration("scan-c7", enumeration, json_output, [table.to_csv(index_label="row").rstrip()])


@cli.group()
def verify():
    """Campagnes de vérification croisée"""


@verify.command()
@click.option('--max-n', type=int, required=True, help='Nombre maximal de sommets (<= 7)')
@json_option
@click.pass_context
@guarded
def exhaustive(ctx, max_n, json_output):
    """Tous les graphes étiquetés jusqu'à max-n sommets"""
    config = _prepare(ctx, json_output)
    enumeration = VerificationRunner(config, ctx.obj['threads']).exhaustive_verify(max_n)
    lines = ["couverture: un représentant vérifié par classe d'isomorphisme"]
    lines += [f"{key}: {value}" for key, value in sorted(enumeration.statistics.items())]
    _finish_enumeration("verify exhaustive", enumeration, json_output, lines)


@verify.command(name='random')
@click.option('--n', 'n', type=int, required=True, help='Nombre de sommets (7..12)')
@click.option('--count', type=int, required=True, help='Nombre de tirages')
@click.option('--seed', type=int, default=None, help='Graine (défaut: MATCHTOP_SEED)')
@json_option
@click.pass_context
@guarded
def random_command(ctx, n, count, seed, json_output):
    """Tirages d'Erdős–Rényi reproductibles"""
    config = _prepare(ctx, json_output)
    seed = config.DEFAULT_SEED if seed is None else seed
    enumeration = VerificationRunner(config, ctx.obj['threads']).random_verify(n, count, seed)
    lines = [f"seed: {seed}"] + [f"{key}: {value}" for key, value in sorted(enumeration.statistics.items())]
    _finish_enumeration("verify random", enumeration, json_output, lines)


@cli.command()
@click.option('--max-m', type=int, default=3, show_default=True)
@click.option('--max-n', type=int, default=7, show_default=True)
@json_option
@click.pass_context
@guarded
def kmn(ctx, max_m, max_n, json_output):
    """Seuils Buchsbaum / CM pour M(K_{m,n})"""
    _prepare(ctx, json_output)
    table = kmn_table(max_m, max_n)
    report = Report(command="kmn", input={"max_m": max_m, "max_n": max_n}, payload=table.to_dict(orient="records"))
    _emit(report, json_output, [table.to_string(index=False)])
    if not table["agrees"].all():
        sys.exit(1)


@cli.command()
@click.argument('kind', type=click.Choice(['facets', 'json', 'dot', 'graph6']))
@click.argument('source')
@format_option
@click.option('--what', type=click.Choice(['graph', 'skeleton']), default='skeleton', help='Pour dot: G ou le 1-squelette de M(G)')
@click.option('--out', type=click.Path(dir_okay=False), help='Fichier de sortie (stdout par défaut)')
@click.pass_context
@guarded
def export(ctx, kind, source, fmt, what, out):
    """Exporte M(G) (facettes, JSON, DOT) ou G (DOT, graph6)"""
    config = _prepare(ctx, json_output=out is None)
    g = GraphLoader(config).load_graph(source, fmt).normalized()
    if kind == 'graph6':
        content = encode_graph6(g) + "\n"
    elif kind == 'dot' and what == 'graph':
        content = graph_to_dot(g)
    else:
        complex_ = matching_complex(g)
        if kind == 'facets':
            content = "\n".join(complex_.to_facet_lines()) + "\n"
        elif kind == 'json':
            content = dumps_json(complex_.to_dict()) + "\n"
        else:
            content = skeleton_to_dot(complex_)
    if out:
        ReportWriter(config).write_text(content, out, out)
    else:
        click.echo(content, nl=False)


def main():
    cli(obj={})


if __name__ == "__main__":
    main()
