import logging
import sys
from pathlib import Path
from typing import Dict, List, Tuple

from src.config import Config
from src.errors import GraphInputError, GraphParseError
from src.graphs.graph import Graph
from src.graphs.graph6 import HEADER, MAX_CHAR, MIN_CHAR, decode_graph6_lines

logger = logging.getLogger(__name__)

class GraphLoader:
    def __init__(self, config: Config):
        self.config = config
        self.supported_formats = ['auto', 'edgelist', 'graph6']

    def detect_format(self, text: str) -> str:
        """Détecte le format: graph6 si chaque ligne est un seul jeton imprimable 63..126"""
        lines = [line.strip() for line in text.splitlines()]
        lines = [line for line in lines if line and not line.startswith('#')]
        if not lines:
            logger.info("Format détecté: liste d'arêtes (entrée vide)")
            return 'edgelist'

        def looks_like_graph6(line: str) -> bool:
            if line.startswith(HEADER):
                line = line[len(HEADER):]
            return bool(line) and all(MIN_CHAR <= ord(c) <= MAX_CHAR for c in line)

        if all(looks_like_graph6(line) for line in lines):
            logger.info("Format détecté: graph6")
            return 'graph6'
        logger.info("Format détecté: liste d'arêtes")
        return 'edgelist'

    def parse_edge_list(self, text: str) -> Graph:
        """Lit une liste d'arêtes: deux jetons par ligne, commentaires '#'"""
        index: Dict[str, int] = {}
        edges: List[Tuple[int, int]] = []
        seen = set()

        for number, raw_line in enumerate(text.splitlines(), start=1):
            content = raw_line.split('#', 1)[0]
            tokens = self._tokenize(content)
            if not tokens:
                continue
            if len(tokens) != 2:
                column = tokens[2][1] if len(tokens) > 2 else len(content.rstrip()) + 1
                raise GraphParseError(
                    f"2 sommets attendus par ligne, {len(tokens)} trouvé(s)", number, column
                )
            (a, _), (b, column_b) = tokens
            if a == b:
                raise GraphParseError(f"boucle sur le sommet {a!r}", number, column_b)
            for label in (a, b):
                if label not in index:
                    index[label] = len(index)
            u, v = sorted((index[a], index[b]))
            if (u, v) in seen:
                logger.warning(f"⚠️ Arête dupliquée ignorée ligne {number}: {a}-{b}")
                continue
            seen.add((u, v))
            edges.append((u, v))

        labels = tuple(sorted(index, key=index.get))
        try:
            return Graph(len(labels), tuple(edges), labels=labels, raw=True)
        except GraphInputError as e:
            logger.error(f"❌ Graphe invalide: {e}")
            raise

    @staticmethod
    def _tokenize(content: str) -> List[Tuple[str, int]]:
        tokens = []
        column = 0
        for token in content.split():
            column = content.index(token, column)
            tokens.append((token, column + 1))
            column += len(token)
        return tokens

    def _decode(self, data: bytes, source: str) -> str:
        try:
            return data.decode('utf-8')
        except UnicodeDecodeError as e:
            head = data[:e.start]
            line = head.count(b'\n') + 1
            column = e.start - (head.rfind(b'\n') + 1) + 1
            logger.error(f"❌ Encodage invalide dans {source}: octet {data[e.start]:#04x}")
            raise GraphParseError(f"octet non UTF-8 {data[e.start]:#04x}", line, column) from e

    def read_text(self, source: str) -> str:
        if source == '-':
            stream = getattr(sys.stdin, 'buffer', None)
            if stream is None:
                return sys.stdin.read()
            return self._decode(stream.read(), source)
        path = Path(source)
        if not path.is_file():
            logger.error(f"❌ Fichier introuvable: {source}")
            raise GraphInputError(f"Fichier introuvable: {source}")
        return self._decode(path.read_bytes(), source)

    def load_graphs(self, source: str, fmt: str = 'auto') -> List[Graph]:
        """Charge un ou plusieurs graphes depuis un fichier ou stdin ('-')"""
        if fmt not in self.supported_formats:
            raise GraphInputError(f"Format inconnu: {fmt}")
        text = self.read_text(source)
        if fmt == 'auto':
            fmt = self.detect_format(text)

        if fmt == 'graph6':
            body = '\n'.join('' if line.lstrip().startswith('#') else line for line in text.splitlines())
            graphs = decode_graph6_lines(body)
        else:
            graphs = [self.parse_edge_list(text)]

        if not graphs:
            raise GraphInputError(f"Aucun graphe trouvé dans {source}")
        logger.info(f"✅ {len(graphs)} graphe(s) chargé(s) depuis {source} ({fmt})")
        return graphs

    def load_graph(self, source: str, fmt: str = 'auto') -> Graph:
        return self.load_graphs(source, fmt)[0]
