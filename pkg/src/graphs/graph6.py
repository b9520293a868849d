"""Codec graph6 (triangle supérieur, 6 bits par caractère, décalage 63)"""

import logging
from typing import List

from src.errors import GraphParseError
from src.graphs.graph import Graph

logger = logging.getLogger(__name__)

HEADER = ">>graph6<<"
MIN_CHAR, MAX_CHAR = 63, 126


def _encode_size(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    # forme longue: '~' puis 18 bits
    return "~" + "".join(chr(((n >> shift) & 0x3F) + 63) for shift in (12, 6, 0))


def encode_graph6(g: Graph) -> str:
    # ordre des bits: (0,1), (0,2), (1,2), (0,3), ...
    bit_stream = "".join(
        "1" if g.has_edge(i, j) else "0" for j in range(1, g.n) for i in range(j)
    )
    if len(bit_stream) % 6:
        bit_stream += "0" * (6 - len(bit_stream) % 6)
    body = "".join(
        chr(int(bit_stream[k:k + 6], 2) + 63) for k in range(0, len(bit_stream), 6)
    )
    return _encode_size(g.n) + body


def decode_graph6(text: str, line: int = 1) -> Graph:
    """Décode une ligne graph6 (l'en-tête >>graph6<< est toléré)"""
    data = text.strip()
    offset = 1
    if data.startswith(HEADER):
        data = data[len(HEADER):]
        offset += len(HEADER)
    if not data:
        raise GraphParseError("chaîne graph6 vide", line, offset)
    for position, char in enumerate(data):
        if not MIN_CHAR <= ord(char) <= MAX_CHAR:
            raise GraphParseError(f"caractère graph6 invalide {char!r}", line, offset + position)

    if data[0] == "~":
        if len(data) < 4 or data[1] == "~":
            raise GraphParseError("taille graph6 longue non supportée", line, offset)
        n = 0
        for char in data[1:4]:
            n = (n << 6) | (ord(char) - 63)
        body = data[4:]
        body_offset = offset + 4
    else:
        n = ord(data[0]) - 63
        body = data[1:]
        body_offset = offset + 1

    required_bits = n * (n - 1) // 2
    expected_chars = (required_bits + 5) // 6
    if len(body) != expected_chars:
        raise GraphParseError(
            f"{len(body)} caractère(s) de données pour n={n}, {expected_chars} attendu(s)",
            line,
            body_offset + min(len(body), expected_chars),
        )

    bit_stream = "".join(format(ord(char) - 63, "06b") for char in body)
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bit_stream[k] == "1":
                edges.append((i, j))
            k += 1
    return Graph(n, tuple(edges), raw=True)


def decode_graph6_lines(text: str) -> List[Graph]:
    graphs = []
    for number, raw_line in enumerate(text.splitlines(), start=1):
        if raw_line.strip():
            graphs.append(decode_graph6(raw_line, line=number))
    logger.debug(f"{len(graphs)} graphe(s) graph6 décodé(s)")
    return graphs
