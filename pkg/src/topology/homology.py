"""Homologie simpliciale réduite exacte et critères de Cohen-Macaulay / Buchsbaum.

Coefficients rationnels: les rangs sont calculés par élimination entière
exacte sur des tableaux numpy de type object (entiers Python, sans
débordement). Un calcul de rang sur GF(2) sert de contrôle croisé pour les
liens de dimension <= 1.
"""

import logging
from dataclasses import dataclass
from functools import reduce
from math import gcd
from typing import Dict, List, Tuple

import numpy as np

from src.config import Config
from src.errors import CapabilityError, ConsistencyError
from src.topology.complex import Face, SimplicialComplex, euler_characteristic, is_pure, link

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class BoundaryMatrix:
    rows: Tuple[Face, ...]
    cols: Tuple[Face, ...]
    matrix: np.ndarray


def boundary_matrix(c: SimplicialComplex, k: int) -> BoundaryMatrix:
    """Bord augmenté ∂_k: k-faces -> (k-1)-faces (∂_0 envoie chaque sommet sur ∅)"""
    rows = tuple(c.faces_of_dim(k - 1))
    cols = tuple(c.faces_of_dim(k))
    position = {face: i for i, face in enumerate(rows)}
    matrix = np.zeros((len(rows), len(cols)), dtype=object)
    for j, face in enumerate(cols):
        for i in range(len(face)):
            matrix[position[face[:i] + face[i + 1:]], j] = (-1) ** i
    return BoundaryMatrix(rows, cols, matrix)


def exact_rank(matrix: np.ndarray) -> int:
    """Rang sur Q par élimination entière (lignes normalisées par leur pgcd)"""
    a = np.array(matrix, dtype=object)
    if a.size == 0:
        return 0
    rows, cols = a.shape
    rank = 0
    for col in range(cols):
        pivots = [r for r in range(rank, rows) if a[r, col] != 0]
        if not pivots:
            continue
        if pivots[0] != rank:
            a[[rank, pivots[0]]] = a[[pivots[0], rank]]
        pivot_row = a[rank]
        for r in range(rank + 1, rows):
            if a[r, col] == 0:
                continue
            combined = pivot_row[col] * a[r] - a[r, col] * pivot_row
            divisor = reduce(gcd, (int(x) for x in combined), 0)
            a[r] = combined // divisor if divisor > 1 else combined
        rank += 1
        if rank == rows:
            break
    return rank


def gf2_rank(matrix: np.ndarray) -> int:
    a = (np.array(matrix, dtype=np.int64) % 2).astype(np.uint8)
    if a.size == 0:
        return 0
    rows, cols = a.shape
    rank = 0
    for col in range(cols):
        candidates = np.nonzero(a[rank:, col])[0]
        if candidates.size == 0:
            continue
        pivot = rank + int(candidates[0])
        if pivot != rank:
            a[[rank, pivot]] = a[[pivot, rank]]
        others = np.nonzero(a[:, col])[0]
        others = others[others != rank]
        a[others] ^= a[rank]
        rank += 1
        if rank == rows:
            break
    return rank


def _betti_from_ranks(c: SimplicialComplex, ranks: Dict[int, int]) -> Dict[int, int]:
    betti = {}
    for i in range(-1, c.dimension + 1):
        count = len(c.faces_of_dim(i))
        betti[i] = count - ranks.get(i, 0) - ranks.get(i + 1, 0)
    return betti


def reduced_betti_with_empty(c: SimplicialComplex, cross_check: bool = False) -> Dict[int, int]:
    """β̃_i pour i = -1..dim (β̃_{-1} = 1 seulement pour le complexe {∅})"""
    if len(c.faces) > Config.MAX_HOMOLOGY_FACES:
        raise CapabilityError(
            f"Homologie limitée à {Config.MAX_HOMOLOGY_FACES} faces ({len(c.faces)} ici)"
        )
    matrices = {k: boundary_matrix(c, k).matrix for k in range(0, c.dimension + 1)}
    ranks = {k: exact_rank(m) for k, m in matrices.items()}
    betti = _betti_from_ranks(c, ranks)
    if cross_check and c.dimension <= 1:
        mod2 = _betti_from_ranks(c, {k: gf2_rank(m) for k, m in matrices.items()})
        if mod2 != betti:
            raise ConsistencyError(f"Rangs entiers {betti} et GF(2) {mod2} divergents")
    return betti


def reduced_betti_numbers(c: SimplicialComplex) -> List[int]:
    """β̃_0..β̃_dim sur Q"""
    betti = reduced_betti_with_empty(c)
    return [betti[i] for i in range(0, c.dimension + 1)]


def check_boundary_squared_zero(c: SimplicialComplex) -> bool:
    for k in range(1, c.dimension + 1):
        outer = boundary_matrix(c, k - 1).matrix
        inner = boundary_matrix(c, k).matrix
        if outer.size and inner.size and np.any(outer.dot(inner) != 0):
            return False
    return True


def euler_check(c: SimplicialComplex) -> bool:
    """χ(f-vecteur) = 1 + Σ (-1)^i β̃_i"""
    betti = reduced_betti_numbers(c)
    return euler_characteristic(c) == 1 + sum((-1) ** i * b for i, b in enumerate(betti))


def _links_vanish(c: SimplicialComplex, include_empty_face: bool) -> bool:
    dim = c.dimension
    for face in sorted(c.faces, key=lambda f: (len(f), f)):
        if not face and not include_empty_face:
            continue
        bound = dim - len(face)
        if bound <= -1:
            continue
        betti = reduced_betti_with_empty(link(c, face), cross_check=True)
        if any(betti.get(i, 0) != 0 for i in range(-1, bound)):
            logger.debug(f"Homologie non triviale dans le lien de {c.label_face(face)}: {betti}")
            return False
    return True


def is_cm_homological(c: SimplicialComplex) -> bool:
    return _links_vanish(c, include_empty_face=True)


def is_buchsbaum_homological(c: SimplicialComplex) -> bool:
    return is_pure(c) and _links_vanish(c, include_empty_face=False)


def homology_summary(c: SimplicialComplex) -> Dict[str, object]:
    """Charge utile JSON {betti, euler}"""
    return {"betti": reduced_betti_numbers(c), "euler": euler_characteristic(c)}
