"""Hiérarchie d'exceptions de matchtop.

Chaque exception porte le code de sortie que la CLI renvoie.
"""

from typing import Optional


class MatchtopError(Exception):
    """Erreur de base du projet"""

    exit_code = 1


class GraphInputError(MatchtopError, ValueError):
    """Entrée invalide: arête absente, face absente, graphe vide..."""

    exit_code = 2


class GraphParseError(GraphInputError):
    """Erreur de lecture d'un fichier de graphe, avec position"""

    def __init__(self, message: str, line: int, column: int = 1):
        self.line = line
        self.column = column
        self.reason = message
        super().__init__(f"ligne {line}, colonne {column}: {message}")


class CapabilityError(MatchtopError):
    """Entrée hors des limites supportées (taille, plage de paramètres)"""

    exit_code = 3


class PreconditionError(MatchtopError):
    """Précondition d'une opération non satisfaite"""

    exit_code = 2

    def __init__(self, message: str, actual_dimension: Optional[int] = None):
        self.actual_dimension = actual_dimension
        super().__init__(message)


class ConsistencyError(MatchtopError, AssertionError):
    """Deux calculs indépendants ne concordent pas"""

    exit_code = 1
