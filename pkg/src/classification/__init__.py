# Module de classification: familles de graphes et verdicts Buchsbaum / CM
from .families import FamilyPattern, FamilyWitness, PATTERNS, recognize_family
from .classifier import ClassificationResult, classify, classify_1d, classify_2d

__all__ = [
    'FamilyPattern', 'FamilyWitness', 'PATTERNS', 'recognize_family',
    'ClassificationResult', 'classify', 'classify_1d', 'classify_2d',
]
