# Module de rapports: tableaux d'énumération et rapports JSON de la CLI
from .report import (
    EXPECTED_C7_BUCHSBAUM,
    EXPECTED_C7_ISO,
    Discrepancy,
    EnumerationReport,
    EnumerationRow,
    Report,
    compare_with_reference,
    log_enumeration_summary,
)

__all__ = [
    'EXPECTED_C7_BUCHSBAUM',
    'EXPECTED_C7_ISO',
    'Discrepancy',
    'EnumerationReport',
    'EnumerationRow',
    'Report',
    'compare_with_reference',
    'log_enumeration_summary',
]
