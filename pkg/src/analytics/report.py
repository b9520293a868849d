import logging
from typing import Any, Dict, List, Literal, Optional

import pandas as pd
from pydantic import BaseModel, ConfigDict, Field

from src.config import Config

logger = logging.getLogger(__name__)

# Valeurs de référence du balayage de C7 par nombre de cordes k = 0..14
EXPECTED_C7_ISO = (1, 2, 10, 30, 58, 77, 73, 56, 37, 20, 10, 5, 2, 1, 1)
EXPECTED_C7_BUCHSBAUM = (1, 1, 3, 7, 11, 18, 19, 20, 18, 12, 7, 4, 2, 1, 1)


class Discrepancy(BaseModel):
    """Contre-exemple: deux calculs qui ne concordent pas"""

    model_config = ConfigDict(frozen=True)

    check: str
    detail: str
    graph6: str
    edge_list: str
    counterexample_path: Optional[str] = None


class EnumerationRow(BaseModel):
    model_config = ConfigDict(frozen=True)

    k: int
    iso_classes: int
    buchsbaum_classes: int


class EnumerationReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    kind: Literal["scan_c7", "exhaustive", "random"]
    parameters: Dict[str, Any] = Field(default_factory=dict)
    seed: Optional[int] = None
    rows: List[EnumerationRow] = Field(default_factory=list)
    totals: Dict[str, int] = Field(default_factory=dict)
    statistics: Dict[str, int] = Field(default_factory=dict)
    notable: Dict[str, List[str]] = Field(default_factory=dict)
    discrepancies: List[Discrepancy] = Field(default_factory=list)
    runtime_seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.discrepancies

    def to_frame(self) -> pd.DataFrame:
        """Une ligne par nombre de cordes k"""
        return pd.DataFrame([row.model_dump() for row in self.rows])

    def table_frame(self) -> pd.DataFrame:
        """Forme du tableau publié: deux lignes, colonnes k = 0..14 puis total"""
        frame = self.to_frame().set_index("k")[["iso_classes", "buchsbaum_classes"]].T
        frame.columns = [str(k) for k in frame.columns]
        frame["total"] = frame.sum(axis=1)
        return frame

    def deterministic_dump(self) -> Dict[str, Any]:
        """Contenu sans les durées (identique d'une exécution à l'autre)"""
        return self.model_dump(mode="json", exclude={"runtime_seconds"})


def summarize_rows(rows: List[EnumerationRow]) -> Dict[str, int]:
    return {
        "iso_classes": sum(r.iso_classes for r in rows),
        "buchsbaum_classes": sum(r.buchsbaum_classes for r in rows),
    }


def compare_with_reference(rows: List[EnumerationRow]) -> List[str]:
    """Écarts entre le balayage et les valeurs de référence"""
    problems = []
    for row in rows:
        expected = (EXPECTED_C7_ISO[row.k], EXPECTED_C7_BUCHSBAUM[row.k])
        if (row.iso_classes, row.buchsbaum_classes) != expected:
            problems.append(
                f"k={row.k}: ({row.iso_classes}, {row.buchsbaum_classes}) au lieu de {expected}"
            )
    return problems


class Report(BaseModel):
    """Rapport JSON de la CLI"""

    model_config = ConfigDict(frozen=True)

    schema_version: str = Config.SCHEMA_VERSION
    command: str
    input: Dict[str, Any] = Field(default_factory=dict)
    payload: Any = None
    timings: Dict[str, float] = Field(default_factory=dict)

    def deterministic_dump(self) -> Dict[str, Any]:
        return self.model_dump(mode="json", exclude={"timings"})


def log_enumeration_summary(report: EnumerationReport):
    """Affiche un résumé du rapport dans les logs"""
    logger.info(f"📊 Rapport {report.kind}: {report.totals or report.statistics}")
    if report.rows:
        for row in report.rows:
            logger.info(f"  k={row.k:2d}: {row.iso_classes:3d} classes, {row.buchsbaum_classes:3d} Buchsbaum")
    if report.ok:
        logger.info("✅ Aucune divergence")
    else:
        logger.error(f"❌ {len(report.discrepancies)} divergence(s)")
        for d in report.discrepancies:
            logger.error(f"  - {d.check}: {d.detail} ({d.graph6})")
