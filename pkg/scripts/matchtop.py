#!/usr/bin/env python3
"""
Lanceur de la CLI matchtop depuis un checkout du dépôt
Usage: python scripts/matchtop.py [--verbose] [--threads N] COMMANDE [options]

Exemples:
  python scripts/matchtop.py analyze graphe.txt --json
  python scripts/matchtop.py scan-c7 --out output/table_c7.csv
  python scripts/matchtop.py verify exhaustive --max-n 6
  python scripts/matchtop.py verify random --n 9 --count 200 --seed 7
"""

import sys
from pathlib import Path

# Ajouter la racine du dépôt au path
sys.path.append(str(Path(__file__).parent.parent))

from src.cli import main

if __name__ == "__main__":
    main()
