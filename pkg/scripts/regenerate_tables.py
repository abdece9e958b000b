"""Recompute the graded branching tables and write them as CSV.

The output has the same layout as the shipped golden file, so a diff between
the two is a full regression check:

    python3 scripts/regenerate_tables.py --max-degree 6 > /tmp/tables.csv
    diff /tmp/tables.csv src/kshapes/data/branching_tables.csv
"""

from __future__ import annotations

import argparse
import sys

from kshapes.verify import table_rows, tables_csv


def main() -> int:
    ap = argparse.ArgumentParser(description="graded branching tables as CSV")
    ap.add_argument("--min-degree", type=int, default=2)
    ap.add_argument("--max-degree", type=int, default=6)
    args = ap.parse_args()
    rows = []
    for degree in range(args.min_degree, args.max_degree + 1):
        for k in range(2, degree + 1):
            rows.extend(table_rows(k, degree))
    sys.stdout.write(tables_csv(rows))
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
