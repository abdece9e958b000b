"""Run every verification suite at a chosen scale and report timings.

    python3 scripts/run_suites.py                # acceptance scale
    python3 scripts/run_suites.py --k-max 5 --n-max 9
"""

from __future__ import annotations

import argparse
import time
from dataclasses import dataclass

from kshapes import verify


@dataclass
class SuiteConfig:
    k_max: int = 4
    n_max: int = 8
    table_degrees: tuple[int, ...] = (2, 3, 4, 5, 6)


def suites(cfg: SuiteConfig):
    small = list(range(2, min(cfg.k_max, 3) + 1))
    ks = list(range(2, cfg.k_max + 1))
    return [
        ("tables", lambda: verify.verify_tables(cfg.table_degrees)),
        ("decomposition", lambda: verify.verify_decomposition(ks, min(cfg.n_max, 7))),
        ("bijection", lambda: verify.verify_bijection(small, min(cfg.n_max, 6))),
        ("roundtrip", lambda: verify.verify_roundtrip(ks, min(cfg.n_max, 6))),
        ("pieri", lambda: verify.verify_pieri(small, min(cfg.n_max, 5))),
        ("structure", lambda: verify.verify_structure(ks, cfg.n_max)),
        ("equivalence", lambda: verify.verify_equivalence(small, min(cfg.n_max, 5))),
    ]


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--k-max", type=int, default=SuiteConfig.k_max)
    ap.add_argument("--n-max", type=int, default=SuiteConfig.n_max)
    args = ap.parse_args()
    cfg = SuiteConfig(k_max=args.k_max, n_max=args.n_max)
    failed = 0
    for name, suite in suites(cfg):
        start = time.perf_counter()
        report = suite()
        took = time.perf_counter() - start
        print(f"{report.summary()}  [{name}, {took:.1f}s]")
        for line in report.lines:
            if "weights_equal=False" in line or name == "roundtrip":
                print(f"    {line}")
        failed += not report.passed
    return 1 if failed else 0


if __name__ == "__main__":
    raise SystemExit(main())
