"""Audit every theorem over the graph6 corpora in data/ and print a per-order summary.

    python scripts/audit_corpus.py [--max-n 8] [--workers 4]
"""

from __future__ import annotations

import argparse
from pathlib import Path

from qdham.audit import AuditConfig, run_audit
from qdham.graph6 import iter_graph6_lines

DATA = Path(__file__).resolve().parent.parent / "data"


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-n", type=int, default=8)
    ap.add_argument("--workers", type=int, default=1)
    ap.add_argument("--data", type=Path, default=DATA)
    args = ap.parse_args()
    config = AuditConfig(workers=args.workers)

    print(f"{'n':>2} {'graphs':>7}  " + "  ".join(f"T{t}:met/exc" for t in config.theorems) + "  counterexamples")
    total = 0
    for n in range(1, args.max_n + 1):
        path = args.data / f"graphs_n{n}.g6"
        with open(path) as fh:
            s = run_audit(iter_graph6_lines(fh), config)
        cells = "  ".join(
            f"{s.counts[str(t)]['ConditionMet']:>5}/{s.counts[str(t)]['ExceptionGraph']:<4}" for t in config.theorems
        )
        print(f"{n:>2} {s.scanned:>7}  {cells}  {len(s.counterexamples)}")
        for ce in s.counterexamples:
            print(f"   counterexample {ce['g6']} refutes {ce['refuted']}")
        total += len(s.counterexamples)
    print(f"total counterexamples: {total}")


if __name__ == "__main__":
    main()
