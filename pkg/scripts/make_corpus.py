"""Write graph6 corpora to data/.

    python scripts/make_corpus.py [--max-n 8] [--max-bipartite-n 10] [--out data]

Produces ``graphs_n{k}.g6`` (all graphs, k <= max-n) and
``bipartite_connected_n{k}.g6`` (connected bipartite graphs, k <= max-bipartite-n).
"""

from __future__ import annotations

import argparse
import time
from pathlib import Path

from qdham.corpus import all_graphs, connected_bipartite_graphs
from qdham.graph6 import write_graph6_file


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-n", type=int, default=8)
    ap.add_argument("--max-bipartite-n", type=int, default=10)
    ap.add_argument("--out", type=Path, default=Path(__file__).resolve().parent.parent / "data")
    args = ap.parse_args()
    args.out.mkdir(parents=True, exist_ok=True)

    for n in range(1, args.max_n + 1):
        t0 = time.perf_counter()
        graphs = all_graphs(n)
        write_graph6_file(args.out / f"graphs_n{n}.g6", graphs)
        print(f"graphs n={n}: {len(graphs)} ({time.perf_counter() - t0:.1f}s)")
    for n in range(1, args.max_bipartite_n + 1):
        t0 = time.perf_counter()
        graphs = connected_bipartite_graphs(n)
        write_graph6_file(args.out / f"bipartite_connected_n{n}.g6", graphs)
        print(f"connected bipartite n={n}: {len(graphs)} ({time.perf_counter() - t0:.1f}s)")


if __name__ == "__main__":
    main()
