"""Soundness audit: run the theorem checkers over a corpus and confirm every
positive verdict with the exact Hamiltonicity oracle."""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Optional

from .errors import QDError
from .graph import Graph
from .graph6 import parse_graph6
from .oracle import (
    has_hamilton_cycle,
    has_hamilton_path,
    is_hamilton_connected,
    is_traceable_from_every_vertex,
)
from .spectral import DEFAULT_TOL
from .theorems import (
    HAMILTON_CONNECTED,
    HAMILTONIAN,
    THRESHOLD_TOL,
    TRACEABLE,
    TRACEABLE_ALL,
    Outcome,
    Verdict,
    check,
)

ORACLE_FOR = {
    HAMILTONIAN: has_hamilton_cycle,
    HAMILTON_CONNECTED: is_hamilton_connected,
    TRACEABLE_ALL: is_traceable_from_every_vertex,
    TRACEABLE: has_hamilton_path,
}


@dataclass(frozen=True)
class AuditConfig:
    theorems: tuple[int, ...] = (3, 6, 8, 10)
    limit_n: int = 16
    tol: float = THRESHOLD_TOL
    eig_tol: float = DEFAULT_TOL
    workers: int = 1


@dataclass
class AuditSummary:
    theorems: tuple[int, ...]
    scanned: int = 0
    skipped: dict = field(default_factory=dict)
    counts: dict = field(default_factory=dict)
    counterexamples: list = field(default_factory=list)
    wall_time: float = 0.0
    partial: bool = False
    error: Optional[str] = None

    def __post_init__(self):
        for t in self.theorems:
            self.counts.setdefault(str(t), {o.value: 0 for o in Outcome})

    def to_dict(self) -> dict:
        return {
            "scanned": self.scanned,
            "skipped": dict(sorted(self.skipped.items())),
            "counts": self.counts,
            "counterexamples": self.counterexamples,
            "partial": self.partial,
            "error": self.error,
        }


def confirm(verdict: Verdict, g: Graph) -> Optional[str]:
    """Property the oracle refutes for a positive verdict, else ``None``."""
    if verdict.conclusion is None:
        return None
    if not ORACLE_FOR[verdict.conclusion](g):
        return verdict.conclusion
    return None


def audit_graph(g: Graph, config: AuditConfig) -> list[tuple[Verdict, Optional[str]]]:
    out = []
    for t in config.theorems:
        v = check(t, g, config.tol, config.eig_tol)
        out.append((v, confirm(v, g)))
    return out


def _audit_line(args) -> tuple:
    lineno, line, config = args
    try:
        g = parse_graph6(line)
    except QDError as exc:
        return lineno, line, "parse-error", str(exc)
    if g.n > config.limit_n:
        return lineno, line, "over-limit-n", None
    return lineno, line, None, audit_graph(g, config)


def run_audit(lines: Iterable[tuple[int, str]], config: AuditConfig = AuditConfig()) -> AuditSummary:
    """Audit ``(line_number, graph6)`` pairs; results are merged in input order."""
    summary = AuditSummary(config.theorems)
    t0 = time.perf_counter()
    jobs = ((lineno, line, config) for lineno, line in lines)
    pool = ProcessPoolExecutor(config.workers) if config.workers > 1 else None
    results = pool.map(_audit_line, jobs, chunksize=64) if pool else map(_audit_line, jobs)
    try:
        for lineno, line, skip, payload in results:
            if skip:
                summary.skipped[skip] = summary.skipped.get(skip, 0) + 1
                continue
            summary.scanned += 1
            for verdict, refuted in payload:
                summary.counts[str(verdict.theorem)][verdict.outcome.value] += 1
                if refuted:
                    summary.counterexamples.append(
                        {"line": lineno, "g6": line, "refuted": refuted, "verdict": verdict.to_dict()}
                    )
    except OSError as exc:
        summary.partial = True
        summary.error = str(exc)
    finally:
        if pool:
            pool.shutdown()
        summary.wall_time = time.perf_counter() - t0
    return summary
