"""Per-graph JSON reports with fixed field order and six-decimal floats."""

from __future__ import annotations

import json
import math
from fractions import Fraction
from typing import Any, Iterable, Optional

import numpy as np

from .graph import Graph, basic_stats
from .graph6 import emit_graph6
from .metric import all_pairs_distances, is_transmission_regular, qd_matrix
from .spectral import DEFAULT_TOL, lower_bound_bipartite, lower_bound_sigma, spectral_radius
from .theorems import THRESHOLD_TOL, check


def dumps(obj: Any, indent: Optional[int] = None, _level: int = 0) -> str:
    """JSON text with every float printed to six decimals (round-half-even on the binary value)."""
    pad = "" if indent is None else "\n" + " " * (indent * (_level + 1))
    end = "" if indent is None else "\n" + " " * (indent * _level)
    sep = ", " if indent is None else ","
    if isinstance(obj, bool) or obj is None or isinstance(obj, str):
        return json.dumps(obj, ensure_ascii=False)
    if isinstance(obj, (int, np.integer)):
        return str(int(obj))
    if isinstance(obj, (float, np.floating, Fraction)):
        x = float(obj)
        if not math.isfinite(x):
            return json.dumps(str(x))
        s = f"{x:.6f}"
        return "0.000000" if s == "-0.000000" else s
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [f"{pad}{json.dumps(str(k))}: {dumps(v, indent, _level + 1)}" for k, v in obj.items()]
        return "{" + sep.join(items) + end + "}"
    if isinstance(obj, (list, tuple, np.ndarray)):
        if len(obj) == 0:
            return "[]"
        items = [f"{pad}{dumps(v, indent, _level + 1)}" for v in obj]
        return "[" + sep.join(items) + end + "]"
    raise TypeError(f"cannot serialise {type(obj).__name__}")


def build_report(
    g: Graph,
    source: dict,
    theorems: Iterable[int] = (),
    oracle: Optional[dict] = None,
    tol: float = DEFAULT_TOL,
    include_matrices: bool = False,
) -> dict:
    st = basic_stats(g)
    d = all_pairs_distances(g)
    q = qd_matrix(d)
    est = spectral_radius(q, tol)
    bounds: dict = {"sigma": lower_bound_sigma(d)}
    if st.bipartite and g.n >= 2:
        bounds["bipartite"] = lower_bound_bipartite(g.n)
    report = {
        "input": source,
        "g6": emit_graph6(g),
        "n": g.n,
        "m": st.m,
        "delta": st.min_degree,
        "connected": st.connected,
        "bipartite": st.bipartite,
        "sigma": d.sigma,
        "rho_d": est.rho,
        "residual": f"{est.residual:.3e}",
        "iterations": est.iterations,
        "tol": f"{tol:g}",
        "bounds": bounds,
        "transmission_regular": is_transmission_regular(d),
    }
    if include_matrices:
        report["distances"] = d.dist.tolist()
        report["qd"] = q.q.tolist()
    if theorems:
        report["verdicts"] = [check(t, g, THRESHOLD_TOL, tol).to_dict() for t in theorems]
    if oracle:
        report["oracle"] = oracle
    return report
