"""Spectral sufficient conditions for Hamiltonian properties, and the edge-count
conditions they reduce to.

Every checker returns a :class:`Verdict`.  Thresholds are exact rationals; the
comparison against the numerically computed spectral radius treats
``|rho - threshold| <= tol`` as equality and flags it as a boundary case.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Optional

from .families import FAMILIES, build_H, isolated_clique, pendant_clique
from .graph import Graph, basic_stats, complement, is_connected
from .isomorphism import ISO_LIMIT, is_isomorphic
from .errors import InvalidParameter, SizeLimitError
from .spectral import DEFAULT_TOL, rho_d, threshold_t6, threshold_t8

THRESHOLD_TOL = 1e-9


class Outcome(str, enum.Enum):
    MET = "ConditionMet"
    EXCEPTION = "ExceptionGraph"
    NOT_MET = "ConditionNotMet"
    INAPPLICABLE = "Inapplicable"


HAMILTONIAN = "hamiltonian"
HAMILTON_CONNECTED = "hamilton-connected"
TRACEABLE_ALL = "traceable-from-every-vertex"
TRACEABLE = "traceable"


@dataclass(frozen=True)
class Verdict:
    theorem: int
    outcome: Outcome
    n: int
    m: int
    delta: int
    rho: Optional[float] = None
    threshold: Optional[Fraction] = None
    conclusion: Optional[str] = None
    exception: Optional[str] = None
    reason: Optional[str] = None
    t: Optional[int] = None
    order: Optional[int] = None
    boundary: bool = False
    tol: float = THRESHOLD_TOL

    @property
    def margin(self) -> Optional[float]:
        if self.rho is None or self.threshold is None:
            return None
        return float(self.threshold) - self.rho

    @property
    def hypothesis_holds(self) -> bool:
        return self.margin is not None and self.margin >= -self.tol

    def to_dict(self) -> dict:
        out: dict = {"theorem": self.theorem, "outcome": self.outcome.value}
        if self.conclusion is not None:
            out["conclusion"] = self.conclusion
        if self.exception is not None:
            out["exception"] = self.exception
        if self.reason is not None:
            out["reason"] = self.reason
        out["rho"] = self.rho
        out["threshold"] = None if self.threshold is None else float(self.threshold)
        out["margin"] = self.margin
        out["n"] = self.n
        out["m"] = self.m
        out["delta"] = self.delta
        if self.order is not None:
            out["order"] = self.order
        if self.t is not None:
            out["t"] = self.t
        out["boundary"] = self.boundary
        out["tol"] = f"{self.tol:g}"
        return out


def _compare(rho: float, threshold: Fraction, tol: float) -> tuple[bool, bool, bool]:
    """(non-strict holds, strict holds, boundary)."""
    margin = float(threshold) - rho
    return margin >= -tol, margin > tol, abs(margin) <= tol


# --- exception detection ------------------------------------------------------


def detect_exception(g: Graph, which: str, limit: int = ISO_LIMIT) -> Optional[str]:
    """Identifier of the exceptional graph ``g`` is isomorphic to, if any.

    ``which`` is one of ``H``, ``NP1``, ``NP2``, ``Kpend`` (``K_{n-1}+e``) or
    ``Kiso`` (``K_{n-1}+v``).  Candidates are built at ``g``'s order and
    compared with :func:`is_isomorphic`; ones with a different edge count are
    discarded without a search.
    """
    key = which.upper()
    candidates: list[tuple[str, Graph]] = []
    if key == "H":
        if g.n % 2 == 0:
            half = g.n // 2
            for t in range(1, half // 2 + 1):
                if half * half - t * half + t * t == g.m:
                    candidates.append((f"H({t},{half - t})", build_H(t, half)))
    elif key in FAMILIES:
        for member in FAMILIES[key]:
            if member.exists_at(g.n):
                cand = member.build(g.n)
                if cand.m == g.m:
                    candidates.append((member.id, cand))
    elif key == "KPEND":
        if g.n >= 2 and g.m == comb(g.n - 1, 2) + 1:
            candidates.append((f"K{g.n - 1}+e", pendant_clique(g.n)))
    elif key == "KISO":
        if g.n >= 2 and g.m == comb(g.n - 1, 2):
            candidates.append((f"K{g.n - 1}+v", isolated_clique(g.n)))
    else:
        raise InvalidParameter(f"unknown exception family {which!r}")
    if candidates and g.n > limit:
        raise SizeLimitError(g.n, limit, "detect_exception")
    for ident, cand in candidates:
        if is_isomorphic(g, cand, limit):
            return ident
    return None


# --- edge-count conditions ----------------------------------------------------


@dataclass(frozen=True)
class EdgeCheck:
    condition: str
    applicable: bool
    holds: bool = False
    slack: Optional[int] = None
    bound: Optional[int] = None
    strict: bool = False
    t: Optional[int] = None
    reason: Optional[str] = None


def edge_condition(g: Graph, which: str) -> EdgeCheck:
    """Edge-count hypotheses: ``bipartite`` (balanced bipartite, best admissible t),
    ``hamilton-connected`` (C(n-2,2)+6), ``traceable-all`` (C(n-2,2)+4) and
    ``complement`` (C(n-1,2))."""
    key = which.lower()
    st = basic_stats(g)
    m, n, delta = st.m, st.n, st.min_degree
    if key == "bipartite":
        bp = st.bipartition
        if bp is None or not bp.balanced:
            return EdgeCheck(key, False, reason="not balanced bipartite")
        half = n // 2
        ts = range(1, min(delta, half // 2) + 1)
        if not ts:
            return EdgeCheck(key, False, reason="no admissible t")
        best = max(ts, key=lambda t: m - (half * half - t * half + t * t))
        bound = half * half - best * half + best * best
        return EdgeCheck(key, True, m >= bound, m - bound, bound, m > bound, best)
    if key in ("hamilton-connected", "traceable-all"):
        min_n, min_delta, extra = (5, 3, 6) if key == "hamilton-connected" else (4, 2, 4)
        if n < min_n or delta < min_delta or not st.connected:
            return EdgeCheck(key, False, reason=f"needs connected, n >= {min_n}, min degree >= {min_delta}")
        bound = comb(n - 2, 2) + extra
        return EdgeCheck(key, True, m >= bound, m - bound, bound, m > bound)
    if key == "complement":
        bound = comb(n - 1, 2)
        return EdgeCheck(key, True, m >= bound, m - bound, bound, m > bound)
    raise InvalidParameter(f"unknown edge condition {which!r}")


# --- spectral conditions ------------------------------------------------------


def check_theorem3(g: Graph, tol: float = THRESHOLD_TOL, eig_tol: float = DEFAULT_TOL) -> Verdict:
    """Balanced bipartite ``G[X,Y]`` with ``|X| = |Y| = n``: Hamiltonian unless ``H_{t,n-t}``.

    Here ``n`` is half the order.  Every admissible ``t`` (``1 <= t <= min(delta, n/2)``)
    is tried; the verdict records the first ``t`` that satisfies the inequality, or
    the one with the largest margin when none does.
    """
    st = basic_stats(g)
    half = g.n // 2
    base = dict(theorem=3, n=half, m=st.m, delta=st.min_degree, order=g.n, tol=tol)
    if not st.connected:
        return Verdict(outcome=Outcome.INAPPLICABLE, reason="disconnected", **base)
    if st.bipartition is None or not st.bipartition.balanced:
        return Verdict(outcome=Outcome.INAPPLICABLE, reason="not balanced bipartite", **base)
    ts = list(range(1, min(st.min_degree, half // 2) + 1))
    if not ts:
        return Verdict(outcome=Outcome.INAPPLICABLE, reason="no admissible t", **base)
    rho = rho_d(g, eig_tol)

    def threshold(t: int) -> Fraction:
        return Fraction(st.m - half * half + (t + 6) * half - (t * t + 4))

    met = [t for t in ts if _compare(rho, threshold(t), tol)[0]]
    if not met:
        best = max(ts, key=lambda t: threshold(t))
        return Verdict(outcome=Outcome.NOT_MET, rho=rho, threshold=threshold(best), t=best,
                       boundary=_compare(rho, threshold(best), tol)[2], **base)
    h_id = detect_exception(g, "H")
    for t in met:
        if h_id == f"H({t},{half - t})":
            return Verdict(outcome=Outcome.EXCEPTION, exception=h_id, rho=rho,
                           threshold=threshold(t), t=t,
                           boundary=_compare(rho, threshold(t), tol)[2], **base)
    t = met[0]
    return Verdict(outcome=Outcome.MET, conclusion=HAMILTONIAN, rho=rho, threshold=threshold(t),
                   t=t, boundary=_compare(rho, threshold(t), tol)[2], **base)


def _check_degree_theorem(
    g: Graph, theorem: int, min_n: int, min_delta: int, threshold: Fraction, conclusion: str,
    tol: float, eig_tol: float,
) -> Verdict:
    st = basic_stats(g)
    base = dict(theorem=theorem, n=g.n, m=st.m, delta=st.min_degree, tol=tol)
    if not st.connected:
        return Verdict(outcome=Outcome.INAPPLICABLE, reason="disconnected", **base)
    if g.n < min_n:
        return Verdict(outcome=Outcome.INAPPLICABLE, reason=f"n < {min_n}", **base)
    if st.min_degree < min_delta:
        return Verdict(outcome=Outcome.INAPPLICABLE, reason=f"min degree < {min_delta}", **base)
    rho = rho_d(g, eig_tol)
    holds, _, boundary = _compare(rho, threshold, tol)
    outcome = Outcome.MET if holds else Outcome.NOT_MET
    return Verdict(outcome=outcome, conclusion=conclusion if holds else None, rho=rho,
                   threshold=threshold, boundary=boundary, **base)


def check_theorem6(g: Graph, tol: float = THRESHOLD_TOL, eig_tol: float = DEFAULT_TOL) -> Verdict:
    """Connected, ``n >= 5``, min degree >= 3 and ``rho <= (2n^2+6n-36)/n``: Hamilton-connected."""
    thr = threshold_t6(g.n)
    return _check_degree_theorem(g, 6, 5, 3, thr, HAMILTON_CONNECTED, tol, eig_tol)


def check_theorem8(g: Graph, tol: float = THRESHOLD_TOL, eig_tol: float = DEFAULT_TOL) -> Verdict:
    """Connected, ``n >= 4``, min degree >= 2 and ``rho <= (2n^2+6n-28)/n``: traceable from every vertex."""
    thr = threshold_t8(g.n)
    return _check_degree_theorem(g, 8, 4, 2, thr, TRACEABLE_ALL, tol, eig_tol)


def threshold_t10(n: int, m: int) -> Fraction:
    return Fraction(3 * n * n - n + 10 * m - 2, 2 * n)


def check_theorem10(g: Graph, tol: float = THRESHOLD_TOL, eig_tol: float = DEFAULT_TOL) -> Verdict:
    """Condition on the complement's spectral radius.

    Non-strict: traceable unless ``g = K_{n-1}+v``.  Strict: Hamiltonian unless
    ``g = K_{n-1}+e``; in that case the verdict is ``ExceptionGraph`` and the
    surviving conclusion is ``traceable``.
    """
    st = basic_stats(g)
    base = dict(theorem=10, n=g.n, m=st.m, delta=st.min_degree, tol=tol)
    gc = complement(g)
    if not is_connected(gc):
        return Verdict(outcome=Outcome.INAPPLICABLE, reason="complement-disconnected", **base)
    rho = rho_d(gc, eig_tol)
    thr = threshold_t10(g.n, st.m)
    holds, strict, boundary = _compare(rho, thr, tol)
    base.update(rho=rho, threshold=thr, boundary=boundary)
    if not holds:
        return Verdict(outcome=Outcome.NOT_MET, **base)
    iso = detect_exception(g, "Kiso")
    if iso:
        return Verdict(outcome=Outcome.EXCEPTION, exception=iso, **base)
    if strict:
        pend = detect_exception(g, "Kpend")
        if pend:
            return Verdict(outcome=Outcome.EXCEPTION, exception=pend, conclusion=TRACEABLE, **base)
        return Verdict(outcome=Outcome.MET, conclusion=HAMILTONIAN, **base)
    return Verdict(outcome=Outcome.MET, conclusion=TRACEABLE, **base)


CHECKERS = {3: check_theorem3, 6: check_theorem6, 8: check_theorem8, 10: check_theorem10}


def check(theorem: int, g: Graph, tol: float = THRESHOLD_TOL, eig_tol: float = DEFAULT_TOL) -> Verdict:
    try:
        fn = CHECKERS[theorem]
    except KeyError:
        raise InvalidParameter(f"unknown theorem {theorem!r}; choose from {sorted(CHECKERS)}") from None
    return fn(g, tol, eig_tol)
