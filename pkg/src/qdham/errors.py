"""Exception hierarchy shared by every module."""

from __future__ import annotations


class QDError(Exception):
    """Base class for all package errors."""


class InvalidParameter(QDError, ValueError):
    pass


class ParseError(QDError, ValueError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (at offset {offset})")
        self.offset = offset


class DisconnectedError(QDError):
    def __init__(self, u: int, v: int):
        super().__init__(f"graph is disconnected: vertex {v} unreachable from {u}")
        self.pair = (u, v)


class SizeLimitError(QDError):
    def __init__(self, n: int, limit: int, what: str = "operation"):
        super().__init__(f"{what} supports at most {limit} vertices, got {n}")
        self.n = n
        self.limit = limit


class NonEquitableError(QDError):
    def __init__(self, i: int, j: int, u: int, w: int, su: int, sw: int):
        super().__init__(
            f"partition not equitable for classes ({i}, {j}): "
            f"vertex {u} has distance sum {su}, vertex {w} has {sw}"
        )
        self.classes = (i, j)
        self.witnesses = (u, w)


class NoConvergence(QDError):
    def __init__(self, best: float, residual: float, iterations: int):
        super().__init__(
            f"power iteration did not converge in {iterations} iterations "
            f"(best estimate {best!r}, residual {residual:.3e})"
        )
        self.best = best
        self.residual = residual
        self.iterations = iterations


class BracketError(QDError):
    def __init__(self, signs: dict):
        super().__init__(f"cannot bracket largest cubic root; signs: {signs}")
        self.signs = signs
