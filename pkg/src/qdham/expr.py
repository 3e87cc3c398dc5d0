"""A tiny expression language for naming graphs, e.g. ``join(kn(3), bip(2,5))``.

Grammar::

    expr := func "(" arg ("," arg)* ")"
    arg  := integer | expr

``kn e star path cycle`` take one integer, ``bip h`` take two, ``rep`` takes an
integer and an expression, ``join union`` take two expressions and ``comp``
takes one.  Whitespace is ignored.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Union

from . import graph as G
from .errors import InvalidParameter, ParseError
from .families import build_H
from .graph import Graph

INT, EXPR = "int", "expr"

SIGNATURES: dict[str, tuple[str, ...]] = {
    "kn": (INT,),
    "e": (INT,),
    "star": (INT,),
    "path": (INT,),
    "cycle": (INT,),
    "bip": (INT, INT),
    "h": (INT, INT),
    "rep": (INT, EXPR),
    "join": (EXPR, EXPR),
    "union": (EXPR, EXPR),
    "comp": (EXPR,),
}


@dataclass(frozen=True)
class Call:
    func: str
    args: tuple[Union[int, "Call"], ...]

    def __str__(self) -> str:
        return print_expr(self)


_TOKEN = re.compile(r"\s*(?:(?P<num>\d+)|(?P<name>[A-Za-z_]\w*)|(?P<punct>[(),]))")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        match = _TOKEN.match(text, pos)
        if not match:
            offset = pos + len(text[pos:]) - len(text[pos:].lstrip())
            raise ParseError(f"unexpected character {text[offset]!r}", offset)
        kind = match.lastgroup
        tokens.append((kind, match.group(kind), match.start(kind)))
        pos = match.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self, kind: str, value: str | None = None):
        tok = self.tokens[self.i]
        if tok[0] != kind or (value is not None and tok[1] != value):
            want = value or kind
            got = tok[1] or "end of input"
            raise ParseError(f"expected {want!r}, found {got!r}", tok[2])
        self.i += 1
        return tok

    def expr(self) -> Call:
        _, name, at = self.take("name")
        if name not in SIGNATURES:
            raise ParseError(f"unknown constructor {name!r}", at)
        self.take("punct", "(")
        args: list = [self.arg()]
        while self.peek()[:2] == ("punct", ","):
            self.i += 1
            args.append(self.arg())
        _, _, close_at = self.take("punct", ")")
        sig = SIGNATURES[name]
        if len(args) != len(sig):
            raise ParseError(f"{name} takes {len(sig)} argument(s), got {len(args)}", at)
        for a, kind in zip(args, sig):
            if (kind == INT) != isinstance(a, int):
                raise ParseError(f"{name} expects argument kinds {sig}", at)
        return Call(name, tuple(args))

    def arg(self):
        kind, value, _ = self.peek()
        if kind == "num":
            self.i += 1
            return int(value)
        return self.expr()


def parse_ast(text: str) -> Call:
    parser = _Parser(text)
    node = parser.expr()
    parser.take("end")
    return node


def print_expr(node: Union[int, Call]) -> str:
    if isinstance(node, int):
        return str(node)
    return f"{node.func}({', '.join(print_expr(a) for a in node.args)})"


def evaluate(node: Call) -> Graph:
    f, a = node.func, node.args
    if f == "kn":
        return G.complete(a[0])
    if f == "e":
        return G.empty(a[0])
    if f == "star":
        return G.star(a[0])
    if f == "path":
        return G.path(a[0])
    if f == "cycle":
        return G.cycle(a[0])
    if f == "bip":
        return G.complete_bipartite(a[0], a[1])
    if f == "h":
        return build_H(a[0], a[1])
    if f == "rep":
        return G.repeat(a[0], evaluate(a[1]))
    if f == "join":
        return G.join(evaluate(a[0]), evaluate(a[1]))
    if f == "union":
        return G.disjoint_union(evaluate(a[0]), evaluate(a[1]))
    if f == "comp":
        return G.complement(evaluate(a[0]))
    raise InvalidParameter(f"unknown constructor {f!r}")


def parse_expr(text: str) -> Graph:
    return evaluate(parse_ast(text))
