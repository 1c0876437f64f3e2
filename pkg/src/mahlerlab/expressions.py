"""Tiny expression parser for candidate (p, q) strings.

Grammar (whitespace-insensitive):

    expr   := term (('+' | '-') term)*
    term   := factor (('*' | '/') factor)*
    factor := ('+' | '-') factor | power
    power  := atom (('^' | '**') factor)?     # right associative
    atom   := NUMBER | 'x' | 'sqrt' '(' expr ')' | '(' expr ')'

Parsing produces a closure usable on floats and on jets, so parsed candidates
plug straight into the identity engine.  Candidate files are JSON lists of
objects with keys "name", "p", "q", "domain" ([lo, hi]) and optional
"anchor_x0".
"""

from __future__ import annotations

import json
import re
from typing import Callable

from .errors import DomainError
from .identities import IdentityCandidate
from .jets import sqrt

_TOKEN = re.compile(
    r"\s*(?:(?P<num>\d+\.\d*|\.\d+|\d+)|(?P<name>[A-Za-z_]\w*)|(?P<op>\*\*|[-+*/^()]))"
)


def _tokenize(text: str) -> list[str]:
    out, pos = [], 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise DomainError(f"expression: bad character at {text[pos:]!r}")
        out.append(m.group(m.lastgroup))
        pos = m.end()
    return out


class _Parser:
    def __init__(self, tokens: list[str]):
        self.toks = tokens
        self.i = 0

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else None

    def take(self, expected=None):
        tok = self.peek()
        if tok is None or (expected is not None and tok != expected):
            raise DomainError(f"expression: expected {expected!r}, got {tok!r}")
        self.i += 1
        return tok

    def expr(self):
        node = self.term()
        while self.peek() in ("+", "-"):
            op = self.take()
            rhs = self.term()
            node = (lambda a, b: lambda x: a(x) + b(x))(node, rhs) if op == "+" else (
                lambda a, b: lambda x: a(x) - b(x)
            )(node, rhs)
        return node

    def term(self):
        node = self.factor()
        while self.peek() in ("*", "/"):
            op = self.take()
            rhs = self.factor()
            node = (lambda a, b: lambda x: a(x) * b(x))(node, rhs) if op == "*" else (
                lambda a, b: lambda x: a(x) / b(x)
            )(node, rhs)
        return node

    def factor(self):
        if self.peek() in ("+", "-"):
            op = self.take()
            inner = self.factor()
            return inner if op == "+" else (lambda a: lambda x: -a(x))(inner)
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek() in ("^", "**"):
            self.take()
            expo = self.factor()
            return (lambda a, b: lambda x: a(x) ** b(x))(base, expo)
        return base

    def atom(self):
        tok = self.peek()
        if tok == "(":
            self.take()
            node = self.expr()
            self.take(")")
            return node
        if tok == "x":
            self.take()
            return lambda x: x
        if tok == "sqrt":
            self.take()
            self.take("(")
            node = self.expr()
            self.take(")")
            return (lambda a: lambda x: sqrt(a(x)))(node)
        if tok is not None and re.fullmatch(r"\d+\.\d*|\.\d+|\d+", tok):
            self.take()
            val = float(tok)
            return lambda x: val
        raise DomainError(f"expression: unexpected token {tok!r}")


def parse_expression(text: str) -> Callable:
    """Compile an expression in x into a float/jet-polymorphic closure."""
    parser = _Parser(_tokenize(text))
    node = parser.expr()
    if parser.peek() is not None:
        raise DomainError(f"expression: trailing tokens {parser.toks[parser.i:]}")
    return node


def load_candidates(path: str) -> list[IdentityCandidate]:
    """Read candidates from a JSON file of {name, p, q, domain[, anchor_x0]}."""
    with open(path, "r", encoding="utf-8") as fh:
        raw = json.load(fh)
    if not isinstance(raw, list):
        raise DomainError("candidate file: top level must be a JSON list")
    out = []
    for entry in raw:
        try:
            lo, hi = entry["domain"]
            cand = IdentityCandidate(
                name=str(entry["name"]),
                p=parse_expression(entry["p"]),
                q=parse_expression(entry["q"]),
                domain=(float(lo), float(hi)),
                anchor_x0=float(entry.get("anchor_x0", 0.5 * (float(lo) + float(hi)))),
            )
        except KeyError as exc:
            raise DomainError(f"candidate file: missing key {exc}") from exc
        out.append(cand)
    return out
