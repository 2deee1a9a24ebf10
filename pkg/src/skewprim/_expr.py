"""Tiny recursive-descent parser shared by the scalar and polynomial text forms.

The grammar is the usual arithmetic one plus juxtaposition as multiplication
and a skew-commutator bracket::

    expr    := term (('+' | '-') term)*
    term    := unary (('*' | '/' | <juxtaposition>) unary)*
    unary   := '-' unary | power
    power   := atom ('^' ['-'] INT)?
    atom    := NUMBER | NAME | '(' expr ')' | '[' expr ',' expr ']' '_' atom

NAME starts with a letter and may carry bracketed integer indices
(``p[1][2]``); braces are accepted as parentheses.  Values are built by a
caller-supplied ``Builder`` so the same parser serves several algebras.
"""

from __future__ import annotations

import re
from typing import Any, Protocol


class ParseError(ValueError):
    pass


_TOKEN = re.compile(
    r"\s*(?:"
    r"(?P<num>\d+)"
    r"|(?P<name>[A-Za-z][A-Za-z0-9]*(?:\[\d+\])*)"
    r"|(?P<op>[-+*/^(){},\[\]_])"
    r")"
)


def tokenize(text: str) -> list[tuple[str, str]]:
    pos, out = 0, []
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None or m.end() == pos:
            raise ParseError(f"unexpected character {text[pos:pos + 1]!r} at {pos} in {text!r}")
        kind = m.lastgroup
        val = m.group(kind)
        val = {"{": "(", "}": ")"}.get(val, val)
        out.append((kind, val))
        pos = m.end()
    return out


class Builder(Protocol):
    def number(self, digits: str) -> Any: ...
    def name(self, name: str) -> Any: ...
    def add(self, a: Any, b: Any) -> Any: ...
    def sub(self, a: Any, b: Any) -> Any: ...
    def mul(self, a: Any, b: Any) -> Any: ...
    def div(self, a: Any, b: Any) -> Any: ...
    def neg(self, a: Any) -> Any: ...
    def pow(self, a: Any, k: int) -> Any: ...
    def bracket(self, a: Any, b: Any, c: Any) -> Any: ...


class _Parser:
    def __init__(self, text: str, builder: Builder):
        self.text = text
        self.toks = tokenize(text)
        self.i = 0
        self.b = builder

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else (None, None)

    def take(self, value=None):
        tok = self.peek()
        if tok[0] is None or (value is not None and tok[1] != value):
            raise ParseError(f"expected {value or 'token'} at token {self.i} in {self.text!r}")
        self.i += 1
        return tok

    def parse(self):
        if not self.toks:
            raise ParseError("empty expression")
        v = self.expr()
        if self.i != len(self.toks):
            raise ParseError(f"trailing input at token {self.i} in {self.text!r}")
        return v

    def expr(self):
        v = self.term()
        while self.peek()[1] in ("+", "-") and self.peek()[0] == "op":
            op = self.take()[1]
            w = self.term()
            v = self.b.add(v, w) if op == "+" else self.b.sub(v, w)
        return v

    def _starts_atom(self):
        kind, val = self.peek()
        return kind in ("num", "name") or (kind == "op" and val in ("(", "["))

    def term(self):
        v = self.unary()
        while True:
            kind, val = self.peek()
            if kind == "op" and val in ("*", "/"):
                self.take()
                w = self.unary()
                v = self.b.mul(v, w) if val == "*" else self.b.div(v, w)
            elif self._starts_atom():
                v = self.b.mul(v, self.power())
            else:
                return v

    def unary(self):
        if self.peek() == ("op", "-"):
            self.take()
            return self.b.neg(self.unary())
        return self.power()

    def power(self):
        v = self.atom()
        if self.peek() == ("op", "^"):
            self.take()
            sign = 1
            if self.peek() == ("op", "-"):
                self.take()
                sign = -1
            kind, digits = self.take()
            if kind != "num":
                raise ParseError(f"integer exponent expected in {self.text!r}")
            v = self.b.pow(v, sign * int(digits))
        return v

    def atom(self):
        kind, val = self.peek()
        if kind == "num":
            self.take()
            return self.b.number(val)
        if kind == "name":
            self.take()
            return self.b.name(val)
        if val == "(":
            self.take()
            v = self.expr()
            self.take(")")
            return v
        if val == "[":
            self.take()
            a = self.expr()
            self.take(",")
            c = self.expr()
            self.take("]")
            self.take("_")
            p = self.atom()
            return self.b.bracket(a, c, p)
        raise ParseError(f"unexpected token {val!r} in {self.text!r}")


def parse(text: str, builder: Builder):
    return _Parser(text, builder).parse()
