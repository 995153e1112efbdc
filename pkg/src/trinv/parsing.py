"""Polynomial expressions and group files.

Polynomial grammar (no implicit multiplication)::

    expr   := term (("+" | "-") term)*
    term   := unary ("*" unary)*
    unary  := ("+" | "-") unary | power
    power  := atom ("^" INT)?
    atom   := INT | "x" | "y" | "z" | "(" expr ")"

Group files are JSON documents::

    {"schema": 1, "label": "...", "p": 3, "n": 3,
     "generators": [[[1, 1, 0], [0, -1, 0], [0, 0, 1]], ...]}
"""

from __future__ import annotations

import json
import re
from pathlib import Path

from trinv.algebra import Matrix3, check_modulus
from trinv.errors import ParseError
from trinv.group import MatrixGroup, closure
from trinv.poly import Polynomial

SCHEMA_VERSION = 1

_TOKEN = re.compile(r"\s*(?:(\d+)|([xyz])|(\^|\*|\+|-|\(|\)))")


def _tokenize(text: str) -> list[tuple[str, str]]:
    text = text.replace("−", "-")
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos:].lstrip()[:1]!r} at {pos}")
        num, var, op = m.groups()
        tokens.append(("num", num) if num else ("var", var) if var else ("op", op))
        pos = m.end()
    return tokens


class _Parser:
    def __init__(self, text: str, p: int):
        self.tokens = _tokenize(text)
        self.i = 0
        self.p = p

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else (None, None)

    def take(self, value=None):
        tok = self.peek()
        if tok[0] is None or (value is not None and tok[1] != value):
            raise ParseError(f"expected {value or 'token'}, got {tok[1]!r}")
        self.i += 1
        return tok

    def parse(self) -> Polynomial:
        if not self.tokens:
            raise ParseError("empty expression")
        out = self.expr()
        if self.i != len(self.tokens):
            raise ParseError(f"unexpected token {self.peek()[1]!r}")
        return out

    def expr(self):
        out = self.term()
        while self.peek() in (("op", "+"), ("op", "-")):
            op = self.take()[1]
            rhs = self.term()
            out = out + rhs if op == "+" else out - rhs
        return out

    def term(self):
        out = self.unary()
        while self.peek() == ("op", "*"):
            self.take()
            out = out * self.unary()
        return out

    def unary(self):
        if self.peek() in (("op", "+"), ("op", "-")):
            op = self.take()[1]
            inner = self.unary()
            return inner if op == "+" else -inner
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek() == ("op", "^"):
            self.take()
            kind, val = self.take()
            if kind != "num":
                raise ParseError(f"exponent must be a non-negative integer, got {val!r}")
            base = base ** int(val)
        return base

    def atom(self):
        kind, val = self.take()
        if kind == "num":
            return Polynomial.constant(int(val), self.p)
        if kind == "var":
            return Polynomial.var(val, self.p)
        if val == "(":
            out = self.expr()
            self.take(")")
            return out
        raise ParseError(f"unexpected token {val!r}")


def parse_poly(text: str, p: int) -> Polynomial:
    return _Parser(text, check_modulus(p)).parse()


def parse_poly_list(text: str, p: int) -> list[Polynomial]:
    return [parse_poly(part, p) for part in text.split(",")]


def group_document(p: int, generators, label: str = "") -> dict:
    return {
        "schema": SCHEMA_VERSION,
        "label": label,
        "p": p,
        "n": 3,
        "generators": [m.rows() if isinstance(m, Matrix3) else m for m in generators],
    }


def dump_group_document(doc: dict) -> str:
    """JSON text with one generator per line."""
    head = {k: v for k, v in doc.items() if k != "generators"}
    lines = ["{"] + [f"  {json.dumps(k)}: {json.dumps(v)}," for k, v in head.items()]
    gens = [f"    {json.dumps(g)}" for g in doc["generators"]]
    lines.append('  "generators": [' + ("\n" + ",\n".join(gens) + "\n  ]" if gens else "]"))
    lines.append("}")
    return "\n".join(lines) + "\n"


def load_group_document(doc: dict, cap: int | None = None) -> MatrixGroup:
    if not isinstance(doc, dict):
        raise ParseError("group document must be an object")
    if doc.get("schema") != SCHEMA_VERSION:
        raise ParseError(f"unsupported schema {doc.get('schema')!r}")
    if doc.get("n", 3) != 3:
        raise ParseError("only n = 3 is supported")
    p = doc.get("p")
    if not isinstance(p, int) or isinstance(p, bool):
        raise ParseError("p must be an integer")
    check_modulus(p)
    gens = doc.get("generators")
    if not isinstance(gens, list):
        raise ParseError("generators must be a list of 3x3 integer matrices")
    mats = []
    for g in gens:
        if (not isinstance(g, list) or len(g) != 3
                or any(not isinstance(r, list) or len(r) != 3 for r in g)
                or any(not isinstance(a, int) or isinstance(a, bool) for r in g for a in r)):
            raise ParseError(f"bad generator {g!r}")
        mats.append(Matrix3.from_rows(g, p))
    return closure(p, mats, cap)


def parse_group_file(path, cap: int | None = None) -> MatrixGroup:
    try:
        doc = json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: {exc}") from exc
    return load_group_document(doc, cap)

