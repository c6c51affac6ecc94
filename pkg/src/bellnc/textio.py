"""Parsing and canonical printing of scalars, polynomials and matrices.

Grammar (no implicit multiplication)::

    expr   := ['+'|'-'] term (('+'|'-') term)*
    term   := factor ('*' factor)*
    factor := atom ('^' exponent)?
    atom   := rational | 'i' | 's2' | 'xi' | variable | '(' expr ')'

``rational`` is ``digits`` or ``digits/digits``.  Exponents are nonnegative
integers, except that ``xi`` also takes negative ones (``xi^-1``).
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import ParseError
from .poly import Poly, VarSet
from .scalars import I, S2, XI, Scalar

RESERVED = ("i", "s2", "xi")

_TOKEN = re.compile(r"(\d+(?:/\d+)?)|([A-Za-z_][A-Za-z0-9_]*)|(\S)")
_SPACE = re.compile(r"\s*")


@dataclass(frozen=True)
class Token:
    kind: str  # "num", "name", "op", "end"
    text: str
    pos: int


def tokenize(text: str):
    tokens = []
    pos = _SPACE.match(text, 0).end()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        start = m.start()
        if m.group(1) is not None:
            tokens.append(Token("num", m.group(1), start))
        elif m.group(2) is not None:
            tokens.append(Token("name", m.group(2), start))
        else:
            ch = m.group(3)
            if ch not in "+-*^()":
                raise ParseError(f"unexpected character {ch!r}", start)
            tokens.append(Token("op", ch, start))
        pos = _SPACE.match(text, m.end()).end()
    tokens.append(Token("end", "", len(text)))
    return tokens


@dataclass
class Node:
    """ExprAST node: kind in {rational, i, s2, xi, var, neg, add, sub, mul, pow}."""

    kind: str
    pos: int
    value: object = None
    children: list = field(default_factory=list)


class _Parser:
    def __init__(self, text: str):
        self.tokens = tokenize(text)
        self.k = 0

    @property
    def tok(self) -> Token:
        return self.tokens[self.k]

    def advance(self) -> Token:
        t = self.tokens[self.k]
        self.k += 1
        return t

    def accept(self, op: str):
        if self.tok.kind == "op" and self.tok.text == op:
            return self.advance()
        return None

    def parse(self) -> Node:
        if self.tok.kind == "end":
            raise ParseError("empty expression", self.tok.pos)
        node = self.expr()
        if self.tok.kind != "end":
            raise ParseError(f"unexpected token {self.tok.text!r}", self.tok.pos)
        return node

    def expr(self) -> Node:
        start = self.tok.pos
        if self.accept("-"):
            node = Node("neg", start, children=[self.term()])
        else:
            self.accept("+")
            node = self.term()
        while self.tok.kind == "op" and self.tok.text in "+-":
            op = self.advance()
            rhs = self.term()
            node = Node("add" if op.text == "+" else "sub", op.pos, children=[node, rhs])
        return node

    def term(self) -> Node:
        node = self.factor()
        while True:
            op = self.accept("*")
            if not op:
                return node
            node = Node("mul", op.pos, children=[node, self.factor()])

    def factor(self) -> Node:
        base = self.atom()
        caret = self.accept("^")
        if not caret:
            return base
        negative = self.accept("-")
        if self.tok.kind != "num" or "/" in self.tok.text:
            raise ParseError("malformed exponent", self.tok.pos)
        if negative and base.kind != "xi":
            raise ParseError("negative exponent only allowed on xi", negative.pos)
        n = int(self.advance().text)
        return Node("pow", caret.pos, value=-n if negative else n, children=[base])

    def atom(self) -> Node:
        t = self.tok
        if t.kind == "num":
            self.advance()
            num, _, den = t.text.partition("/")
            if den and int(den) == 0:
                raise ParseError("zero denominator", t.pos)
            return Node("rational", t.pos, value=Fraction(int(num), int(den) if den else 1))
        if t.kind == "name":
            self.advance()
            if t.text in RESERVED:
                return Node(t.text, t.pos)
            return Node("var", t.pos, value=t.text)
        if self.accept("("):
            node = self.expr()
            if not self.accept(")"):
                raise ParseError("expected ')'", self.tok.pos)
            return node
        if t.kind == "end":
            raise ParseError("unexpected end of input", t.pos)
        raise ParseError(f"unexpected token {t.text!r}", t.pos)


def parse_ast(text: str) -> Node:
    return _Parser(text).parse()


def _evaluate(node: Node, varset):
    kind = node.kind
    if kind == "rational":
        v = Scalar.of(node.value)
        return varset.const(v) if varset else v
    if kind in RESERVED:
        v = {"i": I, "s2": S2, "xi": XI}[kind]
        return varset.const(v) if varset else v
    if kind == "var":
        if varset is None or node.value not in varset.names:
            raise ParseError(f"unknown variable {node.value!r}", node.pos)
        return varset.var(node.value)
    if kind == "neg":
        return -_evaluate(node.children[0], varset)
    if kind in ("add", "sub", "mul"):
        a = _evaluate(node.children[0], varset)
        b = _evaluate(node.children[1], varset)
        return a + b if kind == "add" else a - b if kind == "sub" else a * b
    if kind == "pow":
        base = _evaluate(node.children[0], varset)
        if node.value < 0:
            # only xi reaches here
            return (XI ** node.value) if varset is None else varset.const(XI ** node.value)
        return base ** node.value
    raise AssertionError(kind)


def parse_poly(text: str, vars: VarSet) -> Poly:
    return _evaluate(parse_ast(text), vars)


def parse_scalar(text: str) -> Scalar:
    return _evaluate(parse_ast(str(text)), None)


def parse_matrix(rows, vars: VarSet):
    """Nested list of expression strings -> :class:`~bellnc.matrices.Matrix` over Poly."""
    from .matrices import Matrix

    return Matrix([[parse_poly(str(e), vars) for e in row] for row in rows])


def parse_scalar_matrix(rows):
    from .matrices import Matrix

    return Matrix([[parse_scalar(str(e)) for e in row] for row in rows])


# printing ---------------------------------------------------------------

_BASIS_TEXT = ("", "i", "s2", "i*s2")


def _scalar_pieces(c: Scalar):
    """Yield (negative, magnitude text) for each rational*basis*xi^k piece."""
    for k, coeffs in sorted(c.terms, key=lambda t: -t[0]):
        for q, b in zip(coeffs, _BASIS_TEXT):
            if not q:
                continue
            parts = []
            mag = abs(q)
            if mag != 1:
                parts.append(f"{mag.numerator}/{mag.denominator}" if mag.denominator != 1 else str(mag.numerator))
            if b:
                parts.append(b)
            if k == 1:
                parts.append("xi")
            elif k:
                parts.append(f"xi^{k}")
            yield q < 0, "*".join(parts) if parts else "1"


def _join(pieces):
    out = []
    for n, (neg, text) in enumerate(pieces):
        if n == 0:
            out.append(f"-{text}" if neg else text)
        else:
            out.append(f" - {text}" if neg else f" + {text}")
    return "".join(out) if out else "0"


def format_scalar(c: Scalar) -> str:
    return _join(list(_scalar_pieces(c)))


def _monomial_text(names, e):
    parts = []
    for name, k in zip(names, e):
        if k == 1:
            parts.append(name)
        elif k:
            parts.append(f"{name}^{k}")
    return "*".join(parts)


def print_poly(f: Poly) -> str:
    terms = f.sorted_terms("deglex")
    pieces = []
    for e, c in terms:
        m = _monomial_text(f.varset.names, e)
        sp = list(_scalar_pieces(c))
        if len(sp) == 1:
            neg, mag = sp[0]
            if m:
                text = m if mag == "1" else f"{mag}*{m}"
            else:
                text = mag
            pieces.append((neg, text))
        else:
            inner = format_scalar(c)
            if m:
                pieces.append((False, f"({inner})*{m}"))
            elif len(terms) > 1:
                pieces.append((False, f"({inner})"))
            else:
                pieces.append((False, inner))
    return _join(pieces)


def format_entry(e) -> str:
    return print_poly(e) if isinstance(e, Poly) else format_scalar(Scalar.of(e))


def format_matrix(m) -> str:
    return "[" + ", ".join("[" + ", ".join(format_entry(e) for e in row) + "]" for row in m.rows) + "]"


def matrix_to_lists(m):
    return [[format_entry(e) for e in row] for row in m.rows]
