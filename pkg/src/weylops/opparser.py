"""Expression parser for operators and polynomials.

Grammar (precedence from loosest to tightest):

    expr    := product (('+' | '-') product)*
    product := unary (['*'] unary)*          juxtaposition is a product
    unary   := '-' unary | power
    power   := atom ('^' NATURAL)*
    atom    := NATURAL ['/' NATURAL] | IDENT | DSYM | '(' expr ')'

The product is noncommutative and left-associative.  ``d[a1,...,an]``
names a divided-power basis operator; ``d1``, ``d2``, ... are sugar for
the unit exponents (unless shadowed by a declared variable name).
Rational literals are a single token pair ``NAT/NAT``; there is no
general division.  The AST is plain tuples and is evaluated into an
operator over a given ring.
"""

from __future__ import annotations

import re

from .diffop import DiffOp
from .errors import ParseError
from .poly import PolyRing

_TOKEN_RE = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<num>\d+)
  | (?P<dsym>d\[[^\]]*\])
  | (?P<ident>[A-Za-z_][A-Za-z_0-9]*)
  | (?P<op>[-+*^/()])
""",
    re.VERBOSE,
)

_DSYM_BODY = re.compile(r"d\[([0-9, ]*)\]\Z")


class _Token:
    __slots__ = ("kind", "text", "line", "column")

    def __init__(self, kind, text, line, column):
        self.kind = kind
        self.text = text
        self.line = line
        self.column = column

    def __repr__(self):
        return f"Token({self.kind}, {self.text!r})"


def tokenize(src: str):
    tokens = []
    line, col = 1, 1
    pos = 0
    while pos < len(src):
        m = _TOKEN_RE.match(src, pos)
        if m is None:
            raise ParseError(f"unexpected character {src[pos]!r}", line, col)
        kind = m.lastgroup
        text = m.group()
        if kind != "ws":
            tokens.append(_Token(kind, text, line, col))
        newlines = text.count("\n")
        if newlines:
            line += newlines
            col = len(text) - text.rfind("\n")
        else:
            col += len(text)
        pos = m.end()
    tokens.append(_Token("end", "", line, col))
    return tokens


_ATOM_STARTERS = {"num", "ident", "dsym"}


class _Parser:
    def __init__(self, tokens):
        self.tokens = tokens
        self.pos = 0

    @property
    def current(self) -> _Token:
        return self.tokens[self.pos]

    def advance(self) -> _Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def error(self, message):
        tok = self.current
        raise ParseError(message, tok.line, tok.column)

    def expect_op(self, text):
        tok = self.current
        if tok.kind != "op" or tok.text != text:
            self.error(f"expected {text!r}")
        return self.advance()

    # expr := product (('+'|'-') product)*
    def parse_expr(self):
        node = self.parse_product()
        while self.current.kind == "op" and self.current.text in "+-":
            op = self.advance().text
            rhs = self.parse_product()
            node = ("add" if op == "+" else "sub", node, rhs)
        return node

    # product := unary (['*'] unary)*
    def parse_product(self):
        node = self.parse_unary()
        while True:
            tok = self.current
            if tok.kind == "op" and tok.text == "*":
                self.advance()
                node = ("mul", node, self.parse_unary())
            elif tok.kind in _ATOM_STARTERS or (
                tok.kind == "op" and tok.text == "("
            ):
                node = ("mul", node, self.parse_unary())
            else:
                return node

    # unary := '-' unary | power
    def parse_unary(self):
        if self.current.kind == "op" and self.current.text == "-":
            self.advance()
            return ("neg", self.parse_unary())
        return self.parse_power()

    # power := atom ('^' NATURAL)*
    def parse_power(self):
        node = self.parse_atom()
        while self.current.kind == "op" and self.current.text == "^":
            self.advance()
            tok = self.current
            if tok.kind != "num":
                if tok.kind == "op" and tok.text == "-":
                    self.error("negative exponent")
                self.error("exponent must be a natural number")
            self.advance()
            node = ("pow", node, int(tok.text))
        return node

    def parse_atom(self):
        tok = self.current
        if tok.kind == "num":
            self.advance()
            nxt = self.current
            if nxt.kind == "op" and nxt.text == "/":
                self.advance()
                den = self.current
                if den.kind != "num":
                    self.error("expected a natural number after '/'")
                self.advance()
                return ("rat", int(tok.text), int(den.text))
            return ("int", int(tok.text))
        if tok.kind == "dsym":
            self.advance()
            body = _DSYM_BODY.match(tok.text)
            if body is None:
                raise ParseError("malformed d[...] symbol", tok.line, tok.column)
            inner = body.group(1).strip()
            if not inner:
                raise ParseError("empty d[...] symbol", tok.line, tok.column)
            try:
                alpha = tuple(int(part) for part in inner.split(","))
            except ValueError:
                raise ParseError(
                    "d[...] entries must be naturals", tok.line, tok.column
                ) from None
            return ("dop", alpha, tok.line, tok.column)
        if tok.kind == "ident":
            self.advance()
            return ("name", tok.text, tok.line, tok.column)
        if tok.kind == "op" and tok.text == "(":
            self.advance()
            node = self.parse_expr()
            self.expect_op(")")
            return node
        if tok.kind == "op" and tok.text == "/":
            self.error("'/' is only allowed inside rational literals")
        self.error(f"unexpected token {tok.text!r}" if tok.text else "unexpected end of input")


def parse(src: str):
    """Parse source text into an AST of nested tuples."""
    parser = _Parser(tokenize(src))
    node = parser.parse_expr()
    if parser.current.kind != "end":
        parser.error(f"trailing input {parser.current.text!r}")
    return node


_DSUGAR = re.compile(r"d([1-9][0-9]*)\Z")


def evaluate(node, ring: PolyRing) -> DiffOp:
    """Evaluate an AST into an operator over the given ring."""
    kind = node[0]
    if kind == "int":
        return DiffOp.constant(ring, node[1])
    if kind == "rat":
        num, den = node[1], node[2]
        value = ring.field.div(ring.field.from_int(num), ring.field.from_int(den))
        return DiffOp.constant(ring, value)
    if kind == "name":
        name, line, col = node[1], node[2], node[3]
        if name in ring.var_names:
            return DiffOp.from_poly(ring.variable(ring.var_names.index(name)))
        sugar = _DSUGAR.match(name)
        if sugar:
            i = int(sugar.group(1))
            if 1 <= i <= ring.nvars:
                return DiffOp.partial(ring, i - 1)
        raise ParseError(f"unknown identifier {name!r}", line, col)
    if kind == "dop":
        alpha, line, col = node[1], node[2], node[3]
        if len(alpha) != ring.nvars:
            raise ParseError(
                f"d[...] needs {ring.nvars} entries, got {len(alpha)}", line, col
            )
        return DiffOp.basis(ring, alpha)
    if kind == "neg":
        return -evaluate(node[1], ring)
    if kind == "add":
        return evaluate(node[1], ring) + evaluate(node[2], ring)
    if kind == "sub":
        return evaluate(node[1], ring) - evaluate(node[2], ring)
    if kind == "mul":
        return evaluate(node[1], ring) * evaluate(node[2], ring)
    if kind == "pow":
        return evaluate(node[1], ring) ** node[2]
    raise ParseError(f"unknown AST node {kind!r}")


def parse_operator(src: str, ring: PolyRing) -> DiffOp:
    return evaluate(parse(src), ring)


def parse_polynomial(src: str, ring: PolyRing):
    """Parse text that must denote a multiplication operator."""
    op = parse_operator(src, ring)
    if op.is_zero():
        return ring.zero()
    if op.order() != 0:
        raise ParseError("expected a polynomial, found derivative symbols")
    return op.constant_term()
