"""Text syntax for scalars in Q(q) and elements of U_{g,h}.

Grammar (loosest binding first)::

    expr    := signed (("+" | "-") signed)*
    signed  := ("-" | "+") signed | product
    product := power (("*" | "/")? power)*        # juxtaposition multiplies
    power   := atom ("^" exponent)?
    exponent:= ["-" | "+"] INT | "(" ["-" | "+"] INT ")"
    atom    := INT | "q" | "E" | "F" | "K" | "g" | "h" | "(" expr ")"

Products keep the written order.  Division is only by scalars.
"""

from __future__ import annotations

from dataclasses import dataclass

from .field import Q, RatFunc
from .pbw import AlgebraElement, generator, multiply, scalar

__all__ = [
    "ParseError",
    "Num",
    "Sym",
    "Neg",
    "BinOp",
    "Pow",
    "Expr",
    "parse",
    "evaluate_expr",
    "parse_element",
    "parse_scalar",
]

GENERATOR_SYMBOLS = ("E", "F", "K", "g", "h")
SCALAR_SYMBOLS = ("q",)


class ParseError(ValueError):
    def __init__(self, message: str, offset: int, text: str = ""):
        self.message = message
        self.offset = offset
        self.text = text
        super().__init__(f"{message} (at byte {offset})")


@dataclass(frozen=True)
class Num:
    value: int
    pos: int


@dataclass(frozen=True)
class Sym:
    name: str
    pos: int


@dataclass(frozen=True)
class Neg:
    operand: "Expr"
    pos: int


@dataclass(frozen=True)
class BinOp:
    op: str  # one of + - * /
    left: "Expr"
    right: "Expr"
    pos: int


@dataclass(frozen=True)
class Pow:
    base: "Expr"
    exponent: int
    pos: int


Expr = Num | Sym | Neg | BinOp | Pow


@dataclass(frozen=True)
class _Tok:
    kind: str  # INT, SYM, OP, END
    value: str
    pos: int  # byte offset


def _tokenize(text: str) -> list[_Tok]:
    toks = []
    i = 0
    byte = 0
    n = len(text)
    while i < n:
        ch = text[i]
        width = len(ch.encode())
        if ch.isspace():
            i += 1
            byte += width
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            toks.append(_Tok("INT", text[i:j], byte))
            byte += j - i
            i = j
            continue
        if ch in "+-*/^()":
            toks.append(_Tok("OP", ch, byte))
        elif ch in GENERATOR_SYMBOLS or ch in SCALAR_SYMBOLS:
            toks.append(_Tok("SYM", ch, byte))
        else:
            raise ParseError(f"unknown symbol {ch!r}", byte, text)
        i += 1
        byte += width
    toks.append(_Tok("END", "", byte))
    return toks


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self) -> _Tok:
        return self.toks[self.i]

    def take(self) -> _Tok:
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def expect(self, value: str) -> _Tok:
        tok = self.take()
        if tok.value != value or tok.kind != "OP":
            raise ParseError(f"expected {value!r}, found {tok.value or 'end of input'!r}", tok.pos, self.text)
        return tok

    def error(self, msg: str, tok: _Tok):
        raise ParseError(msg, tok.pos, self.text)

    def parse(self) -> Expr:
        if self.peek().kind == "END":
            self.error("empty expression", self.peek())
        node = self.expr()
        tok = self.peek()
        if tok.kind != "END":
            self.error(f"unexpected {tok.value!r}", tok)
        return node

    def expr(self) -> Expr:
        node = self.signed()
        while self.peek().kind == "OP" and self.peek().value in "+-":
            tok = self.take()
            node = BinOp(tok.value, node, self.signed(), tok.pos)
        return node

    def signed(self) -> Expr:
        tok = self.peek()
        if tok.kind == "OP" and tok.value == "-":
            self.take()
            return Neg(self.signed(), tok.pos)
        if tok.kind == "OP" and tok.value == "+":
            self.take()
            return self.signed()
        return self.product()

    def _starts_atom(self, tok: _Tok) -> bool:
        return tok.kind in ("INT", "SYM") or (tok.kind == "OP" and tok.value == "(")

    def product(self) -> Expr:
        node = self.power()
        while True:
            tok = self.peek()
            if tok.kind == "OP" and tok.value in "*/":
                self.take()
                node = BinOp(tok.value, node, self.power(), tok.pos)
            elif self._starts_atom(tok):
                node = BinOp("*", node, self.power(), tok.pos)
            else:
                return node

    def power(self) -> Expr:
        base = self.atom()
        tok = self.peek()
        if tok.kind == "OP" and tok.value == "^":
            self.take()
            exp = self.exponent()
            if exp < 0 and isinstance(base, Sym) and base.name in ("E", "F"):
                raise ParseError("E, F are not invertible", tok.pos, self.text)
            return Pow(base, exp, tok.pos)
        return base

    def exponent(self) -> int:
        tok = self.peek()
        paren = tok.kind == "OP" and tok.value == "("
        if paren:
            self.take()
        sign = 1
        tok = self.peek()
        if tok.kind == "OP" and tok.value in "+-":
            self.take()
            sign = -1 if tok.value == "-" else 1
        tok = self.take()
        if tok.kind != "INT":
            self.error("exponent must be an integer", tok)
        if paren:
            self.expect(")")
        return sign * int(tok.value)

    def atom(self) -> Expr:
        tok = self.take()
        if tok.kind == "INT":
            return Num(int(tok.value), tok.pos)
        if tok.kind == "SYM":
            return Sym(tok.value, tok.pos)
        if tok.kind == "OP" and tok.value == "(":
            node = self.expr()
            self.expect(")")
            return node
        self.error(f"unexpected {tok.value or 'end of input'!r}", tok)


def parse(text: str) -> Expr:
    """Parse ``text`` into an expression tree; raises :class:`ParseError`."""
    return _Parser(text).parse()


def evaluate_expr(node: Expr, text: str = "") -> AlgebraElement:
    """Evaluate an expression tree to its PBW normal form."""
    if isinstance(node, Num):
        return scalar(node.value)
    if isinstance(node, Sym):
        return scalar(Q) if node.name == "q" else generator(node.name)
    if isinstance(node, Neg):
        return -evaluate_expr(node.operand, text)
    if isinstance(node, Pow):
        base = evaluate_expr(node.base, text)
        if node.exponent < 0:
            try:
                base = base.inverse() if not base.is_scalar() else scalar(base.scalar_value().inv())
            except (ValueError, ZeroDivisionError) as exc:
                raise ParseError(str(exc), node.pos, text) from None
            return base ** (-node.exponent)
        return base**node.exponent
    if isinstance(node, BinOp):
        left = evaluate_expr(node.left, text)
        right = evaluate_expr(node.right, text)
        if node.op == "+":
            return left + right
        if node.op == "-":
            return left - right
        if node.op == "*":
            return multiply(left, right)
        if not right.is_scalar():
            raise ParseError("division by a non-scalar", node.pos, text)
        if right.is_zero():
            raise ParseError("division by zero", node.pos, text)
        return left.scale(right.scalar_value().inv())
    raise TypeError(f"not an expression node: {node!r}")


def parse_element(text: str) -> AlgebraElement:
    """Parse and normalize an element of U_{g,h}."""
    return evaluate_expr(parse(text), text)


def parse_scalar(text: str) -> RatFunc:
    """Parse an element of Q(q); generators are rejected."""
    node = parse(text)
    elem = evaluate_expr(node, text)
    if not elem.is_scalar():
        raise ParseError("expected a scalar in q", 0, text)
    return elem.scalar_value()
