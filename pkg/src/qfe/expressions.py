"""Concrete syntax for rational-function expressions.

Grammar, loosest to tightest binding:

    expr    := term (('+' | '-') term)*         left-associative
    term    := factor (('*' | '/') factor)*     left-associative
    factor  := '-' factor | power
    power   := atom ('^' exponent)?             right-associative
    atom    := INTEGER | 'q' | 'qint' '(' INT (',' INT)? ')' | '(' expr ')'

Exponents must be integer constants; a negative exponent must be
parenthesized, as in q^(-2).  Whitespace is insignificant.  Parse errors
carry the byte offset of the offending token.

``format_expr`` prints the canonical descending-power form, which always
parses back to the same function.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .poly import Polynomial, quantum_integer
from .ratfunc import RationalFunction


class ParseError(ValueError):
    """Syntax error with the byte offset where it occurred."""

    def __init__(self, message: str, position: int):
        self.position = position
        super().__init__(f"{message} (at offset {position})")


# -- AST ---------------------------------------------------------------------


@dataclass(frozen=True)
class Number:
    value: Fraction


@dataclass(frozen=True)
class Variable:
    pass


@dataclass(frozen=True)
class QuantumInteger:
    n: int
    r: int = 1


@dataclass(frozen=True)
class Neg:
    operand: "Expr"


@dataclass(frozen=True)
class Add:
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Sub:
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Mul:
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Div:
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Pow:
    base: "Expr"
    exponent: int


@dataclass(frozen=True)
class Group:
    inner: "Expr"


Expr = Union[Number, Variable, QuantumInteger, Neg, Add, Sub, Mul, Div, Pow, Group]


# -- tokenizer ----------------------------------------------------------------

_SYMBOLS = set("+-*/^(),")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    """Tokens are (kind, text, position) with kind in {'int', 'name', 'sym'}."""
    tokens = []
    i = 0
    n = len(text)
    while i < n:
        c = text[i]
        if c.isspace():
            i += 1
        elif c.isdigit():
            start = i
            while i < n and text[i].isdigit():
                i += 1
            tokens.append(("int", text[start:i], start))
        elif c.isalpha() or c == "_":
            start = i
            while i < n and (text[i].isalnum() or text[i] == "_"):
                i += 1
            tokens.append(("name", text[start:i], start))
        elif c in _SYMBOLS:
            tokens.append(("sym", c, i))
            i += 1
        else:
            raise ParseError(f"unexpected character {c!r}", i)
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.index = 0

    def peek(self) -> tuple[str, str, int] | None:
        return self.tokens[self.index] if self.index < len(self.tokens) else None

    def advance(self) -> tuple[str, str, int]:
        tok = self.peek()
        if tok is None:
            raise ParseError("unexpected end of input", len(self.text))
        self.index += 1
        return tok

    def expect(self, symbol: str) -> None:
        tok = self.peek()
        if tok is None or tok[0] != "sym" or tok[1] != symbol:
            pos = tok[2] if tok else len(self.text)
            raise ParseError(f"expected {symbol!r}", pos)
        self.index += 1

    def at_symbol(self, *symbols: str) -> bool:
        tok = self.peek()
        return tok is not None and tok[0] == "sym" and tok[1] in symbols

    # grammar rules, loosest first

    def expr(self) -> Expr:
        node = self.term()
        while self.at_symbol("+", "-"):
            op = self.advance()[1]
            right = self.term()
            node = Add(node, right) if op == "+" else Sub(node, right)
        return node

    def term(self) -> Expr:
        node = self.factor()
        while self.at_symbol("*", "/"):
            op = self.advance()[1]
            right = self.factor()
            node = Mul(node, right) if op == "*" else Div(node, right)
        return node

    def factor(self) -> Expr:
        if self.at_symbol("-"):
            self.advance()
            return Neg(self.factor())
        return self.power()

    def power(self) -> Expr:
        base = self.atom()
        if self.at_symbol("^"):
            self.advance()
            return Pow(base, self.exponent())
        return base

    def exponent(self) -> int:
        """An integer constant; chained '^' folds right-associatively."""
        tok = self.peek()
        if tok is None:
            raise ParseError("expected an exponent", len(self.text))
        kind, value, pos = tok
        if kind == "int":
            self.advance()
            head = int(value)
        elif kind == "sym" and value == "(":
            self.advance()
            inner = self.expr()
            self.expect(")")
            head = self._as_integer(inner, pos)
        else:
            raise ParseError("non-integer exponent", pos)
        if self.at_symbol("^"):
            self.advance()
            tail = self.exponent()
            folded = Fraction(head) ** tail
            if folded.denominator != 1:
                raise ParseError("non-integer exponent", pos)
            return int(folded)
        return head

    @staticmethod
    def _as_integer(node: Expr, pos: int) -> int:
        value = eval_expr(node)
        if not value.is_polynomial or value.num.degree > 0:
            raise ParseError("non-integer exponent", pos)
        constant = value.num.constant_term
        if constant.denominator != 1:
            raise ParseError("non-integer exponent", pos)
        return constant.numerator

    def atom(self) -> Expr:
        tok = self.advance()
        kind, value, pos = tok
        if kind == "int":
            return Number(Fraction(int(value)))
        if kind == "name":
            if value == "q":
                return Variable()
            if value == "qint":
                return self.qint_args(pos)
            raise ParseError(f"unknown name {value!r}", pos)
        if kind == "sym" and value == "(":
            inner = self.expr()
            self.expect(")")
            return Group(inner)
        raise ParseError(f"unexpected token {value!r}", pos)

    def qint_args(self, pos: int) -> QuantumInteger:
        self.expect("(")
        n = self.positive_int()
        r = 1
        if self.at_symbol(","):
            self.advance()
            r = self.positive_int()
        self.expect(")")
        return QuantumInteger(n, r)

    def positive_int(self) -> int:
        tok = self.peek()
        if tok is None or tok[0] != "int":
            pos = tok[2] if tok else len(self.text)
            raise ParseError("expected a positive integer literal", pos)
        self.advance()
        value = int(tok[1])
        if value < 1:
            raise ParseError("expected a positive integer literal", tok[2])
        return value


def parse_expr(text: str) -> Expr:
    """Parse an expression, or raise ParseError with the byte offset."""
    parser = _Parser(text)
    node = parser.expr()
    leftover = parser.peek()
    if leftover is not None:
        raise ParseError(f"unexpected token {leftover[1]!r}", leftover[2])
    return node


def eval_expr(node: Expr) -> RationalFunction:
    """Evaluate an AST exactly in the rational-function field."""
    if isinstance(node, Number):
        return RationalFunction(Polynomial((node.value,)))
    if isinstance(node, Variable):
        return RationalFunction(Polynomial((0, 1)))
    if isinstance(node, QuantumInteger):
        return RationalFunction(quantum_integer(node.n, node.r))
    if isinstance(node, Neg):
        return -eval_expr(node.operand)
    if isinstance(node, Add):
        return eval_expr(node.left) + eval_expr(node.right)
    if isinstance(node, Sub):
        return eval_expr(node.left) - eval_expr(node.right)
    if isinstance(node, Mul):
        return eval_expr(node.left) * eval_expr(node.right)
    if isinstance(node, Div):
        denominator = eval_expr(node.right)
        if denominator.is_zero:
            raise ZeroDivisionError("division by the zero function")
        return eval_expr(node.left) / denominator
    if isinstance(node, Pow):
        base = eval_expr(node.base)
        if base.is_zero and node.exponent < 0:
            raise ZeroDivisionError("division by the zero function")
        return base**node.exponent
    if isinstance(node, Group):
        return eval_expr(node.inner)
    raise TypeError(f"not an expression node: {node!r}")


def format_expr(f: "RationalFunction | Polynomial") -> str:
    """Canonical text form; eval_expr(parse_expr(format_expr(f))) == f."""
    if isinstance(f, Polynomial):
        return str(f)
    return str(f)
