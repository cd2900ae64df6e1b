"""Recursive-descent parser for construction scripts.

    script  := stmt*
    stmt    := 'vars' ident (',' ident)* ';'
             | ident '=' expr ';'
             | 'assert' expr ('==' | '!=') expr ';'
             | 'show' expr ';'
    expr    := term (('+' | '-') term)*
    term    := unary (('*' | '/') unary)*
    unary   := '-' unary | power
    power   := primary ('^' unary)?
    primary := number | ident | ident '(' [expr (',' expr)*] ')' | '(' expr [',' expr] ')'
"""
from dataclasses import dataclass
from typing import List, Optional, Tuple, Union

from pyquartet.errors import ParseError
from pyquartet.lexer import Token, tokenize


@dataclass(frozen=True)
class Node:
    line: int
    col: int


@dataclass(frozen=True)
class NumberLit(Node):
    text: str


@dataclass(frozen=True)
class Ident(Node):
    name: str


@dataclass(frozen=True)
class Neg(Node):
    operand: "Expr"


@dataclass(frozen=True)
class BinOp(Node):
    op: str
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Call(Node):
    name: str
    args: Tuple["Expr", ...]


@dataclass(frozen=True)
class TupleLit(Node):
    items: Tuple["Expr", ...]


Expr = Union[NumberLit, Ident, Neg, BinOp, Call, TupleLit]


@dataclass(frozen=True)
class VarsDecl(Node):
    names: Tuple[str, ...]


@dataclass(frozen=True)
class Assign(Node):
    name: str
    value: Expr


@dataclass(frozen=True)
class Assert(Node):
    op: str
    left: Expr
    right: Expr


@dataclass(frozen=True)
class Show(Node):
    value: Expr


Statement = Union[VarsDecl, Assign, Assert, Show]


@dataclass(frozen=True)
class Script(Node):
    statements: Tuple[Statement, ...]


class Parser:
    def __init__(self, tokens: List[Token]):
        self._tokens = tokens
        self._pos = 0

    @property
    def _current(self) -> Token:
        return self._tokens[self._pos]

    def _advance(self) -> Token:
        token = self._current
        if token.kind != "eof":
            self._pos += 1
        return token

    def _check(self, kind: str, text: Optional[str] = None) -> bool:
        token = self._current
        return token.kind == kind and (text is None or token.text == text)

    def _expect(self, kind: str, text: Optional[str] = None, what: Optional[str] = None) -> Token:
        if not self._check(kind, text):
            token = self._current
            raise ParseError(f"expected {what or repr(text or kind)}, found {token}",
                             token.line, token.col)
        return self._advance()

    def parse_script(self) -> Script:
        statements = []
        while not self._check("eof"):
            statements.append(self._statement())
        return Script(1, 1, tuple(statements))

    def parse_expression(self) -> Expr:
        expr = self._expr()
        self._expect("eof", what="end of expression")
        return expr

    def _statement(self) -> Statement:
        token = self._current
        if self._check("keyword", "vars"):
            self._advance()
            names = [self._expect("ident", what="indeterminate name").text]
            while self._check("punct", ","):
                self._advance()
                names.append(self._expect("ident", what="indeterminate name").text)
            self._expect("punct", ";")
            return VarsDecl(token.line, token.col, tuple(names))
        if self._check("keyword", "assert"):
            self._advance()
            left = self._expr()
            if not (self._check("punct", "==") or self._check("punct", "!=")):
                found = self._current
                raise ParseError(f"expected '==' or '!=', found {found}", found.line, found.col)
            op = self._advance().text
            right = self._expr()
            self._expect("punct", ";")
            return Assert(token.line, token.col, op, left, right)
        if self._check("keyword", "show"):
            self._advance()
            value = self._expr()
            self._expect("punct", ";")
            return Show(token.line, token.col, value)
        if self._check("ident"):
            name = self._advance().text
            self._expect("punct", "=")
            value = self._expr()
            self._expect("punct", ";")
            return Assign(token.line, token.col, name, value)
        raise ParseError(f"expected a statement, found {token}", token.line, token.col)

    def _expr(self) -> Expr:
        left = self._term()
        while self._check("punct", "+") or self._check("punct", "-"):
            op = self._advance()
            left = BinOp(op.line, op.col, op.text, left, self._term())
        return left

    def _term(self) -> Expr:
        left = self._unary()
        while self._check("punct", "*") or self._check("punct", "/"):
            op = self._advance()
            left = BinOp(op.line, op.col, op.text, left, self._unary())
        return left

    def _unary(self) -> Expr:
        if self._check("punct", "-"):
            op = self._advance()
            return Neg(op.line, op.col, self._unary())
        return self._power()

    def _power(self) -> Expr:
        base = self._primary()
        if self._check("punct", "^"):
            op = self._advance()
            return BinOp(op.line, op.col, "^", base, self._unary())
        return base

    def _primary(self) -> Expr:
        token = self._current
        if token.kind == "number":
            self._advance()
            return NumberLit(token.line, token.col, token.text)
        if token.kind == "ident":
            self._advance()
            if not self._check("punct", "("):
                return Ident(token.line, token.col, token.text)
            self._advance()
            args = []
            if not self._check("punct", ")"):
                args.append(self._expr())
                while self._check("punct", ","):
                    self._advance()
                    args.append(self._expr())
            self._expect("punct", ")")
            return Call(token.line, token.col, token.text, tuple(args))
        if self._check("punct", "("):
            self._advance()
            first = self._expr()
            if self._check("punct", ","):
                self._advance()
                second = self._expr()
                self._expect("punct", ")")
                return TupleLit(token.line, token.col, (first, second))
            self._expect("punct", ")")
            return first
        raise ParseError(f"expected an expression, found {token}", token.line, token.col)


def parse(tokens: Union[List[Token], str]) -> Script:
    if isinstance(tokens, str):
        tokens = tokenize(tokens)
    return Parser(tokens).parse_script()


def parse_expression(tokens: Union[List[Token], str]) -> Expr:
    if isinstance(tokens, str):
        tokens = tokenize(tokens)
    return Parser(tokens).parse_expression()
