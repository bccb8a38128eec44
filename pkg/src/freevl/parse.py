"""Parser and printer for Boolean terms and formal sums.

Grammar (whitespace-insensitive)::

    elem   := ident | "0" | "1" | "!" elem | elem "&" elem | elem "|" elem | "(" elem ")"
    sum    := ["+" | "-"] term { ("+" | "-") term }
    term   := [rational "*"] elem
    rational := integer ["/" positive-integer]

Precedence is ``!`` > ``&`` > ``|``; binary operators associate to the left.
Identifiers resolve against the algebra: ``g1..gn`` name the generators of a
free algebra and ``a1..aN`` name atoms (1-based) of any algebra.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .boolean import BaElement, BooleanAlgebra
from .errors import ParseError
from .lattice import FormalSum


@dataclass(frozen=True)
class Gen:
    name: str


@dataclass(frozen=True)
class Bottom:
    pass


@dataclass(frozen=True)
class Top:
    pass


@dataclass(frozen=True)
class Not:
    operand: "ElemAst"


@dataclass(frozen=True)
class Meet:
    left: "ElemAst"
    right: "ElemAst"


@dataclass(frozen=True)
class Join:
    left: "ElemAst"
    right: "ElemAst"


ElemAst = Union[Gen, Bottom, Top, Not, Meet, Join]


@dataclass(frozen=True)
class Term:
    coeff: Fraction
    element: ElemAst


@dataclass(frozen=True)
class SumAst:
    terms: tuple[Term, ...]


def names_for(algebra: BooleanAlgebra) -> dict[str, BaElement]:
    names = {f"a{i + 1}": algebra.atom(i) for i in range(algebra.atom_count)}
    for label, g in zip(algebra.generator_labels, algebra.generators):
        names[label] = g
    return names


_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<ident>[A-Za-z_][A-Za-z0-9_]*)|(?P<sym>[!&|()+\-*/]))")


@dataclass(frozen=True)
class _Tok:
    kind: str
    text: str
    pos: int


def tokenize(text: str) -> list[_Tok]:
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos].isspace():
            pos += 1
            continue
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
        kind = m.lastgroup
        start = m.start(kind)
        tokens.append(_Tok(kind, m.group(kind), start))
        pos = m.end()
    tokens.append(_Tok("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, names: set[str] | None):
        self.tokens = tokenize(text)
        self.i = 0
        self.names = names

    @property
    def tok(self) -> _Tok:
        return self.tokens[self.i]

    def peek(self, k: int = 1) -> _Tok:
        return self.tokens[min(self.i + k, len(self.tokens) - 1)]

    def advance(self) -> _Tok:
        t = self.tokens[self.i]
        self.i += 1
        return t

    def expect(self, text: str) -> _Tok:
        if self.tok.text != text or self.tok.kind == "end":
            found = self.tok.text or "end of input"
            raise ParseError(f"expected {text!r}, found {found!r}", self.tok.pos)
        return self.advance()

    def finish(self) -> None:
        if self.tok.kind != "end":
            if self.tok.text == ")":
                raise ParseError("unbalanced parentheses: unexpected ')'", self.tok.pos)
            raise ParseError(f"unexpected {self.tok.text!r}", self.tok.pos)

    # elements: precedence climbing over | (lowest) and & ; ! is prefix
    def element(self) -> ElemAst:
        node = self.meet()
        while self.tok.text == "|":
            self.advance()
            node = Join(node, self.meet())
        return node

    def meet(self) -> ElemAst:
        node = self.unary()
        while self.tok.text == "&":
            self.advance()
            node = Meet(node, self.unary())
        return node

    def unary(self) -> ElemAst:
        if self.tok.text == "!":
            self.advance()
            return Not(self.unary())
        return self.primary()

    def primary(self) -> ElemAst:
        t = self.tok
        if t.kind == "ident":
            if self.names is not None and t.text not in self.names:
                raise ParseError(f"unknown generator {t.text!r}", t.pos)
            self.advance()
            return Gen(t.text)
        if t.kind == "int":
            if t.text == "0":
                self.advance()
                return Bottom()
            if t.text == "1":
                self.advance()
                return Top()
            raise ParseError(f"element literal must be 0 or 1, found {t.text!r} (coefficients need '*')", t.pos)
        if t.text == "(":
            open_pos = t.pos
            self.advance()
            node = self.element()
            if self.tok.text != ")":
                raise ParseError("unbalanced parentheses: missing ')'", open_pos)
            self.advance()
            return node
        found = t.text or "end of input"
        raise ParseError(f"expected an element, found {found!r}", t.pos)

    def rational(self) -> Fraction:
        num = self.advance()
        if self.tok.text == "/":
            slash = self.advance()
            if self.tok.kind != "int":
                raise ParseError("malformed rational: denominator must be a positive integer", slash.pos)
            den = self.advance()
            if int(den.text) == 0:
                raise ParseError("malformed rational: zero denominator", den.pos)
            value = Fraction(int(num.text), int(den.text))
        else:
            value = Fraction(int(num.text))
        if self.tok.text != "*":
            raise ParseError("malformed rational: coefficient must be followed by '*'", self.tok.pos)
        self.advance()
        return value

    def term(self, sign: int) -> Term:
        t = self.tok
        is_coeff = t.kind == "int" and self.peek().text in ("*", "/")
        coeff = self.rational() if is_coeff else Fraction(1)
        return Term(sign * coeff, self.element())

    def sum(self) -> SumAst:
        sign = 1
        if self.tok.text in ("+", "-"):
            sign = -1 if self.advance().text == "-" else 1
        terms = [self.term(sign)]
        while self.tok.text in ("+", "-"):
            sign = -1 if self.advance().text == "-" else 1
            terms.append(self.term(sign))
        return SumAst(tuple(terms))


def _names(algebra: BooleanAlgebra | None) -> set[str] | None:
    return None if algebra is None else set(names_for(algebra))


def parse_element(text: str, algebra: BooleanAlgebra | None = None) -> ElemAst:
    p = _Parser(text, _names(algebra))
    node = p.element()
    p.finish()
    return node


def parse_sum(text: str, algebra: BooleanAlgebra | None = None) -> SumAst:
    p = _Parser(text, _names(algebra))
    node = p.sum()
    p.finish()
    return node


def parse(text: str, algebra: BooleanAlgebra | None = None, kind: str = "sum"):
    if kind == "sum":
        return parse_sum(text, algebra)
    if kind == "element":
        return parse_element(text, algebra)
    raise ValueError(f"unknown expression kind {kind!r}")


_PREC = {Join: 1, Meet: 2}


def print_element(node: ElemAst, parent: int = 0) -> str:
    if isinstance(node, Gen):
        return node.name
    if isinstance(node, Bottom):
        return "0"
    if isinstance(node, Top):
        return "1"
    if isinstance(node, Not):
        return "!" + print_element(node.operand, 3)
    prec = _PREC[type(node)]
    op = " | " if isinstance(node, Join) else " & "
    # right operand one level tighter so left-associative trees print back unchanged
    text = print_element(node.left, prec) + op + print_element(node.right, prec + 1)
    return f"({text})" if prec < parent else text


def print_sum(node: SumAst) -> str:
    out = []
    for k, term in enumerate(node.terms):
        c = term.coeff
        # parenthesize binary bodies for readability; the tree is unchanged either way
        body = f"{abs(c)}*{print_element(term.element, 3)}"
        if k == 0:
            out.append(("-" if c < 0 else "") + body)
        else:
            out.append(("- " if c < 0 else "+ ") + body)
    return " ".join(out)


def eval_element(node: ElemAst, algebra: BooleanAlgebra) -> BaElement:
    if isinstance(node, Gen):
        names = names_for(algebra)
        if node.name not in names:
            raise ParseError(f"unknown generator {node.name!r}", 0)
        return names[node.name]
    if isinstance(node, Bottom):
        return algebra.bottom
    if isinstance(node, Top):
        return algebra.top
    if isinstance(node, Not):
        return eval_element(node.operand, algebra).complement()
    left, right = eval_element(node.left, algebra), eval_element(node.right, algebra)
    return left.meet(right) if isinstance(node, Meet) else left.join(right)


def eval_sum(node: SumAst, algebra: BooleanAlgebra) -> FormalSum:
    return FormalSum(algebra, [(eval_element(t.element, algebra), t.coeff) for t in node.terms])


def parse_formal_sum(text: str, algebra: BooleanAlgebra) -> FormalSum:
    return eval_sum(parse_sum(text, algebra), algebra)


def parse_ba_element(text: str, algebra: BooleanAlgebra) -> BaElement:
    return eval_element(parse_element(text, algebra), algebra)
