"""A small expression language for elements of R_alpha.

Grammar (whitespace is ignored)::

    expr   := term (('+' | '-') term)*
    term   := factor ('*' factor)*
    factor := '-' factor | INT | atom | 'tau' '(' expr ')' | '(' expr ')'
    atom   := 'e' '(' INT (',' INT)* ')' | 'y' INT | 's' INT
            | 'psi' '[' [INT (',' INT)*] ']' | 'y' '[' INT (',' INT)* ']'

``psi[r1,...]`` is a product of crossings and ``y[m1,...,md]`` a dot
monomial, so every rendered element parses back to itself.

>>> from klrcell.combinatorics import RootVector
>>> str(evaluate(parse("s1*s1*e(1,2)"), RootVector.parse("1:1,2:1")))
'(1)*y[1,0]*e(1,2) + (-1)*y[0,1]*e(1,2)'
>>> parse("y1*(")
Traceback (most recent call last):
...
klrcell.expr.ParseError: line 1, column 4: '(' is never closed
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .combinatorics import RootVector, format_word
from .engine import Element, KLRAlgebra, get_algebra

__all__ = [
    "ParseError", "EvalError", "Int", "Atom", "Sum", "Product", "Neg", "Tau", "Node",
    "parse", "evaluate", "eval_text",
]


class ParseError(ValueError):
    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.message = message
        self.line = line
        self.column = column


class EvalError(ValueError):
    pass


@dataclass(frozen=True)
class Int:
    value: int


@dataclass(frozen=True)
class Atom:
    kind: str  # "e", "y", "s", "psi" or "dots"
    args: tuple[int, ...]
    pos: tuple[int, int] = (1, 1)


@dataclass(frozen=True)
class Sum:
    terms: tuple[tuple[int, "Node"], ...]  # (sign, node)


@dataclass(frozen=True)
class Product:
    factors: tuple["Node", ...]


@dataclass(frozen=True)
class Neg:
    arg: "Node"


@dataclass(frozen=True)
class Tau:
    arg: "Node"


Node = Union[Int, Atom, Sum, Product, Neg, Tau]


@dataclass(frozen=True)
class Token:
    kind: str  # "int", "name", "op", "end"
    text: str
    line: int
    col: int


def _tokenize(src: str) -> list[Token]:
    out = []
    line, col = 1, 1
    k = 0
    while k < len(src):
        ch = src[k]
        if ch == "\n":
            line, col, k = line + 1, 1, k + 1
            continue
        if ch.isspace():
            col, k = col + 1, k + 1
            continue
        start = k
        if ch.isdigit():
            while k < len(src) and src[k].isdigit():
                k += 1
            out.append(Token("int", src[start:k], line, col))
        elif ch.isalpha():
            while k < len(src) and src[k].isalpha():
                k += 1
            out.append(Token("name", src[start:k], line, col))
        elif ch in "+-*(),[]":
            k += 1
            out.append(Token("op", ch, line, col))
        else:
            raise ParseError(f"unexpected character {ch!r}", line, col)
        col += k - start
    out.append(Token("end", "", line, col))
    return out


class _Parser:
    def __init__(self, src: str):
        self.tokens = _tokenize(src)
        self.k = 0
        self.open: list[Token] = []  # unclosed brackets, innermost last

    @property
    def tok(self) -> Token:
        return self.tokens[self.k]

    def advance(self) -> Token:
        t = self.tokens[self.k]
        self.k += 1
        return t

    def error(self, message: str, tok: Token | None = None):
        tok = tok or self.tok
        if tok.kind == "end" and self.open:
            t = self.open[-1]
            raise ParseError(f"{t.text!r} is never closed", t.line, t.col)
        raise ParseError(message, tok.line, tok.col)

    def expect(self, text: str) -> Token:
        if self.tok.text != text or self.tok.kind not in ("op",):
            found = "end of input" if self.tok.kind == "end" else repr(self.tok.text)
            self.error(f"expected {text!r}, found {found}")
        return self.advance()

    def open_bracket(self, text: str) -> None:
        self.open.append(self.expect(text))

    def close_bracket(self, text: str) -> None:
        self.expect(text)
        self.open.pop()

    def parse(self) -> Node:
        node = self.expr()
        if self.tok.kind != "end":
            self.error(f"unexpected {self.tok.text!r}")
        return node

    def expr(self) -> Node:
        terms = [(1, self.term())]
        while self.tok.kind == "op" and self.tok.text in "+-":
            sign = 1 if self.advance().text == "+" else -1
            terms.append((sign, self.term()))
        return terms[0][1] if len(terms) == 1 else Sum(tuple(terms))

    def term(self) -> Node:
        factors = [self.factor()]
        while self.tok.kind == "op" and self.tok.text == "*":
            self.advance()
            factors.append(self.factor())
        return factors[0] if len(factors) == 1 else Product(tuple(factors))

    def integer(self) -> int:
        if self.tok.kind != "int":
            found = "end of input" if self.tok.kind == "end" else repr(self.tok.text)
            self.error(f"expected an integer, found {found}")
        return int(self.advance().text)

    def int_list(self, close: str, allow_empty: bool = False) -> tuple[int, ...]:
        if allow_empty and self.tok.text == close and self.tok.kind == "op":
            return ()
        vals = [self.integer()]
        while self.tok.kind == "op" and self.tok.text == ",":
            self.advance()
            vals.append(self.integer())
        return tuple(vals)

    def factor(self) -> Node:
        t = self.tok
        if t.kind == "op" and t.text == "-":
            self.advance()
            return Neg(self.factor())
        if t.kind == "int":
            return Int(int(self.advance().text))
        if t.kind == "op" and t.text == "(":
            self.open_bracket("(")
            node = self.expr()
            self.close_bracket(")")
            return node
        if t.kind == "name":
            return self.named(self.advance())
        found = "end of input" if t.kind == "end" else repr(t.text)
        self.error(f"expected a factor, found {found}")

    def named(self, t: Token) -> Node:
        name, pos = t.text, (t.line, t.col)
        if name == "tau":
            self.open_bracket("(")
            node = self.expr()
            self.close_bracket(")")
            return Tau(node)
        if name == "e":
            self.open_bracket("(")
            word = self.int_list(")")
            self.close_bracket(")")
            return Atom("e", word, pos)
        if name == "psi":
            self.open_bracket("[")
            seq = self.int_list("]", allow_empty=True)
            self.close_bracket("]")
            return Atom("psi", seq, pos)
        if name in ("y", "s"):
            if name == "y" and self.tok.kind == "op" and self.tok.text == "[":
                self.open_bracket("[")
                m = self.int_list("]")
                self.close_bracket("]")
                return Atom("dots", m, pos)
            if self.tok.kind != "int":
                self.error(f"{name!r} needs an index")
            return Atom(name, (self.integer(),), pos)
        self.error(f"unknown name {name!r}", t)


def parse(src: str) -> Node:
    """Parse an expression; raises :class:`ParseError` with line and column."""
    return _Parser(src).parse()


def _atom(R: KLRAlgebra, a: Atom) -> Element:
    d = R.d
    where = f"at line {a.pos[0]}, column {a.pos[1]}"
    if a.kind == "e":
        if a.args not in R.word_set:
            raise EvalError(f"e({format_word(a.args)}) {where}: the word does not have content {R.alpha}")
        return R.e(a.args)
    if a.kind == "y":
        r = a.args[0]
        if not 1 <= r <= d:
            raise EvalError(f"y{r} {where}: dot index must be in 1..{d}")
        return R.y(r)
    if a.kind == "s":
        r = a.args[0]
        if not 1 <= r < d:
            raise EvalError(f"s{r} {where}: crossing index must be in 1..{d - 1}")
        return R.psi(r)
    if a.kind == "psi":
        for r in a.args:
            if not 1 <= r < d:
                raise EvalError(f"psi[...] {where}: crossing index {r} not in 1..{d - 1}")
        return R.psi_word(a.args)
    if a.kind == "dots":
        if len(a.args) != d:
            raise EvalError(f"y[...] {where}: needs {d} exponents, got {len(a.args)}")
        return R.dots(a.args)
    raise EvalError(f"unknown atom {a.kind!r}")


def evaluate(node: Node, alpha: RootVector) -> Element:
    """Evaluate to a normal-form element of ``R_alpha``."""
    R = get_algebra(alpha)

    def go(n: Node) -> Element:
        if isinstance(n, Int):
            return R.one() * n.value
        if isinstance(n, Atom):
            return _atom(R, n)
        if isinstance(n, Neg):
            return -go(n.arg)
        if isinstance(n, Tau):
            return R.tau(go(n.arg))
        if isinstance(n, Sum):
            out = R.zero()
            for sign, t in n.terms:
                out = out + go(t) * sign
            return out
        if isinstance(n, Product):
            out = go(n.factors[0])
            for f in n.factors[1:]:
                out = out * go(f)
            return out
        raise EvalError(f"unknown node {n!r}")

    return go(node)


def eval_text(src: str, alpha: RootVector) -> Element:
    return evaluate(parse(src), alpha)
