"""Tokenizer, recursive-descent parser and dual-number evaluator for math expressions.

Grammar (lowest to highest precedence)::

    expr  := term (('+' | '-') term)*
    term  := unary (('*' | '/') unary)*
    unary := '-' unary | power
    power := atom ('^' unary)?
    atom  := number | ident | ident '(' expr (',' expr)? ')' | '(' expr ')'

``^`` is right-associative and binds tighter than unary minus, so ``-x^2``
is ``-(x^2)`` and ``2^3^2`` is ``2^(3^2)``.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from numbers import Real
from typing import Mapping, Union

from . import dual as D
from .dual import Dual
from .errors import DomainError, EvaluationError, ParseError

CONSTANTS = {"pi": math.pi, "e": math.e}

FUNCTION_ARITY: dict[str, tuple[int, ...]] = {name: (1,) for name in D.FUNCTIONS}
FUNCTION_ARITY.update({"abs": (1,), "conj": (1,), "log": (1, 2)})


@dataclass(frozen=True)
class Token:
    kind: str
    lexeme: str
    position: int


_PUNCT = {
    "+": "plus", "-": "minus", "*": "star", "/": "slash", "^": "caret",
    "(": "lparen", ")": "rparen", ",": "comma",
}

_TOKEN_RE = re.compile(
    r"(?P<ws>\s+)"
    r"|(?P<number>(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)"
    r"|(?P<identifier>[A-Za-z_][A-Za-z_0-9]*)"
    r"|(?P<punct>[-+*/^(),])"
)


def tokenize(source: str) -> list[Token]:
    tokens = []
    pos = 0
    while pos < len(source):
        m = _TOKEN_RE.match(source, pos)
        if m is None:
            raise ParseError(f"unexpected character {source[pos]!r}", pos)
        kind = m.lastgroup
        if kind == "punct":
            kind = _PUNCT[m.group()]
        if kind != "ws":
            tokens.append(Token(kind, m.group(), pos))
        pos = m.end()
    return tokens


# syntax tree

@dataclass(frozen=True)
class NumberLit:
    value: float
    pos: int = 0


@dataclass(frozen=True)
class Variable:
    name: str
    pos: int = 0


@dataclass(frozen=True)
class UnaryNeg:
    child: "ExprNode"
    pos: int = 0


@dataclass(frozen=True)
class BinaryOp:
    op: str
    left: "ExprNode"
    right: "ExprNode"
    pos: int = 0


@dataclass(frozen=True)
class Call:
    name: str
    args: tuple
    pos: int = 0


ExprNode = Union[NumberLit, Variable, UnaryNeg, BinaryOp, Call]


class _Parser:
    def __init__(self, tokens: list[Token], end: int):
        self.tokens = tokens
        self.i = 0
        self.end = end

    def peek(self) -> Token | None:
        return self.tokens[self.i] if self.i < len(self.tokens) else None

    def here(self) -> int:
        tok = self.peek()
        return tok.position if tok is not None else self.end

    def take(self, kind: str) -> Token:
        tok = self.peek()
        if tok is None or tok.kind != kind:
            found = "end of input" if tok is None else repr(tok.lexeme)
            raise ParseError(f"expected {kind}, found {found}", self.here())
        self.i += 1
        return tok

    def accept(self, *kinds: str) -> Token | None:
        tok = self.peek()
        if tok is not None and tok.kind in kinds:
            self.i += 1
            return tok
        return None

    def expr(self) -> ExprNode:
        node = self.term()
        while (tok := self.accept("plus", "minus")) is not None:
            node = BinaryOp(tok.lexeme, node, self.term(), tok.position)
        return node

    def term(self) -> ExprNode:
        node = self.unary()
        while (tok := self.accept("star", "slash")) is not None:
            node = BinaryOp(tok.lexeme, node, self.unary(), tok.position)
        return node

    def unary(self) -> ExprNode:
        tok = self.accept("minus")
        if tok is not None:
            return UnaryNeg(self.unary(), tok.position)
        return self.power()

    def power(self) -> ExprNode:
        base = self.atom()
        tok = self.accept("caret")
        if tok is not None:
            return BinaryOp("^", base, self.unary(), tok.position)
        return base

    def atom(self) -> ExprNode:
        tok = self.peek()
        if tok is None:
            raise ParseError("unexpected end of input", self.end)
        if tok.kind == "number":
            self.i += 1
            return NumberLit(float(tok.lexeme), tok.position)
        if tok.kind == "lparen":
            self.i += 1
            node = self.expr()
            if self.peek() is None:
                raise ParseError("unbalanced parenthesis: missing ')'", self.end)
            self.take("rparen")
            return node
        if tok.kind == "identifier":
            self.i += 1
            nxt = self.peek()
            if nxt is not None and nxt.kind == "lparen":
                return self.call(tok)
            if tok.lexeme in FUNCTION_ARITY:
                raise ParseError(f"function {tok.lexeme!r} used without arguments", tok.position)
            return Variable(tok.lexeme, tok.position)
        raise ParseError(f"unexpected token {tok.lexeme!r}", tok.position)

    def call(self, name: Token) -> Call:
        if name.lexeme not in FUNCTION_ARITY:
            raise ParseError(f"unknown function {name.lexeme!r}", name.position)
        self.take("lparen")
        args = [self.expr()]
        if self.accept("comma"):
            args.append(self.expr())
        if self.peek() is None:
            raise ParseError("unbalanced parenthesis: missing ')'", self.end)
        self.take("rparen")
        if len(args) not in FUNCTION_ARITY[name.lexeme]:
            raise ParseError(
                f"function {name.lexeme!r} takes {' or '.join(map(str, FUNCTION_ARITY[name.lexeme]))} "
                f"argument(s), got {len(args)}",
                name.position,
            )
        return Call(name.lexeme, tuple(args), name.position)


def parse(tokens: list[Token], source_length: int | None = None) -> ExprNode:
    """Build a syntax tree from a token list.

    ``source_length`` positions errors that occur at end of input; it defaults
    to the end of the last token.
    """
    if source_length is None:
        source_length = tokens[-1].position + len(tokens[-1].lexeme) if tokens else 0
    if not tokens:
        raise ParseError("empty expression", 0)
    p = _Parser(tokens, source_length)
    node = p.expr()
    tok = p.peek()
    if tok is not None:
        if tok.kind == "rparen":
            raise ParseError("unbalanced parenthesis: unexpected ')'", tok.position)
        raise ParseError(f"unexpected token {tok.lexeme!r}", tok.position)
    return node


def parse_expression(source: str) -> ExprNode:
    return parse(tokenize(source), len(source))


def free_variables(node: ExprNode) -> set[str]:
    if isinstance(node, Variable):
        return set() if node.name in CONSTANTS else {node.name}
    if isinstance(node, NumberLit):
        return set()
    if isinstance(node, UnaryNeg):
        return free_variables(node.child)
    if isinstance(node, BinaryOp):
        return free_variables(node.left) | free_variables(node.right)
    return set().union(*(free_variables(a) for a in node.args))


def to_source(node: ExprNode) -> str:
    """Fully parenthesized source text that parses back to an equal tree (positions aside)."""
    if isinstance(node, NumberLit):
        return repr(node.value)
    if isinstance(node, Variable):
        return node.name
    if isinstance(node, UnaryNeg):
        return f"(-{to_source(node.child)})"
    if isinstance(node, BinaryOp):
        return f"({to_source(node.left)} {node.op} {to_source(node.right)})"
    return f"{node.name}({', '.join(to_source(a) for a in node.args)})"


# evaluation

def _abs(z: Dual) -> Dual:
    return D.from_real(D.modulus(z))


_UNARY = dict(D.FUNCTIONS, abs=_abs, conj=D.conj)
_BINARY = {"+": D.add, "-": D.sub, "*": D.mul, "/": D.div}


def eval_dual(node: ExprNode, bindings: Mapping[str, Dual | Real] | None = None) -> Dual:
    """Evaluate ``node`` over dual numbers.

    ``bindings`` maps variable names to duals (plain reals are lifted);
    ``pi`` and ``e`` are predefined and may be shadowed. Domain errors raised
    by the arithmetic carry the offending node's source position.
    """
    env = {k: D.from_real(v) for k, v in CONSTANTS.items()}
    for k, v in (bindings or {}).items():
        env[k] = v if isinstance(v, Dual) else D.from_real(v)
    return _eval(node, env)


def _eval(node: ExprNode, env: dict[str, Dual]) -> Dual:
    if isinstance(node, NumberLit):
        return D.from_real(node.value)
    if isinstance(node, Variable):
        try:
            return env[node.name]
        except KeyError:
            raise EvaluationError(f"unbound variable {node.name!r}", node.pos) from None
    if isinstance(node, UnaryNeg):
        return D.neg(_eval(node.child, env))
    try:
        if isinstance(node, BinaryOp):
            if node.op == "^":
                p = _eval(node.right, env)
                if p.y != 0:
                    raise EvaluationError("exponent must be real-valued (dual-valued exponents are not supported)", node.pos)
                base = _eval(node.left, env)
                return D.powf(base, p.x)
            return _BINARY[node.op](_eval(node.left, env), _eval(node.right, env))
        args = [_eval(a, env) for a in node.args]
        if len(args) == 2:
            base, z = args
            if base.y != 0:
                raise DomainError("logarithm base must be real-valued", base, node.pos)
            return D.log_base(base.x, z)
        return _UNARY[node.name](args[0])
    except DomainError as err:
        if err.position is None:
            err.position = node.pos
        raise
