"""Concrete syntax: expression grammar, canonical printer and JSON wire form.

Grammar (whitespace between tokens is ignored)::

    expr := sum
    sum  := prod (("+" | "(+)") prod)*        left-associative
    prod := atom (("*" | "(*)") atom)*        left-associative
    atom := "0" | numeral | "w" | "w^" atom | "(" expr ")"

``+``/``*`` are ordinal addition and multiplication, ``(+)``/``(*)`` the
Hessenberg sum and product.  ``w^`` binds tightest, so ``w^w^2`` is
``w^(w^2)`` and ``w^2+1`` is ``(w^2)+1``.
"""
from __future__ import annotations

import dataclasses
import json
import re
from typing import Union

from . import arith
from ._config import limits
from .cnf import ONE, OMEGA, ZERO, CnfOrdinal, from_nat, lt, omega_pow
from .errors import DepthExceeded, JsonError, NotInNormalForm, NumeralTooLarge, ParseError
from .tree import OmegaPlus, Tree


@dataclasses.dataclass(frozen=True)
class Zero:
    pass


@dataclasses.dataclass(frozen=True)
class Nat:
    n: int


@dataclasses.dataclass(frozen=True)
class Omega:
    pass


@dataclasses.dataclass(frozen=True)
class OmegaPow:
    exp: "Expr"


@dataclasses.dataclass(frozen=True)
class Add:
    left: "Expr"
    right: "Expr"


@dataclasses.dataclass(frozen=True)
class Mul:
    left: "Expr"
    right: "Expr"


@dataclasses.dataclass(frozen=True)
class HSum:
    left: "Expr"
    right: "Expr"


@dataclasses.dataclass(frozen=True)
class HMul:
    left: "Expr"
    right: "Expr"


Expr = Union[Zero, Nat, Omega, OmegaPow, Add, Mul, HSum, HMul]

_TOKEN = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<hsum>\(\+\))
  | (?P<hmul>\(\*\))
  | (?P<wpow>w\s*\^)
  | (?P<w>w)
  | (?P<num>\d+)
  | (?P<plus>\+)
  | (?P<times>\*)
  | (?P<lparen>\()
  | (?P<rparen>\))
    """,
    re.VERBOSE,
)


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
        if m.lastgroup != "ws":
            tokens.append((m.lastgroup, m.group(), pos))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self) -> str:
        return self.tokens[self.i][0]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, kind: str):
        tok = self.take()
        if tok[0] != kind:
            what = tok[1] or "end of input"
            raise ParseError(f"expected {kind}, found {what!r}", tok[2])
        return tok

    def parse(self) -> Expr:
        e = self.sum()
        self.expect("end")
        return e

    def sum(self) -> Expr:
        e = self.prod()
        while self.peek() in ("plus", "hsum"):
            op = self.take()[0]
            rhs = self.prod()
            e = Add(e, rhs) if op == "plus" else HSum(e, rhs)
        return e

    def prod(self) -> Expr:
        e = self.atom()
        while self.peek() in ("times", "hmul"):
            op = self.take()[0]
            rhs = self.atom()
            e = Mul(e, rhs) if op == "times" else HMul(e, rhs)
        return e

    def atom(self) -> Expr:
        kind, text, pos = self.take()
        if kind == "num":
            cap = limits().max_numeral
            digits = text.lstrip("0")
            if len(digits) > len(str(cap)) or (digits and int(digits) > cap):
                raise NumeralTooLarge(f"numeral {text} at position {pos} exceeds the cap {cap}")
            return Zero() if text == "0" else Nat(int(digits or "0"))
        if kind == "w":
            return Omega()
        if kind == "wpow":
            return OmegaPow(self.atom())
        if kind == "lparen":
            e = self.sum()
            self.expect("rparen")
            return e
        raise ParseError(f"unexpected {text or 'end of input'!r}", pos)


def parse_expr(text: str) -> Expr:
    try:
        return _Parser(text).parse()
    except RecursionError:
        raise DepthExceeded("expression nested too deeply") from None


def eval_expr(e: Expr) -> CnfOrdinal:
    match e:
        case Zero():
            return ZERO
        case Nat(n):
            return from_nat(n)
        case Omega():
            return OMEGA
        case OmegaPow(x):
            return omega_pow(eval_expr(x))
        case Add(x, y):
            return arith.add(eval_expr(x), eval_expr(y))
        case Mul(x, y):
            return arith.mul(eval_expr(x), eval_expr(y))
        case HSum(x, y):
            return arith.hsum_cnf(eval_expr(x), eval_expr(y))
        case HMul(x, y):
            return arith.hmul_cnf(eval_expr(x), eval_expr(y))
    raise TypeError(f"not an expression: {e!r}")


def evaluate(text: str) -> CnfOrdinal:
    """Parse and evaluate in one go."""
    try:
        return eval_expr(parse_expr(text))
    except RecursionError:
        raise DepthExceeded("expression nested too deeply") from None


def print_canonical(a: CnfOrdinal) -> str:
    """Coefficient-free rendering, e.g. ``w^w + w + 1``.

    A summand ``ω^e`` prints as ``1`` for ``e = 0``, ``w`` for ``e = 1`` and
    ``w^A`` otherwise, with ``A`` parenthesised unless it is the single
    token ``w``.
    """
    if a.is_zero():
        return "0"
    parts = []
    for e in a.exponents:
        if e.is_zero():
            parts.append("1")
        elif e == ONE:
            parts.append("w")
        else:
            inner = print_canonical(e)
            parts.append("w^" + (inner if inner == "w" else f"({inner})"))
    return " + ".join(parts)


def _to_lists(a: CnfOrdinal) -> list:
    return [_to_lists(e) for e in a.exponents]


def to_json(a: CnfOrdinal) -> str:
    """Hereditary-list encoding: ``0 = []``, ``1 = [[]]``, ``ω + 1 = [[[]],[]]``."""
    return json.dumps(_to_lists(a), separators=(",", ":"))


def _from_lists(value, path: tuple[str, ...]) -> CnfOrdinal:
    if not isinstance(value, list):
        raise JsonError(f"expected a JSON array at {'/'.join(path) or 'root'}")
    exps = [_from_lists(v, path + (str(i),)) for i, v in enumerate(value)]
    for i in range(len(exps) - 1):
        if lt(exps[i], exps[i + 1]):
            raise NotInNormalForm(
                f"exponents {i} and {i + 1} increase at {'/'.join(path) or 'root'}", path
            )
    return CnfOrdinal._make(tuple(exps))


def from_json(text: str) -> CnfOrdinal:
    try:
        value = json.loads(text)
    except json.JSONDecodeError as exc:
        raise JsonError(str(exc)) from None
    except RecursionError:
        raise DepthExceeded("JSON nested too deeply") from None
    try:
        return _from_lists(value, ())
    except RecursionError:
        raise DepthExceeded("JSON nested too deeply") from None


def render_tree(t: Tree) -> str:
    """Fully explicit tree form: ``w^(E) + R``, ending in ``0``."""
    parts = []
    while isinstance(t, OmegaPlus):
        parts.append(f"w^({render_tree(t.exp)})")
        t = t.rest
    return " + ".join(parts + ["0"])
