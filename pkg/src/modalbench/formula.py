"""Modal formula syntax: AST nodes, parser, printer, substitution, axiom catalog.

Concrete syntax: `~` negation, `&` conjunction, `|` disjunction, `->` implication
(right-associative), `[]` box, `<>` diamond, `#f` bottom, `#t` top (sugar for
`~#f`). Precedence, tightest to loosest: {~, [], <>} > & > | > ->.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Mapping

from .errors import FormulaSyntaxError


class Formula:
    """Base class for formula nodes. All nodes are immutable and hashable."""

    __slots__ = ()


@dataclass(frozen=True, slots=True)
class Var(Formula):
    name: str

    def __repr__(self) -> str:
        return f"Var({self.name})"


@dataclass(frozen=True, slots=True)
class Bottom(Formula):
    def __repr__(self) -> str:
        return "Bottom"


@dataclass(frozen=True, slots=True)
class Not(Formula):
    body: Formula

    def __repr__(self) -> str:
        return f"Not({self.body!r})"


@dataclass(frozen=True, slots=True)
class Box(Formula):
    body: Formula

    def __repr__(self) -> str:
        return f"Box({self.body!r})"


@dataclass(frozen=True, slots=True)
class Dia(Formula):
    body: Formula

    def __repr__(self) -> str:
        return f"Dia({self.body!r})"


@dataclass(frozen=True, slots=True)
class And(Formula):
    left: Formula
    right: Formula

    def __repr__(self) -> str:
        return f"And({self.left!r}, {self.right!r})"


@dataclass(frozen=True, slots=True)
class Or(Formula):
    left: Formula
    right: Formula

    def __repr__(self) -> str:
        return f"Or({self.left!r}, {self.right!r})"


@dataclass(frozen=True, slots=True)
class Implies(Formula):
    left: Formula
    right: Formula

    def __repr__(self) -> str:
        return f"Implies({self.left!r}, {self.right!r})"


TOP = Not(Bottom())


def variables(f: Formula) -> frozenset[str]:
    """The set of propositional variable names occurring in f."""
    out: set[str] = set()
    stack = [f]
    while stack:
        node = stack.pop()
        if isinstance(node, Var):
            out.add(node.name)
        elif isinstance(node, (Not, Box, Dia)):
            stack.append(node.body)
        elif isinstance(node, (And, Or, Implies)):
            stack.append(node.left)
            stack.append(node.right)
    return frozenset(out)


def substitute(f: Formula, bindings: Mapping[str, Formula]) -> Formula:
    """Simultaneous substitution of formulas for variables.

    Unbound variables pass through unchanged; there is no capture to worry
    about since only propositional variables exist.
    """
    if isinstance(f, Var):
        return bindings.get(f.name, f)
    if isinstance(f, Bottom):
        return f
    if isinstance(f, Not):
        return Not(substitute(f.body, bindings))
    if isinstance(f, Box):
        return Box(substitute(f.body, bindings))
    if isinstance(f, Dia):
        return Dia(substitute(f.body, bindings))
    if isinstance(f, And):
        return And(substitute(f.left, bindings), substitute(f.right, bindings))
    if isinstance(f, Or):
        return Or(substitute(f.left, bindings), substitute(f.right, bindings))
    if isinstance(f, Implies):
        return Implies(substitute(f.left, bindings), substitute(f.right, bindings))
    raise TypeError(f"not a formula node: {f!r}")


def box_power(f: Formula, n: int) -> Formula:
    """Box applied n times; n = 0 returns f itself."""
    if n < 0:
        raise ValueError("box_power needs n >= 0")
    for _ in range(n):
        f = Box(f)
    return f


# --- parsing ---------------------------------------------------------------

_TOKEN_RE = re.compile(r"->|\[\]|<>|#f|#t|[~&|()]|[A-Za-z][A-Za-z0-9_]*")
_IDENT_RE = re.compile(r"[A-Za-z][A-Za-z0-9_]*")


def _tokenize(text: str) -> list[tuple[str, int]]:
    tokens = []
    pos = 0
    n = len(text)
    while pos < n:
        if text[pos].isspace():
            pos += 1
            continue
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise FormulaSyntaxError(f"unknown token {text[pos]!r}", pos)
        tokens.append((m.group(), pos))
        pos = m.end()
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    def _peek(self) -> str | None:
        return self.tokens[self.i][0] if self.i < len(self.tokens) else None

    def _take(self) -> tuple[str, int]:
        if self.i >= len(self.tokens):
            raise FormulaSyntaxError("unexpected end of input", len(self.text))
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def parse(self) -> Formula:
        f = self._implication()
        if self.i < len(self.tokens):
            tok, pos = self.tokens[self.i]
            raise FormulaSyntaxError(f"unexpected token {tok!r}", pos)
        return f

    def _implication(self) -> Formula:
        left = self._disjunction()
        if self._peek() == "->":
            self._take()
            return Implies(left, self._implication())
        return left

    def _disjunction(self) -> Formula:
        f = self._conjunction()
        while self._peek() == "|":
            self._take()
            f = Or(f, self._conjunction())
        return f

    def _conjunction(self) -> Formula:
        f = self._unary()
        while self._peek() == "&":
            self._take()
            f = And(f, self._unary())
        return f

    def _unary(self) -> Formula:
        tok = self._peek()
        if tok == "~":
            self._take()
            return Not(self._unary())
        if tok == "[]":
            self._take()
            return Box(self._unary())
        if tok == "<>":
            self._take()
            return Dia(self._unary())
        return self._atom()

    def _atom(self) -> Formula:
        tok, pos = self._take()
        if tok == "#f":
            return Bottom()
        if tok == "#t":
            return Not(Bottom())
        if tok == "(":
            f = self._implication()
            nxt, npos = self._take()
            if nxt != ")":
                raise FormulaSyntaxError(f"expected ')', got {nxt!r}", npos)
            return f
        if _IDENT_RE.fullmatch(tok):
            return Var(tok)
        raise FormulaSyntaxError(f"unexpected token {tok!r}", pos)


def parse(text: str) -> Formula:
    """Parse formula text into its unique AST under the declared precedence."""
    return _Parser(text).parse()


# --- printing --------------------------------------------------------------

def pretty(f: Formula) -> str:
    """Render with minimal parenthesization; parse(pretty(f)) == f."""
    return _render(f, 1)


def _render(f: Formula, minimum: int) -> str:
    # precedence: -> 1, | 2, & 3, prefix 4, atoms 5
    if isinstance(f, Not) and isinstance(f.body, Bottom):
        return "#t"
    if isinstance(f, Var):
        return f.name
    if isinstance(f, Bottom):
        return "#f"
    if isinstance(f, Not):
        text, prec = "~" + _render(f.body, 4), 4
    elif isinstance(f, Box):
        text, prec = "[]" + _render(f.body, 4), 4
    elif isinstance(f, Dia):
        text, prec = "<>" + _render(f.body, 4), 4
    elif isinstance(f, And):
        text, prec = f"{_render(f.left, 3)} & {_render(f.right, 4)}", 3
    elif isinstance(f, Or):
        text, prec = f"{_render(f.left, 2)} | {_render(f.right, 3)}", 2
    elif isinstance(f, Implies):
        text, prec = f"{_render(f.left, 2)} -> {_render(f.right, 1)}", 1
    else:
        raise TypeError(f"not a formula node: {f!r}")
    return f"({text})" if prec < minimum else text


def to_tree(f: Formula) -> dict:
    """Plain-data rendering of the AST, for JSON output."""
    if isinstance(f, Var):
        return {"op": "var", "name": f.name}
    if isinstance(f, Bottom):
        return {"op": "bottom"}
    if isinstance(f, Not):
        return {"op": "not", "body": to_tree(f.body)}
    if isinstance(f, Box):
        return {"op": "box", "body": to_tree(f.body)}
    if isinstance(f, Dia):
        return {"op": "dia", "body": to_tree(f.body)}
    if isinstance(f, And):
        return {"op": "and", "left": to_tree(f.left), "right": to_tree(f.right)}
    if isinstance(f, Or):
        return {"op": "or", "left": to_tree(f.left), "right": to_tree(f.right)}
    if isinstance(f, Implies):
        return {"op": "implies", "left": to_tree(f.left), "right": to_tree(f.right)}
    raise TypeError(f"not a formula node: {f!r}")


# --- axiom catalog ----------------------------------------------------------

ENTRY_ORDER = ("A1", "A2", "B1", "B2", "C1", "A", "B", "C", "D", "E", "F")

# Entry A bundles the five auxiliary conjuncts into its antecedent; its
# consequent closes the parenthesis after `q2`.
_CATALOG_SOURCE = {
    "A1": "[](q1 -> r)",
    "A2": "[](q2 -> r)",
    "B1": "[](r -> <>q1)",
    "B2": "[](r -> <>q2)",
    "C1": "[]~(q1 & q2)",
    "A": ("r & []p & ~[][]p & [](q1 -> r) & [](q2 -> r)"
          " & [](r -> <>q1) & [](r -> <>q2) & []~(q1 & q2)"
          " -> <>(r & [](r -> q1 | q2))"),
    "B": "[](p -> q) -> ([]p -> []q)",
    "C": "[]p -> p",
    "D": "(p & <><>q) -> (<>q | <><>(q & <>p))",
    "E": "([]p & ~[][]p) -> <>([][]p & ~[][][]p)",
    "F": "[]p -> [][]p",
}


@dataclass(frozen=True, slots=True)
class AxiomCatalog:
    """The eleven named formulas the workbench revolves around."""

    A1: Formula
    A2: Formula
    B1: Formula
    B2: Formula
    C1: Formula
    A: Formula
    B: Formula
    C: Formula
    D: Formula
    E: Formula
    F: Formula

    def entries(self) -> dict[str, Formula]:
        return {name: getattr(self, name) for name in ENTRY_ORDER}

    def variable_inventory(self) -> dict[str, frozenset[str]]:
        return {name: variables(f) for name, f in self.entries().items()}


@lru_cache(maxsize=1)
def axiom_catalog() -> AxiomCatalog:
    return AxiomCatalog(**{name: parse(src) for name, src in _CATALOG_SOURCE.items()})
