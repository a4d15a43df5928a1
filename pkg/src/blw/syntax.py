"""Formulas and sequents of the language with bot, top, &, |, * and ->.

Surface syntax (tightest first): ``*`` (strong conjunction), ``&``, ``|``,
``->``.  The first three associate to the left, ``->`` to the right.
Negation is written ``phi -> bot``.
"""

from __future__ import annotations

import itertools
import random
import re
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence, Union

__all__ = [
    "Formula", "Atom", "Bottom", "Top", "And", "Or", "Tensor", "Implies",
    "Sequent", "ParseError", "parse_formula", "parse_sequent", "render",
    "render_sequent", "to_prefix", "atoms_of", "depth", "subformulas",
    "tensor_fold_formulas", "enumerate_formulas", "random_formula",
]

ATOM_NAME = re.compile(r"[a-z][a-zA-Z0-9_]*\Z")


class Formula:
    """Base class of the formula AST.  Instances are immutable and hashable."""

    __slots__ = ()

    def __str__(self) -> str:
        return render(self)


@dataclass(frozen=True)
class Atom(Formula):
    name: str

    def __post_init__(self):
        if not ATOM_NAME.match(self.name) or self.name in ("bot", "top"):
            raise ValueError(f"invalid atom name {self.name!r}")


@dataclass(frozen=True)
class Bottom(Formula):
    pass


@dataclass(frozen=True)
class Top(Formula):
    pass


@dataclass(frozen=True)
class _Binary(Formula):
    left: Formula
    right: Formula
    # structural hash is cached: formulas are used as memo keys all over
    _hash: int = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "_hash", hash((type(self).__name__, self.left, self.right)))

    def __hash__(self) -> int:
        return self._hash

    def __getstate__(self):
        return (self.left, self.right)

    def __setstate__(self, state):
        object.__setattr__(self, "left", state[0])
        object.__setattr__(self, "right", state[1])
        self.__post_init__()


@dataclass(frozen=True, eq=True)
class And(_Binary):
    __hash__ = _Binary.__hash__


@dataclass(frozen=True, eq=True)
class Or(_Binary):
    __hash__ = _Binary.__hash__


@dataclass(frozen=True, eq=True)
class Tensor(_Binary):
    __hash__ = _Binary.__hash__


@dataclass(frozen=True, eq=True)
class Implies(_Binary):
    __hash__ = _Binary.__hash__


BOT = Bottom()
TOP = Top()

BINARY = (And, Or, Tensor, Implies)


@dataclass(frozen=True, init=False)
class Sequent:
    """``context |- conclusion``.  The context is an ordered tuple: position
    and multiplicity both matter."""

    context: tuple[Formula, ...]
    conclusion: Formula

    def __init__(self, context: Iterable[Formula], conclusion: Formula):
        object.__setattr__(self, "context", tuple(context))
        object.__setattr__(self, "conclusion", conclusion)

    def __str__(self) -> str:
        return render_sequent(self)


# ---------------------------------------------------------------- parsing

class ParseError(ValueError):
    def __init__(self, message: str, text: str, pos: int):
        self.text = text
        self.pos = pos
        super().__init__(f"{message} at position {pos}")


_TOKEN = re.compile(r"\s*(?:(?P<op>\|-|->|[&|*(),])|(?P<name>[a-z][a-zA-Z0-9_]*))")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while True:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos >= len(text):
            break
        m = _TOKEN.match(text, pos)
        if m is None:
            raise ParseError(f"unknown token {text[pos]!r}", text, pos)
        start = m.start("op") if m.group("op") else m.start("name")
        if m.group("op"):
            tokens.append(("op", m.group("op"), start))
        else:
            tokens.append(("name", m.group("name"), start))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self) -> tuple[str, str, int]:
        return self.tokens[self.i]

    def at(self, op: str) -> bool:
        kind, value, _ = self.peek()
        return kind == "op" and value == op

    def error(self, message: str) -> ParseError:
        kind, value, pos = self.peek()
        if kind == "end":
            return ParseError(f"{message}: unexpected end of input", self.text, pos)
        return ParseError(f"{message}: unexpected {value!r}", self.text, pos)

    def expect(self, op: str) -> None:
        if not self.at(op):
            raise self.error(f"expected {op!r}")
        self.i += 1

    def formula(self) -> Formula:
        left = self._or()
        if self.at("->"):
            self.i += 1
            return Implies(left, self.formula())
        return left

    def _left_assoc(self, op: str, cls, sub) -> Formula:
        left = sub()
        while self.at(op):
            self.i += 1
            left = cls(left, sub())
        return left

    def _or(self) -> Formula:
        return self._left_assoc("|", Or, self._and)

    def _and(self) -> Formula:
        return self._left_assoc("&", And, self._tens)

    def _tens(self) -> Formula:
        return self._left_assoc("*", Tensor, self._atom)

    def _atom(self) -> Formula:
        kind, value, _ = self.peek()
        if kind == "name":
            self.i += 1
            if value == "bot":
                return BOT
            if value == "top":
                return TOP
            return Atom(value)
        if self.at("("):
            self.i += 1
            inner = self.formula()
            self.expect(")")
            return inner
        raise self.error("expected a formula")

    def finish(self) -> None:
        if self.peek()[0] != "end":
            raise self.error("trailing input")


def parse_formula(text: str) -> Formula:
    """Parse one formula; raises ParseError with the offending position."""
    p = _Parser(text)
    f = p.formula()
    p.finish()
    return f


def parse_sequent(text: str) -> Sequent:
    """Parse ``A1, ..., An |- B``; the context may be empty."""
    p = _Parser(text)
    turnstiles = [t for t in p.tokens if t[0] == "op" and t[1] == "|-"]
    if not turnstiles:
        raise ParseError("missing '|-'", text, len(text))
    if len(turnstiles) > 1:
        raise ParseError("more than one '|-'", text, turnstiles[1][2])
    context = []
    if not p.at("|-"):
        context.append(p.formula())
        while p.at(","):
            p.i += 1
            context.append(p.formula())
    p.expect("|-")
    conclusion = p.formula()
    p.finish()
    return Sequent(context, conclusion)


# --------------------------------------------------------------- printing

_PREC = {Implies: 1, Or: 2, And: 3, Tensor: 4}
_SYMBOL = {Implies: "->", Or: "|", And: "&", Tensor: "*"}


def _prec(f: Formula) -> int:
    return _PREC.get(type(f), 5)


def render(f: Formula) -> str:
    """Render with the fewest parentheses that still re-parse to ``f``."""
    if isinstance(f, Atom):
        return f.name
    if isinstance(f, Bottom):
        return "bot"
    if isinstance(f, Top):
        return "top"
    level = _PREC[type(f)]
    left, right = render(f.left), render(f.right)
    if isinstance(f, Implies):
        if _prec(f.left) <= level:
            left = f"({left})"
    else:
        if _prec(f.left) < level:
            left = f"({left})"
        if _prec(f.right) <= level:
            right = f"({right})"
    return f"{left} {_SYMBOL[type(f)]} {right}"


def render_sequent(s: Sequent) -> str:
    if not s.context:
        return f"|- {render(s.conclusion)}"
    return f"{', '.join(render(g) for g in s.context)} |- {render(s.conclusion)}"


def to_prefix(f: Formula) -> str:
    """Nested constructor form, e.g. ``Implies(Tensor(p,q),r)``."""
    if isinstance(f, Atom):
        return f.name
    if isinstance(f, Bottom):
        return "Bottom"
    if isinstance(f, Top):
        return "Top"
    return f"{type(f).__name__}({to_prefix(f.left)},{to_prefix(f.right)})"


# ------------------------------------------------------------ traversals

def subformulas(f: Formula) -> Iterator[Formula]:
    """Pre-order, left to right, duplicates included."""
    stack = [f]
    while stack:
        g = stack.pop()
        yield g
        if isinstance(g, BINARY):
            stack.append(g.right)
            stack.append(g.left)


def atoms_of(x: Union[Formula, Sequent]) -> tuple[str, ...]:
    """Distinct atom names in first-occurrence order."""
    formulas: Sequence[Formula]
    if isinstance(x, Sequent):
        formulas = (*x.context, x.conclusion)
    else:
        formulas = (x,)
    seen: dict[str, None] = {}
    for f in formulas:
        for g in subformulas(f):
            if isinstance(g, Atom):
                seen.setdefault(g.name)
    return tuple(seen)


def depth(f: Formula) -> int:
    """Height of the tree; atoms and constants have depth 1."""
    if isinstance(f, BINARY):
        return 1 + max(depth(f.left), depth(f.right))
    return 1


def tensor_fold_formulas(formulas: Sequence[Formula]) -> Formula:
    """Left-nested ``g1 * ... * gn``; ``top`` for the empty sequence."""
    if not formulas:
        return TOP
    acc = formulas[0]
    for g in formulas[1:]:
        acc = Tensor(acc, g)
    return acc


# ------------------------------------------------------------ generation

def enumerate_formulas(atoms: Sequence[str], max_depth: int,
                       connectives: Sequence[type] = BINARY,
                       constants: bool = True) -> list[Formula]:
    """All formulas of depth <= max_depth, each exactly once, in a canonical
    order: by depth, then connective, then children in enumeration order."""
    leaves: list[Formula] = [Atom(a) for a in atoms]
    if constants:
        leaves += [BOT, TOP]
    layers = [leaves]          # layers[d] = formulas of depth exactly d+1
    upto = list(leaves)        # formulas of depth <= d+1
    for _ in range(1, max_depth):
        prev = layers[-1]
        prev_set = set(prev)
        new = []
        for cls in connectives:
            for left, right in itertools.product(upto, repeat=2):
                if left in prev_set or right in prev_set:
                    new.append(cls(left, right))
        layers.append(new)
        upto = upto + new
    return upto


def random_formula(rng: random.Random, atoms: Sequence[str], max_depth: int,
                   connectives: Sequence[type] = BINARY,
                   constant_rate: float = 0.1) -> Formula:
    """A random formula of depth <= max_depth.  Leaves are atoms, or with
    probability ``constant_rate`` one of bot/top."""
    if max_depth <= 1 or rng.random() < 0.3:
        if not atoms or rng.random() < constant_rate:
            return rng.choice((BOT, TOP))
        return Atom(rng.choice(atoms))
    cls = rng.choice(connectives)
    return cls(random_formula(rng, atoms, max_depth - 1, connectives, constant_rate),
               random_formula(rng, atoms, max_depth - 1, connectives, constant_rate))
