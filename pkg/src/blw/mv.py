"""Exact arithmetic on the standard MV-chain [0,1] and sloping functions.

Values are :class:`fractions.Fraction` in [0, 1]; floats are refused, since
the floor operator and the sloping condition both hinge on exact equality
with 1.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Mapping, Sequence, Union

from .syntax import And, Atom, Bottom, Formula, Implies, Or, Tensor, Top

__all__ = [
    "ZERO", "ONE", "mv_value", "format_value", "mv_and", "mv_or", "mv_otimes",
    "mv_impl", "mv_neg", "mv_floor", "floored_inf", "slope_check", "SlopingFunction",
    "slope_combine", "Order", "slope_compare", "mv_denote", "UnassignedAtom",
]

ZERO = Fraction(0)
ONE = Fraction(1)

ValueLike = Union[Fraction, int, str]


class UnassignedAtom(KeyError):
    pass


def mv_value(x: ValueLike) -> Fraction:
    """Coerce ``x`` to an MV value.  Accepts Fraction, int and ``"a/b"`` text."""
    if isinstance(x, float):
        raise TypeError("floating point values are not accepted; use Fraction or 'a/b'")
    if isinstance(x, bool):
        x = int(x)
    v = x if isinstance(x, Fraction) else Fraction(x)
    if not ZERO <= v <= ONE:
        raise ValueError(f"value {v} outside [0, 1]")
    return v


def format_value(x: Fraction) -> str:
    return str(x)


def mv_and(x: Fraction, y: Fraction) -> Fraction:
    return x if x <= y else y


def mv_or(x: Fraction, y: Fraction) -> Fraction:
    return x if x >= y else y


def mv_otimes(x: Fraction, y: Fraction) -> Fraction:
    """Łukasiewicz t-norm max{0, x + y - 1}."""
    s = x + y - 1
    return s if s > 0 else ZERO


def mv_impl(x: Fraction, y: Fraction) -> Fraction:
    """Residuum min{1, 1 - x + y}."""
    if x <= y:
        return ONE
    return 1 - x + y


def mv_neg(x: Fraction) -> Fraction:
    return mv_impl(x, ZERO)


def mv_floor(x: Fraction) -> Fraction:
    """The Delta operator: 1 at 1, 0 everywhere else."""
    return ONE if x == ONE else ZERO


def floored_inf(values: Sequence[Fraction], w: int) -> Fraction:
    """``min{ values[w], inf over v > w of floor(values[v]) }``.

    The infimum over an empty set of successors is 1.
    """
    if not 0 <= w < len(values):
        raise IndexError(f"world {w} out of range for a frame of size {len(values)}")
    inf = ONE
    for v in range(w + 1, len(values)):
        inf = mv_and(inf, mv_floor(values[v]))
    return mv_and(values[w], inf)


def slope_check(values: Sequence[Fraction]) -> bool:
    """True iff a positive value at world i forces 1 at every later world."""
    seen_positive = False
    for x in values:
        if seen_positive and x != ONE:
            return False
        if x > 0:
            seen_positive = True
    return True


@dataclass(frozen=True, init=False)
class SlopingFunction:
    """A sloping map from the frame 0 < 1 < ... < k-1 into [0, 1]."""

    values: tuple[Fraction, ...]

    def __init__(self, values: Iterable[ValueLike]):
        vals = tuple(mv_value(x) for x in values)
        if not vals:
            raise ValueError("a sloping function needs at least one world")
        if not slope_check(vals):
            raise ValueError(f"not sloping: [{', '.join(map(str, vals))}]")
        object.__setattr__(self, "values", vals)

    @classmethod
    def constant(cls, k: int, value: ValueLike) -> "SlopingFunction":
        return cls([value] * k)

    @property
    def size(self) -> int:
        return len(self.values)

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, w: int) -> Fraction:
        return self.values[w]

    def __iter__(self):
        return iter(self.values)

    def __str__(self) -> str:
        return "[" + ", ".join(map(str, self.values)) + "]"


_POINTWISE: dict[str, Callable[[Fraction, Fraction], Fraction]] = {
    "and": mv_and,
    "or": mv_or,
    "otimes": mv_otimes,
}


def _same_size(f: SlopingFunction, g: SlopingFunction) -> None:
    if f.size != g.size:
        raise ValueError(f"size mismatch: {f.size} != {g.size}")


def slope_combine(f: SlopingFunction, g: SlopingFunction, op: str) -> SlopingFunction:
    """Pointwise ``and`` / ``or`` / ``otimes``; the result is again sloping."""
    _same_size(f, g)
    try:
        fn = _POINTWISE[op]
    except KeyError:
        raise ValueError(f"unknown operation {op!r}") from None
    return SlopingFunction(fn(x, y) for x, y in zip(f.values, g.values))


class Order(enum.Enum):
    LE = "LE"
    GE = "GE"
    EQ = "EQ"


def slope_compare(f: SlopingFunction, g: SlopingFunction) -> Order:
    """Pointwise comparison.  Sloping functions of one size form a chain, so
    one of LE/GE/EQ always applies; anything else is a broken invariant."""
    _same_size(f, g)
    le = all(x <= y for x, y in zip(f.values, g.values))
    ge = all(x >= y for x, y in zip(f.values, g.values))
    if le and ge:
        return Order.EQ
    if le:
        return Order.LE
    if ge:
        return Order.GE
    raise AssertionError(f"incomparable sloping functions {f} and {g}")


def mv_denote(assignment: Mapping[str, ValueLike], f: Formula) -> Fraction:
    """Value of ``f`` in the standard MV-chain under an atom assignment."""
    if isinstance(f, Atom):
        try:
            return mv_value(assignment[f.name])
        except KeyError:
            raise UnassignedAtom(f.name) from None
    if isinstance(f, Bottom):
        return ZERO
    if isinstance(f, Top):
        return ONE
    x = mv_denote(assignment, f.left)
    y = mv_denote(assignment, f.right)
    if isinstance(f, And):
        return mv_and(x, y)
    if isinstance(f, Or):
        return mv_or(x, y)
    if isinstance(f, Tensor):
        return mv_otimes(x, y)
    if isinstance(f, Implies):
        return mv_impl(x, y)
    raise TypeError(f"not a formula: {f!r}")
