"""Finite LBM structures: linear Kripke frames with MV-valued sloping valuations.

Worlds are ``0 .. k-1`` ordered by index.  Every atom is valued by a sloping
function; formulas are evaluated world by world, the implication taking the
floored infimum of the pointwise residuum over the worlds at or above the
current one.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Mapping, Sequence, Union

from .mv import (
    ONE, ZERO, SlopingFunction, UnassignedAtom, floored_inf, mv_and, mv_impl,
    mv_or, mv_otimes,
)
from .syntax import (
    And, Atom, Bottom, Formula, Implies, Or, Sequent, Tensor, Top, atoms_of,
    subformulas, tensor_fold_formulas,
)

__all__ = [
    "LBMStructure", "ClassicalLinearKripke", "Holds", "FailsAt", "evaluate",
    "formula_profile", "holds", "embed_classical", "classical_eval",
    "ModelFormatError", "model_from_json", "model_to_json",
]


class ModelFormatError(ValueError):
    pass


@dataclass(frozen=True, eq=False, init=False)
class LBMStructure:
    worlds: int
    valuation: Mapping[str, SlopingFunction]
    _memo: dict = field(default_factory=dict, init=False, repr=False)

    def __init__(self, worlds: int, valuation: Mapping[str, Union[SlopingFunction, Sequence]]):
        if not isinstance(worlds, int) or worlds < 1:
            raise ValueError(f"number of worlds must be a positive integer, got {worlds!r}")
        val = {}
        for name, fn in valuation.items():
            if not isinstance(fn, SlopingFunction):
                fn = SlopingFunction(fn)
            if fn.size != worlds:
                raise ValueError(f"valuation of {name!r} has {fn.size} worlds, expected {worlds}")
            val[name] = fn
        object.__setattr__(self, "worlds", worlds)
        object.__setattr__(self, "valuation", val)
        object.__setattr__(self, "_memo", {})

    def __eq__(self, other):
        if not isinstance(other, LBMStructure):
            return NotImplemented
        return self.worlds == other.worlds and self.valuation == other.valuation

    def __hash__(self):
        return hash((self.worlds, tuple(sorted((k, v.values) for k, v in self.valuation.items()))))

    def value(self, w: int, f: Formula) -> Fraction:
        """Truth value of ``f`` at world ``w``."""
        if not 0 <= w < self.worlds:
            raise IndexError(f"world {w} out of range 0..{self.worlds - 1}")
        return self._value(w, f)

    def _value(self, w: int, f: Formula) -> Fraction:
        key = (w, f)
        memo = self._memo
        if key in memo:
            return memo[key]
        if isinstance(f, Atom):
            try:
                v = self.valuation[f.name].values[w]
            except KeyError:
                raise UnassignedAtom(f.name) from None
        elif isinstance(f, Top):
            v = ONE
        elif isinstance(f, Bottom):
            v = ZERO
        elif isinstance(f, And):
            v = mv_and(self._value(w, f.left), self._value(w, f.right))
        elif isinstance(f, Or):
            v = mv_or(self._value(w, f.left), self._value(w, f.right))
        elif isinstance(f, Tensor):
            v = mv_otimes(self._value(w, f.left), self._value(w, f.right))
        elif isinstance(f, Implies):
            above = [mv_impl(self._value(u, f.left), self._value(u, f.right))
                     for u in range(w, self.worlds)]
            v = floored_inf(above, 0)
        else:
            raise TypeError(f"not a formula: {f!r}")
        memo[key] = v
        return v


@dataclass(frozen=True)
class Holds:
    def __bool__(self) -> bool:
        return True


@dataclass(frozen=True)
class FailsAt:
    """Least world where the tensor of the context exceeds the conclusion."""

    world: int
    lhs: Fraction
    rhs: Fraction

    def __bool__(self) -> bool:
        return False


def evaluate(m: LBMStructure, w: int, f: Formula) -> Fraction:
    return m.value(w, f)


def formula_profile(m: LBMStructure, f: Formula) -> SlopingFunction:
    """``[value at 0, ..., value at k-1]``; always a sloping function."""
    return SlopingFunction(m.value(w, f) for w in range(m.worlds))


def holds(m: LBMStructure, s: Sequent) -> Union[Holds, FailsAt]:
    """Check that the tensor of the context is below the conclusion at every
    world.  The empty context is read as ``top``."""
    lhs = tensor_fold_formulas(s.context)
    for w in range(m.worlds):
        left = m.value(w, lhs)
        right = m.value(w, s.conclusion)
        if left > right:
            return FailsAt(w, left, right)
    return Holds()


# ----------------------------------------------------- classical linear Kripke

@dataclass(frozen=True, init=False)
class ClassicalLinearKripke:
    """Intuitionistic Kripke model on a finite chain; truth must persist."""

    worlds: int
    truth: Mapping[str, tuple[bool, ...]]

    def __init__(self, worlds: int, truth: Mapping[str, Sequence[bool]]):
        if not isinstance(worlds, int) or worlds < 1:
            raise ValueError(f"number of worlds must be a positive integer, got {worlds!r}")
        t = {}
        for name, seq in truth.items():
            seq = tuple(bool(b) for b in seq)
            if len(seq) != worlds:
                raise ValueError(f"truth of {name!r} has {len(seq)} worlds, expected {worlds}")
            if any(a and not b for a, b in zip(seq, seq[1:])):
                raise ValueError(f"truth of {name!r} is not persistent: {seq}")
            t[name] = seq
        object.__setattr__(self, "worlds", worlds)
        object.__setattr__(self, "truth", t)

    def __hash__(self):
        return hash((self.worlds, tuple(sorted(self.truth.items()))))


def embed_classical(c: ClassicalLinearKripke) -> LBMStructure:
    return LBMStructure(c.worlds, {
        name: [ONE if b else ZERO for b in seq] for name, seq in c.truth.items()
    })


def classical_eval(c: ClassicalLinearKripke, w: int, f: Formula) -> bool:
    """Forcing for tensor-free formulas; implication looks at all v >= w."""
    if not 0 <= w < c.worlds:
        raise IndexError(f"world {w} out of range 0..{c.worlds - 1}")
    if any(isinstance(g, Tensor) for g in subformulas(f)):
        raise ValueError("classical Kripke semantics has no strong conjunction '*'")
    return _force(c, w, f)


def _force(c: ClassicalLinearKripke, w: int, f: Formula) -> bool:
    if isinstance(f, Atom):
        try:
            return c.truth[f.name][w]
        except KeyError:
            raise UnassignedAtom(f.name) from None
    if isinstance(f, Top):
        return True
    if isinstance(f, Bottom):
        return False
    if isinstance(f, And):
        return _force(c, w, f.left) and _force(c, w, f.right)
    if isinstance(f, Or):
        return _force(c, w, f.left) or _force(c, w, f.right)
    if isinstance(f, Implies):
        return all(not _force(c, v, f.left) or _force(c, v, f.right)
                   for v in range(w, c.worlds))
    raise TypeError(f"not a formula: {f!r}")


# ---------------------------------------------------------------- model files

def _int_field(obj: Mapping[str, Any], key: str) -> int:
    v = obj.get(key)
    if isinstance(v, bool) or not isinstance(v, int) or v < 1:
        raise ModelFormatError(f"{key!r} must be a positive integer, got {v!r}")
    return v


def model_from_json(obj: Mapping[str, Any]) -> LBMStructure:
    """Build a structure from ``{"worlds", "denominator", "valuation"}``."""
    if not isinstance(obj, Mapping):
        raise ModelFormatError("model must be a JSON object")
    k = _int_field(obj, "worlds")
    n = _int_field(obj, "denominator")
    valuation = obj.get("valuation")
    if not isinstance(valuation, Mapping):
        raise ModelFormatError("'valuation' must be an object")
    val = {}
    for name, nums in valuation.items():
        try:
            Atom(name)
        except ValueError as e:
            raise ModelFormatError(str(e)) from None
        if not isinstance(nums, list) or len(nums) != k:
            raise ModelFormatError(f"valuation of {name!r} must be a list of {k} integers")
        for a in nums:
            if isinstance(a, bool) or not isinstance(a, int) or not 0 <= a <= n:
                raise ModelFormatError(f"valuation of {name!r}: entry {a!r} not an integer in [0, {n}]")
        values = [Fraction(a, n) for a in nums]
        try:
            val[name] = SlopingFunction(values)
        except ValueError as e:
            raise ModelFormatError(f"valuation of {name!r}: {e}") from None
    return LBMStructure(k, val)


def model_to_json(m: LBMStructure, world: int | None = None) -> dict[str, Any]:
    """Inverse of :func:`model_from_json`, using the least common denominator."""
    n = 1
    for fn in m.valuation.values():
        for x in fn.values:
            n = math.lcm(n, x.denominator)
    out: dict[str, Any] = {
        "worlds": m.worlds,
        "denominator": n,
        "valuation": {name: [int(x * n) for x in fn.values] for name, fn in m.valuation.items()},
    }
    if world is not None:
        out["world"] = world
    return out


def atoms_covered(m: LBMStructure, s: Union[Sequent, Formula]) -> bool:
    return all(a in m.valuation for a in atoms_of(s))
