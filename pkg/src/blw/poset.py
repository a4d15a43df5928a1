"""Poset product of standard MV-chains over a finite chain of worlds.

Elements are sloping functions.  Lattice and monoid operations are pointwise;
the residual is guarded: at world w it is the pointwise residuum, provided
the left argument stays below the right one at every strictly later world,
and 0 otherwise.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Optional

from .lbm import LBMStructure, formula_profile
from .mv import (
    ONE, ZERO, SlopingFunction, UnassignedAtom, floored_inf, mv_impl,
    slope_combine, slope_compare, Order,
)
from .syntax import And, Atom, Bottom, Formula, Implies, Or, Tensor, Top

__all__ = [
    "PosetProduct", "pp_impl", "pp_impl_cases", "denote", "pp_valid",
    "agree_with_lbm",
]

AtomAssignment = Mapping[str, SlopingFunction]


def _check_pair(f: SlopingFunction, g: SlopingFunction) -> None:
    if not isinstance(f, SlopingFunction) or not isinstance(g, SlopingFunction):
        raise TypeError("poset product elements must be SlopingFunction instances")
    if f.size != g.size:
        raise ValueError(f"size mismatch: {f.size} != {g.size}")


def pp_impl(f: SlopingFunction, g: SlopingFunction) -> SlopingFunction:
    """Residual as the floored infimum of the pointwise residuum."""
    _check_pair(f, g)
    pointwise = [mv_impl(x, y) for x, y in zip(f.values, g.values)]
    return SlopingFunction(floored_inf(pointwise, w) for w in range(f.size))


def pp_impl_cases(f: SlopingFunction, g: SlopingFunction) -> SlopingFunction:
    """Residual by the guarded case split.  Agrees with :func:`pp_impl` on
    sloping arguments."""
    _check_pair(f, g)
    k = f.size
    out = []
    for w in range(k):
        if all(f.values[v] <= g.values[v] for v in range(w + 1, k)):
            out.append(mv_impl(f.values[w], g.values[w]))
        else:
            out.append(ZERO)
    return SlopingFunction(out)


@dataclass(frozen=True)
class PosetProduct:
    """The algebra of sloping functions on the chain ``0 < ... < size-1``."""

    size: int

    def __post_init__(self):
        if self.size < 1:
            raise ValueError("size must be positive")

    @property
    def bottom(self) -> SlopingFunction:
        return SlopingFunction.constant(self.size, ZERO)

    @property
    def top(self) -> SlopingFunction:
        return SlopingFunction.constant(self.size, ONE)

    def _own(self, *fs: SlopingFunction) -> None:
        for f in fs:
            if f.size != self.size:
                raise ValueError(f"element of size {f.size} in a product of size {self.size}")

    def meet(self, f, g):
        self._own(f, g)
        return slope_combine(f, g, "and")

    def join(self, f, g):
        self._own(f, g)
        return slope_combine(f, g, "or")

    def otimes(self, f, g):
        self._own(f, g)
        return slope_combine(f, g, "otimes")

    def impl(self, f, g):
        self._own(f, g)
        return pp_impl(f, g)

    def le(self, f, g) -> bool:
        self._own(f, g)
        return slope_compare(f, g) in (Order.LE, Order.EQ)


def denote(h: AtomAssignment, f: Formula, size: Optional[int] = None) -> SlopingFunction:
    """Interpret ``f`` in the poset product under the atom assignment ``h``.

    ``size`` is only needed when ``h`` is empty.
    """
    if size is None:
        sizes = {fn.size for fn in h.values()}
        if len(sizes) != 1:
            raise ValueError("cannot infer the frame size from the assignment; pass size=")
        size = sizes.pop()
    alg = PosetProduct(size)
    cache: dict[Formula, SlopingFunction] = {}

    def go(g: Formula) -> SlopingFunction:
        if g in cache:
            return cache[g]
        if isinstance(g, Atom):
            try:
                r = h[g.name]
            except KeyError:
                raise UnassignedAtom(g.name) from None
            alg._own(r)
        elif isinstance(g, Bottom):
            r = alg.bottom
        elif isinstance(g, Top):
            r = alg.top
        elif isinstance(g, And):
            r = alg.meet(go(g.left), go(g.right))
        elif isinstance(g, Or):
            r = alg.join(go(g.left), go(g.right))
        elif isinstance(g, Tensor):
            r = alg.otimes(go(g.left), go(g.right))
        elif isinstance(g, Implies):
            r = alg.impl(go(g.left), go(g.right))
        else:
            raise TypeError(f"not a formula: {g!r}")
        cache[g] = r
        return r

    return go(f)


def pp_valid(h: AtomAssignment, f: Formula, size: Optional[int] = None) -> bool:
    return all(x == ONE for x in denote(h, f, size).values)


def agree_with_lbm(h: AtomAssignment, f: Formula, size: Optional[int] = None) -> bool:
    """Compare the algebraic denotation with Kripke evaluation on the LBM
    structure that values each atom by ``h``."""
    d = denote(h, f, size)
    m = LBMStructure(d.size, h)
    return formula_profile(m, f) == d
