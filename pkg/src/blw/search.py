"""Bounded countermodel search and random structures for soundness fuzzing.

Search walks frame sizes k = 1..K and, within each, denominators n = 1..N,
trying every assignment of sloping functions with values in {0, 1/n, ..., 1}
to the atoms.  A hit is a genuine countermodel; exhausting the bounds only
means "valid up to (K, N)".
"""

from __future__ import annotations

import itertools
import os
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Optional, Sequence, Union

from .lbm import LBMStructure, holds
from .mv import ONE, ZERO, SlopingFunction
from .nd import NDProof, check_nd, iter_nodes
from .syntax import (
    And, Atom, Bottom, Formula, Implies, Or, Sequent, Tensor, Top, atoms_of,
    parse_sequent, render_sequent, tensor_fold_formulas,
)

__all__ = [
    "SearchBounds", "Countermodel", "NoneFound", "enumerate_sloping",
    "find_countermodel", "random_lbm", "FuzzWitness", "FuzzReport",
    "soundness_fuzz", "default_workers",
]


@dataclass(frozen=True)
class SearchBounds:
    max_worlds: int = 3
    max_denominator: int = 4

    def __post_init__(self):
        if self.max_worlds < 1 or self.max_denominator < 1:
            raise ValueError(f"bounds must be positive: {self}")


@dataclass(frozen=True)
class Countermodel:
    structure: LBMStructure
    world: int
    lhs: Fraction
    rhs: Fraction
    denominator: int


@dataclass(frozen=True)
class NoneFound:
    bounds: SearchBounds
    structures_checked: int

    def __bool__(self) -> bool:
        return False


def enumerate_sloping(k: int, n: int) -> Iterator[SlopingFunction]:
    """All sloping functions on k worlds with values in {0, 1/n, ..., 1}.

    A sloping function is 0 up to some world i, takes a positive value there
    and 1 afterwards; so there are exactly 1 + k*n of them.  The all-zero
    function comes first, then (i, a) in lexicographic order.
    """
    if k < 1 or n < 1:
        raise ValueError("k and n must be positive")
    yield SlopingFunction([ZERO] * k)
    for i in range(k):
        for a in range(1, n + 1):
            yield SlopingFunction([ZERO] * i + [Fraction(a, n)] + [ONE] * (k - i - 1))


def default_workers() -> int:
    """Worker count from ``BLW_THREADS`` (0 or unset = one per CPU)."""
    raw = os.environ.get("BLW_THREADS", "0").strip() or "0"
    n = int(raw)
    if n < 0:
        raise ValueError("BLW_THREADS must be >= 0")
    return n or (os.cpu_count() or 1)


# The scan evaluates over numerators: within a level (k, n) every value is
# a/n and the finite chain {0, 1/n, ..., 1} is closed under all operations.
_ATOM, _BOT, _TOP, _AND, _OR, _TENS, _IMP = range(7)
_KIND = {And: _AND, Or: _OR, Tensor: _TENS, Implies: _IMP}


def _compile(s: Sequent) -> tuple[list[tuple[int, int, int]], int, int]:
    """Straight-line program over the distinct subformulas of the sequent;
    returns (ops, register of the context tensor, register of the conclusion)."""
    atoms = {a: i for i, a in enumerate(atoms_of(s))}
    ops: list[tuple[int, int, int]] = []
    reg: dict[Formula, int] = {}

    def emit(f: Formula) -> int:
        if f in reg:
            return reg[f]
        if isinstance(f, Atom):
            op = (_ATOM, atoms[f.name], 0)
        elif isinstance(f, Bottom):
            op = (_BOT, 0, 0)
        elif isinstance(f, Top):
            op = (_TOP, 0, 0)
        else:
            op = (_KIND[type(f)], emit(f.left), emit(f.right))
        ops.append(op)
        reg[f] = len(ops) - 1
        return reg[f]

    lhs = emit(tensor_fold_formulas(s.context))
    rhs = emit(s.conclusion)
    return ops, lhs, rhs


def _run(ops, lhs: int, rhs: int, vals: Sequence[tuple[int, ...]], k: int, n: int) -> bool:
    """True iff the sequent holds; values are numerators over n."""
    regs: list = []
    zero, one = (0,) * k, (n,) * k
    for kind, a, b in ops:
        if kind == _ATOM:
            regs.append(vals[a])
        elif kind == _BOT:
            regs.append(zero)
        elif kind == _TOP:
            regs.append(one)
        else:
            x, y = regs[a], regs[b]
            if kind == _AND:
                regs.append(tuple(map(min, x, y)))
            elif kind == _OR:
                regs.append(tuple(map(max, x, y)))
            elif kind == _TENS:
                regs.append(tuple(u + v - n if u + v > n else 0 for u, v in zip(x, y)))
            else:
                out = [0] * k
                ok = True
                for w in range(k - 1, -1, -1):
                    r = n if x[w] <= y[w] else n - x[w] + y[w]
                    out[w] = r if ok else 0
                    ok = ok and r == n
                regs.append(tuple(out))
    left, right = regs[lhs], regs[rhs]
    return all(u <= v for u, v in zip(left, right))


def _numerators(k: int, n: int) -> list[tuple[int, ...]]:
    return [tuple(int(x * n) for x in f.values) for f in enumerate_sloping(k, n)]


def _scan(s: Union[str, Sequent], k: int, n: int, start: int, stop: int) -> Optional[int]:
    """First index in [start, stop) of the level-(k, n) product space whose
    structure refutes the sequent, or None."""
    if isinstance(s, str):
        s = parse_sequent(s)
    natoms = len(atoms_of(s))
    ops, lhs, rhs = _compile(s)
    cands = _numerators(k, n)
    it = itertools.islice(itertools.product(cands, repeat=natoms), start, stop)
    for idx, vals in enumerate(it, start):
        if not _run(ops, lhs, rhs, vals, k, n):
            return idx
    return None


def _decode(atoms: Sequence[str], k: int, n: int, idx: int) -> LBMStructure:
    cands = list(enumerate_sloping(k, n))
    digits = []
    for _ in atoms:
        idx, r = divmod(idx, len(cands))
        digits.append(cands[r])
    digits.reverse()
    return LBMStructure(k, dict(zip(atoms, digits)))


def find_countermodel(s: Sequent, bounds: SearchBounds = SearchBounds(),
                      workers: int = 1, chunk: int = 4096) -> Union[Countermodel, NoneFound]:
    """First refuting structure in (k, n, lexicographic valuation) order.

    With ``workers > 1`` each level is split into chunks checked in worker
    processes; the reported countermodel is the same as the serial one.
    """
    atoms = atoms_of(s)
    if not atoms:
        m = LBMStructure(1, {})
        v = holds(m, s)
        if not v:
            return Countermodel(m, v.world, v.lhs, v.rhs, 1)
        return NoneFound(bounds, 1)

    checked = 0
    pool = ProcessPoolExecutor(max_workers=workers) if workers > 1 else None
    text = render_sequent(s)
    try:
        for k in range(1, bounds.max_worlds + 1):
            for n in range(1, bounds.max_denominator + 1):
                total = (1 + k * n) ** len(atoms)
                if pool is None or total <= chunk:
                    hit = _scan(s, k, n, 0, total)
                else:
                    starts = range(0, total, chunk)
                    futures = [pool.submit(_scan, text, k, n, a, min(a + chunk, total)) for a in starts]
                    hit = None
                    for fut in futures:
                        r = fut.result()
                        if r is not None:
                            hit = r
                            break
                    for fut in futures:
                        fut.cancel()
                if hit is not None:
                    m = _decode(atoms, k, n, hit)
                    v = holds(m, s)
                    if v:
                        raise AssertionError(f"scan and holds disagree on {render_sequent(s)} at {m}")
                    return Countermodel(m, v.world, v.lhs, v.rhs, n)
                checked += total
    finally:
        if pool is not None:
            pool.shutdown(cancel_futures=True)
    return NoneFound(bounds, checked)


def random_lbm(atoms: Iterable[str], k: int, n: int, seed: int) -> LBMStructure:
    """Each atom gets an independent uniform pick among the 1 + k*n sloping
    functions of enumerate_sloping(k, n)."""
    rng = random.Random(seed)
    cands = list(enumerate_sloping(k, n))
    return LBMStructure(k, {a: cands[rng.randrange(len(cands))] for a in atoms})


# ---------------------------------------------------------------- fuzzing

@dataclass(frozen=True)
class FuzzWitness:
    path: tuple[int, ...]
    sequent: Sequent
    structure: LBMStructure
    world: int
    lhs: Fraction
    rhs: Fraction
    trial: int


@dataclass(frozen=True)
class FuzzReport:
    passed: bool
    trials: int
    sequents_checked: int
    witness: Optional[FuzzWitness] = None


def soundness_fuzz(p: NDProof, trials: int, bounds: SearchBounds = SearchBounds(),
                   seed: int = 0, check: bool = True) -> FuzzReport:
    """Evaluate every node sequent of ``p`` on ``trials`` random structures.

    On a violation the witness is shrunk to the first countermodel of that
    sequent in search order.  ``check=False`` skips check_nd so that
    deliberately broken proofs can serve as negative controls.
    """
    if check:
        check_nd(p)
    sequents: dict[Sequent, tuple[int, ...]] = {}
    for path, node in iter_nodes(p):
        sequents.setdefault(node.sequent, path)
    atoms = list(dict.fromkeys(a for s in sequents for a in atoms_of(s)))
    rng = random.Random(seed)
    evaluated = 0
    for t in range(trials):
        k = rng.randint(1, bounds.max_worlds)
        n = rng.randint(1, bounds.max_denominator)
        m = random_lbm(atoms, k, n, rng.getrandbits(64))
        for s, path in sequents.items():
            evaluated += 1
            if not holds(m, s):
                small = find_countermodel(s, bounds)
                assert isinstance(small, Countermodel), "random witness lies within the bounds"
                return FuzzReport(False, t + 1, evaluated, FuzzWitness(
                    path, s, small.structure, small.world, small.lhs, small.rhs, t))
    return FuzzReport(True, trials, evaluated)
