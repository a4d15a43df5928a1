"""Hilbert-style proofs: axiom schemas A1-A14 plus modus ponens, and their
translation into natural deduction."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Mapping, Optional, Union

from .nd import NDProof, ProofFormatError, axiom_derivation, imp_e
from .syntax import (
    Atom, Bottom, Formula, Implies, ParseError, Top, parse_formula, render,
)

__all__ = [
    "AXIOMS", "Axiom", "MP", "HilbertLine", "HilbertProof", "HilbertError",
    "match_schema", "match_axiom", "check_hilbert", "hilbert_to_nd",
    "hilbert_to_json", "hilbert_from_json",
]

# metavariables are the atoms phi, psi, chi
_SCHEMAS = {
    "A1": "phi -> phi",
    "A2": "(phi -> psi) -> ((psi -> chi) -> (phi -> chi))",
    "A3": "(phi * psi) -> (psi * phi)",
    "A4": "(phi * psi) -> psi",
    "A5": "(phi -> (psi -> chi)) -> ((phi * psi) -> chi)",
    "A6": "((phi * psi) -> chi) -> (phi -> (psi -> chi))",
    "A7": "(phi * (phi -> psi)) -> (phi & psi)",
    "A8": "(phi & psi) -> (phi * (phi -> psi))",
    "A9": "(phi & psi) -> (psi & phi)",
    "A10": "phi -> (phi | psi)",
    "A11": "psi -> (phi | psi)",
    "A12": "((phi -> psi) & (chi -> psi)) -> ((phi | chi) -> psi)",
    "A13": "bot -> phi",
    "A14": "(phi -> psi) | (psi -> phi)",
}
AXIOMS: dict[str, Formula] = {k: parse_formula(v) for k, v in _SCHEMAS.items()}
METAVARS = ("phi", "psi", "chi")


def match_schema(pattern: Formula, f: Formula,
                 binding: Optional[dict[str, Formula]] = None) -> Optional[dict[str, Formula]]:
    """One-sided matching: every atom of ``pattern`` is a metavariable."""
    binding = dict(binding or {})

    def go(pat: Formula, g: Formula) -> bool:
        if isinstance(pat, Atom):
            bound = binding.get(pat.name)
            if bound is None:
                binding[pat.name] = g
                return True
            return bound == g
        if isinstance(pat, (Bottom, Top)):
            return pat == g
        if type(pat) is not type(g):
            return False
        return go(pat.left, g.left) and go(pat.right, g.right)

    return binding if go(pattern, f) else None


def match_axiom(f: Formula) -> set[str]:
    """Ids of all axiom schemas that ``f`` instantiates."""
    return {name for name, schema in AXIOMS.items() if match_schema(schema, f) is not None}


@dataclass(frozen=True)
class Axiom:
    id: Optional[str] = None       # None: any matching schema will do


@dataclass(frozen=True)
class MP:
    """Modus ponens from 1-based lines ``major`` (A -> B) and ``minor`` (A)."""
    major: int
    minor: int


@dataclass(frozen=True)
class HilbertLine:
    formula: Formula
    justification: Union[Axiom, MP]


@dataclass(frozen=True)
class HilbertProof:
    lines: tuple[HilbertLine, ...]

    def __post_init__(self):
        if not isinstance(self.lines, tuple):
            object.__setattr__(self, "lines", tuple(self.lines))

    @classmethod
    def from_steps(cls, *steps: tuple[str, Union[str, tuple[int, int]]]) -> "HilbertProof":
        """Shorthand: ``("p -> p", "A1")`` or ``("q", (2, 1))``."""
        lines = []
        for text, just in steps:
            j = MP(*just) if isinstance(just, tuple) else Axiom(just)
            lines.append(HilbertLine(parse_formula(text), j))
        return cls(tuple(lines))


class HilbertError(ValueError):
    def __init__(self, line: int, reason: str):
        self.line = line
        self.reason = reason
        super().__init__(f"line {line}: {reason}")


def _axiom_binding(line_no: int, f: Formula, axiom_id: Optional[str]) -> tuple[str, dict[str, Formula]]:
    if axiom_id is None:
        found = sorted(match_axiom(f), key=lambda a: int(a[1:]))
        if not found:
            raise HilbertError(line_no, f"{render(f)} is not an axiom instance")
        axiom_id = found[0]
    if axiom_id not in AXIOMS:
        raise HilbertError(line_no, f"unknown axiom {axiom_id!r}")
    binding = match_schema(AXIOMS[axiom_id], f)
    if binding is None:
        raise HilbertError(line_no, f"{render(f)} is not an instance of {axiom_id}: {_SCHEMAS[axiom_id]}")
    return axiom_id, binding


def check_hilbert(p: HilbertProof) -> Formula:
    """Validate every line; return the formula of the last line."""
    if not p.lines:
        raise HilbertError(0, "empty proof")
    for n, line in enumerate(p.lines, start=1):
        j = line.justification
        if isinstance(j, Axiom):
            _axiom_binding(n, line.formula, j.id)
        elif isinstance(j, MP):
            for ref in (j.major, j.minor):
                if not 1 <= ref < n:
                    raise HilbertError(n, f"reference to line {ref} is not an earlier line")
            major = p.lines[j.major - 1].formula
            minor = p.lines[j.minor - 1].formula
            if not isinstance(major, Implies):
                raise HilbertError(n, f"line {j.major} is not an implication: {render(major)}")
            if major.left != minor:
                raise HilbertError(n, f"line {j.minor} ({render(minor)}) is not the antecedent of line {j.major}")
            if major.right != line.formula:
                raise HilbertError(n, f"modus ponens yields {render(major.right)}, not {render(line.formula)}")
        else:
            raise HilbertError(n, f"bad justification {j!r}")
    return p.lines[-1].formula


def hilbert_to_nd(p: HilbertProof) -> NDProof:
    """Natural deduction proof of ``|- F`` for the conclusion F of ``p``:
    axiom lines become their derivation templates, modus ponens becomes ImpE."""
    check_hilbert(p)
    done: list[NDProof] = []
    for n, line in enumerate(p.lines, start=1):
        j = line.justification
        if isinstance(j, Axiom):
            axiom_id, b = _axiom_binding(n, line.formula, j.id)
            done.append(axiom_derivation(axiom_id, *(b.get(m) for m in METAVARS)))
        else:
            done.append(imp_e(done[j.major - 1], done[j.minor - 1]))
    return done[-1]


def hilbert_to_json(p: HilbertProof) -> dict[str, Any]:
    lines = []
    for line in p.lines:
        j = line.justification
        entry: dict[str, Any] = {"formula": render(line.formula)}
        if isinstance(j, Axiom):
            entry["axiom"] = j.id
        else:
            entry["mp"] = [j.major, j.minor]
        lines.append(entry)
    return {"lines": lines}


def hilbert_from_json(obj: Mapping[str, Any]) -> HilbertProof:
    if not isinstance(obj, Mapping) or not isinstance(obj.get("lines"), list):
        raise ProofFormatError("Hilbert proof must be an object with a 'lines' list")
    lines = []
    for n, entry in enumerate(obj["lines"], start=1):
        if not isinstance(entry, Mapping) or not isinstance(entry.get("formula"), str):
            raise ProofFormatError(f"line {n}: needs a 'formula' string")
        try:
            f = parse_formula(entry["formula"])
        except ParseError as e:
            raise ProofFormatError(f"line {n}: {e}") from None
        if "axiom" in entry and "mp" not in entry:
            ax = entry["axiom"]
            if ax is not None and ax not in AXIOMS:
                raise ProofFormatError(f"line {n}: unknown axiom {ax!r}")
            j: Union[Axiom, MP] = Axiom(ax)
        elif "mp" in entry and "axiom" not in entry:
            mp = entry["mp"]
            if (not isinstance(mp, list) or len(mp) != 2
                    or not all(isinstance(i, int) and not isinstance(i, bool) for i in mp)):
                raise ProofFormatError(f"line {n}: 'mp' must be a pair of line numbers")
            j = MP(mp[0], mp[1])
        else:
            raise ProofFormatError(f"line {n}: needs exactly one of 'axiom' or 'mp'")
        lines.append(HilbertLine(f, j))
    return HilbertProof(tuple(lines))
