"""Which sequents separate BL from its contraction-closed neighbour?

For each sequent, report the first countermodel in search order (or none
within bounds) next to its verdict on classical linear Kripke frames.
"""

import argparse
import itertools
import json
from dataclasses import asdict, dataclass, field

from blw.lbm import ClassicalLinearKripke, classical_eval
from blw.mv import format_value
from blw.search import Countermodel, SearchBounds, find_countermodel
from blw.syntax import BINARY, And, Implies, Tensor, atoms_of, parse_sequent, tensor_fold_formulas

DEFAULT_SEQUENTS = [
    "p |- p * p",
    "|- p -> p * p",
    "p & q |- p * q",
    "p -> (p -> q) |- p -> q",
    "|- p | (p -> bot)",
    "|- ((p -> bot) -> bot) -> p",
    "|- (p -> bot) | ((p -> bot) -> bot)",
    "|- (p -> q) | (q -> p)",
    "p, p -> q |- q",
    "|- (p & q) -> (p * (p -> q))",
]


@dataclass
class Config:
    sequents: list = field(default_factory=lambda: list(DEFAULT_SEQUENTS))
    max_worlds: int = 3
    max_denominator: int = 4
    classical_worlds: int = 3
    json: bool = False


def classically_valid(s, max_worlds):
    """Validity on all classical linear Kripke frames up to ``max_worlds``,
    with the strong conjunction read as meet (they coincide on {0, 1})."""
    f = _meetify(Implies(tensor_fold_formulas(s.context), s.conclusion))
    atoms = atoms_of(f)
    for k in range(1, max_worlds + 1):
        persistent = [tuple(j >= i for j in range(k)) for i in range(k + 1)]
        for choice in itertools.product(persistent, repeat=len(atoms)):
            c = ClassicalLinearKripke(k, dict(zip(atoms, choice)))
            if not all(classical_eval(c, w, f) for w in range(k)):
                return False
    return True


def _meetify(f):
    if isinstance(f, BINARY):
        cls = And if isinstance(f, Tensor) else type(f)
        return cls(_meetify(f.left), _meetify(f.right))
    return f


def run(cfg: Config):
    rows = []
    bounds = SearchBounds(cfg.max_worlds, cfg.max_denominator)
    for text in cfg.sequents:
        s = parse_sequent(text)
        out = find_countermodel(s, bounds)
        row = {"sequent": text, "classical": classically_valid(s, cfg.classical_worlds)}
        if isinstance(out, Countermodel):
            row["bl"] = "countermodel"
            row["worlds"] = out.structure.worlds
            row["denominator"] = out.denominator
            row["valuation"] = {a: [format_value(x) for x in fn] for a, fn in out.structure.valuation.items()}
        else:
            row["bl"] = f"none up to K={cfg.max_worlds}, N={cfg.max_denominator}"
        rows.append(row)
    return rows


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("sequents", nargs="*")
    ap.add_argument("--max-worlds", type=int, default=Config.max_worlds)
    ap.add_argument("--max-denom", type=int, default=Config.max_denominator)
    ap.add_argument("--json", action="store_true")
    a = ap.parse_args()
    cfg = Config(max_worlds=a.max_worlds, max_denominator=a.max_denom, json=a.json)
    if a.sequents:
        cfg.sequents = a.sequents
    rows = run(cfg)
    if cfg.json:
        print(json.dumps({"config": asdict(cfg), "rows": rows}, indent=2))
        return
    width = max(len(r["sequent"]) for r in rows)
    print(f"{'sequent':<{width}}  classical  BL")
    for r in rows:
        bl = r["bl"]
        if bl == "countermodel":
            vals = ", ".join(f"{a}=[{', '.join(v)}]" for a, v in r["valuation"].items())
            bl = f"refuted with {r['worlds']} world(s): {vals}"
        print(f"{r['sequent']:<{width}}  {'valid' if r['classical'] else 'invalid':<9}  {bl}")


if __name__ == "__main__":
    main()
