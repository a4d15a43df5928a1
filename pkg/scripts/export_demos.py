"""Write the bundled proofs and a few models as JSON files for the CLI."""

import argparse
import json
from pathlib import Path

from blw.corpus import hilbert_corpus
from blw.hilbert import hilbert_to_json
from blw.nd import NDProof, axiom_derivation, proof_to_json
from blw.syntax import Atom, parse_sequent

MODELS = {
    "half": {"worlds": 1, "denominator": 2, "valuation": {"p": [1]}},
    "two_worlds": {"worlds": 2, "denominator": 2, "valuation": {"p": [0, 2], "q": [1, 2]}},
}


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("out", nargs="?", default="demo")
    out = Path(ap.parse_args().out)
    (out / "hilbert").mkdir(parents=True, exist_ok=True)
    (out / "nd").mkdir(exist_ok=True)
    (out / "models").mkdir(exist_ok=True)

    def dump(path, obj):
        path.write_text(json.dumps(obj, indent=1) + "\n")

    for name, proof in hilbert_corpus().items():
        dump(out / "hilbert" / f"{name}.json", hilbert_to_json(proof))
    p, q, r = Atom("p"), Atom("q"), Atom("r")
    for i in range(1, 15):
        dump(out / "nd" / f"A{i}.json", proof_to_json(axiom_derivation(f"A{i}", p, q, r)))
    dump(out / "nd" / "corrupted.json", proof_to_json(NDProof("Ax", parse_sequent("p |- p * p"))))
    for name, model in MODELS.items():
        dump(out / "models" / f"{name}.json", model)
    print(f"wrote {sum(1 for _ in out.rglob('*.json'))} files under {out}/")


if __name__ == "__main__":
    main()
