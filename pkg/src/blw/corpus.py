"""Bundled proofs for the tests and the CLI demos."""

from __future__ import annotations

import random

from .hilbert import HilbertProof
from .nd import NDProof, axiom_derivation, check_nd, tensor_fold, uncurry
from .syntax import Implies, random_formula

__all__ = ["hilbert_corpus", "nd_corpus", "PQ_IMPLIES_P"]

# (p * q) -> p in five lines: commute, project, chain with A2.
PQ_IMPLIES_P = HilbertProof.from_steps(
    ("(p * q) -> (q * p)", "A3"),
    ("(q * p) -> p", "A4"),
    ("((p * q) -> (q * p)) -> (((q * p) -> p) -> ((p * q) -> p))", "A2"),
    ("((q * p) -> p) -> ((p * q) -> p)", (3, 1)),
    ("(p * q) -> p", (4, 2)),
)


def hilbert_corpus() -> dict[str, HilbertProof]:
    """Ten checked Hilbert proofs, keyed by a short name."""
    return {
        "identity": HilbertProof.from_steps(("p -> p", "A1")),
        "tensor_left_projection": PQ_IMPLIES_P,
        "prelinearity": HilbertProof.from_steps(("(p -> q) | (q -> p)", "A14")),
        "weakening_k": HilbertProof.from_steps(
            ("(p * q) -> (q * p)", "A3"),
            ("(q * p) -> p", "A4"),
            ("((p * q) -> (q * p)) -> (((q * p) -> p) -> ((p * q) -> p))", "A2"),
            ("((q * p) -> p) -> ((p * q) -> p)", (3, 1)),
            ("(p * q) -> p", (4, 2)),
            ("((p * q) -> p) -> (p -> (q -> p))", "A6"),
            ("p -> (q -> p)", (6, 5)),
        ),
        "meet_to_implication": HilbertProof.from_steps(
            ("(p & q) -> (p * (p -> q))", "A8"),
            ("(p * (p -> q)) -> (p -> q)", "A4"),
            ("((p & q) -> (p * (p -> q))) -> (((p * (p -> q)) -> (p -> q)) -> ((p & q) -> (p -> q)))", "A2"),
            ("((p * (p -> q)) -> (p -> q)) -> ((p & q) -> (p -> q))", (3, 1)),
            ("(p & q) -> (p -> q)", (4, 2)),
        ),
        "tensor_to_join": HilbertProof.from_steps(
            ("(p * q) -> q", "A4"),
            ("q -> (q | r)", "A10"),
            ("((p * q) -> q) -> ((q -> (q | r)) -> ((p * q) -> (q | r)))", "A2"),
            ("(q -> (q | r)) -> ((p * q) -> (q | r))", (3, 1)),
            ("(p * q) -> (q | r)", (4, 2)),
        ),
        "join_elimination": HilbertProof.from_steps(
            ("((p -> r) & (q -> r)) -> ((p | q) -> r)", "A12"),
        ),
        "commute_antecedent": HilbertProof.from_steps(
            ("(q * p) -> (p * q)", "A3"),
            ("((q * p) -> (p * q)) -> (((p * q) -> r) -> ((q * p) -> r))", "A2"),
            ("((p * q) -> r) -> ((q * p) -> r)", (2, 1)),
        ),
        "meet_left_projection": HilbertProof.from_steps(
            ("(p & q) -> (p * (p -> q))", "A8"),
            ("(p * (p -> q)) -> ((p -> q) * p)", "A3"),
            ("((p & q) -> (p * (p -> q))) -> (((p * (p -> q)) -> ((p -> q) * p)) -> ((p & q) -> ((p -> q) * p)))", "A2"),
            ("((p * (p -> q)) -> ((p -> q) * p)) -> ((p & q) -> ((p -> q) * p))", (3, 1)),
            ("(p & q) -> ((p -> q) * p)", (4, 2)),
            ("((p -> q) * p) -> p", "A4"),
            ("((p & q) -> ((p -> q) * p)) -> ((((p -> q) * p) -> p) -> ((p & q) -> p))", "A2"),
            ("(((p -> q) * p) -> p) -> ((p & q) -> p)", (7, 5)),
            ("(p & q) -> p", (8, 6)),
        ),
        "divisibility_swap": HilbertProof.from_steps(
            ("(p * (p -> q)) -> (p & q)", "A7"),
            ("(p & q) -> (q & p)", "A9"),
            ("((p * (p -> q)) -> (p & q)) -> (((p & q) -> (q & p)) -> ((p * (p -> q)) -> (q & p)))", "A2"),
            ("((p & q) -> (q & p)) -> ((p * (p -> q)) -> (q & p))", (3, 1)),
            ("(p * (p -> q)) -> (q & p)", (4, 2)),
        ),
    }


def nd_corpus(seed: int = 0, size: int = 50) -> list[NDProof]:
    """Seeded natural deduction proofs: random axiom instances, some moved
    into the context by uncurrying and some with the last two hypotheses
    folded into a strong conjunction."""
    rng = random.Random(seed)
    atoms = ("p", "q", "r")
    out = []
    for i in range(size):
        axiom = f"A{i % 14 + 1}"
        args = [random_formula(rng, atoms, 2) for _ in range(3)]
        proof = axiom_derivation(axiom, *args)
        for _ in range(rng.randint(0, 3)):
            if not isinstance(proof.sequent.conclusion, Implies):
                break
            proof = uncurry(proof)
        if len(proof.sequent.context) >= 2 and rng.random() < 0.3:
            proof = tensor_fold(proof)
        check_nd(proof)
        out.append(proof)
    return out
