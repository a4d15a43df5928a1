"""Acceptance gate: one test per criterion, exact arithmetic throughout.

Run with ``pytest tests/test_acceptance.py``; the terminal summary lists a
PASS/FAIL line per criterion.
"""

import itertools
import random
from fractions import Fraction as F

import pytest

from blw.corpus import PQ_IMPLIES_P, hilbert_corpus, nd_corpus
from blw.hilbert import AXIOMS, Axiom, HilbertLine, HilbertProof, check_hilbert, hilbert_to_nd
from blw.lbm import (
    ClassicalLinearKripke, LBMStructure, classical_eval, embed_classical, evaluate,
    holds,
)
from blw.mv import (
    ONE, ZERO, floored_inf, mv_and, mv_denote, mv_impl, mv_or, mv_otimes,
    slope_check, slope_compare,
)
from blw.nd import NDProof, axiom_derivation, check_nd, curry, tensor_fold, tensor_unfold, uncurry
from blw.poset import agree_with_lbm
from blw.search import (
    Countermodel, NoneFound, SearchBounds, enumerate_sloping, find_countermodel,
    random_lbm, soundness_fuzz,
)
from blw.syntax import (
    And, Atom, Implies, Or, Sequent, Tensor, atoms_of, enumerate_formulas, parse_formula,
    parse_sequent, random_formula,
)

AXIOM_IDS = sorted(AXIOMS, key=lambda a: int(a[1:]))
p, q, r = Atom("p"), Atom("q"), Atom("r")


def _finish(record, violations, detail):
    record("detail", detail)
    assert violations == 0, detail


@pytest.mark.criterion(1, "MV-algebra laws on the 13-element chain")
def test_mv_laws(record_property):
    grid = [F(a, 12) for a in range(13)]
    bad = 0
    for x, y in itertools.product(grid, repeat=2):
        bad += mv_otimes(x, y) != mv_otimes(y, x)
        bad += mv_otimes(x, ONE) != x
        bad += mv_otimes(x, mv_impl(x, y)) != mv_and(x, y)
        bad += mv_or(mv_impl(x, y), mv_impl(y, x)) != ONE
    for x, y, z in itertools.product(grid, repeat=3):
        bad += mv_otimes(mv_otimes(x, y), z) != mv_otimes(x, mv_otimes(y, z))
        bad += (mv_otimes(x, y) <= z) != (x <= mv_impl(y, z))
    _finish(record_property, bad, f"{bad} violations over 169 pairs and 2197 triples")


@pytest.mark.criterion(2, "floored infimum: min/inf form equals the two-case form, result sloping")
def test_floored_inf(record_property):
    chain = [F(a, 3) for a in range(4)]
    bad = checked = 0
    for k in range(1, 5):
        for values in itertools.product(chain, repeat=k):
            prof = []
            for w in range(k):
                two_case = values[w] if all(v == ONE for v in values[w + 1:]) else ZERO
                got = floored_inf(values, w)
                bad += got != two_case
                prof.append(got)
                checked += 1
            bad += not slope_check(prof)
    _finish(record_property, bad, f"{bad} violations over {checked} (sequence, world) pairs")


@pytest.mark.criterion(3, "sloping enumeration count and brute-force agreement, k, n <= 4")
def test_enumeration(record_property):
    bad = 0
    for k, n in itertools.product(range(1, 5), repeat=2):
        fs = [f.values for f in enumerate_sloping(k, n)]
        grid = [F(a, n) for a in range(n + 1)]
        brute = {t for t in itertools.product(grid, repeat=k) if slope_check(t)}
        bad += not (len(fs) == 1 + k * n == len(set(fs)) and set(fs) == brute)
    _finish(record_property, bad, f"{bad} of 16 (k, n) cells disagree")


def _sample_formulas(rng, atoms, depth, count):
    seen = {}
    while len(seen) < count:
        f = random_formula(rng, atoms, depth)
        seen.setdefault(f, None)
    return list(seen)


@pytest.mark.criterion(4, "formula profiles are sloping and non-decreasing")
def test_profiles(record_property):
    rng = random.Random(2024)
    pools = {atoms: _sample_formulas(rng, atoms, 3, 200) for atoms in ("p", "pq", "pqr")}
    bad = evaluations = 0
    for _ in range(1000):
        atoms = "pqr"[:rng.randint(1, 3)]
        m = random_lbm(atoms, rng.randint(1, 4), rng.randint(1, 4), rng.getrandbits(64))
        for f in pools[atoms]:
            vals = [evaluate(m, w, f) for w in range(m.worlds)]
            bad += not (slope_check(vals) and vals == sorted(vals))
            evaluations += 1
    _finish(record_property, bad, f"{bad} violations in {evaluations} profiles, 1000 structures x 200 formulas")


@pytest.mark.criterion(5, "classical linear Kripke models embed exactly")
def test_classical_embedding(record_property):
    fs = enumerate_formulas(["p", "q"], 3, (And, Or, Implies))
    bad = structures = 0
    for k in range(1, 4):
        persistent = [tuple(j >= i for j in range(k)) for i in range(k + 1)]
        for tp, tq in itertools.product(persistent, repeat=2):
            c = ClassicalLinearKripke(k, {"p": tp, "q": tq})
            m = embed_classical(c)
            structures += 1
            for f in fs:
                for w in range(k):
                    bad += classical_eval(c, w, f) != (evaluate(m, w, f) == ONE)
    _finish(record_property, bad, f"{bad} mismatches, {structures} structures x {len(fs)} formulas")


@pytest.mark.criterion(6, "poset-product denotation equals Kripke evaluation; element order total")
def test_poset_agreement(record_property):
    rng = random.Random(11)
    bad = 0
    for _ in range(500):
        k, n = rng.randint(1, 4), rng.randint(1, 4)
        cands = list(enumerate_sloping(k, n))
        h = {a: rng.choice(cands) for a in "pqr"}
        bad += not agree_with_lbm(h, random_formula(rng, "pqr", 4))
    grid = list(enumerate_sloping(4, 4))
    for f, g in itertools.product(grid, repeat=2):
        try:
            slope_compare(f, g)
        except AssertionError:
            bad += 1
    _finish(record_property, bad, f"{bad} failures over 500 pairs and {len(grid) ** 2} comparisons")


def _round_trips(proof):
    s = check_nd(proof)
    done = 0
    if s.context:
        assert check_nd(uncurry(curry(proof))) == s
        done += 1
    if isinstance(s.conclusion, Implies):
        assert check_nd(curry(uncurry(proof))) == s
        done += 1
    if len(s.context) >= 2:
        assert check_nd(tensor_unfold(tensor_fold(proof))) == s
        done += 1
    if s.context and isinstance(s.context[-1], Tensor):
        assert check_nd(tensor_fold(tensor_unfold(proof))) == s
        done += 1
    return done


@pytest.mark.criterion(7, "proof systems: templates, one-line proofs, translation, round trips")
def test_proof_systems(record_property):
    for a in AXIOM_IDS:
        f = check_nd(axiom_derivation(a, p, q, r)).conclusion
        assert check_hilbert(HilbertProof((HilbertLine(f, Axiom(a)),))) == f
    corpus = hilbert_corpus()
    assert PQ_IMPLIES_P in corpus.values() and len(corpus) == 10
    for proof in corpus.values():
        assert check_nd(hilbert_to_nd(proof)) == Sequent((), check_hilbert(proof))
    nd = nd_corpus(seed=0, size=50)
    trips = sum(_round_trips(x) for x in nd)
    record_property("detail", f"14 templates, 14 one-line proofs, 10 translations, {trips} round trips on 50 proofs")


@pytest.mark.criterion(8, "soundness fuzz on every node of every corpus proof, plus negative control")
def test_soundness_fuzz(record_property):
    proofs = [hilbert_to_nd(h) for h in hilbert_corpus().values()] + nd_corpus(seed=0, size=50)
    bounds = SearchBounds(3, 4)
    failures = evaluations = 0
    for i, proof in enumerate(proofs):
        rep = soundness_fuzz(proof, 500, bounds, seed=i)
        failures += not rep.passed
        evaluations += rep.sequents_checked
    control = soundness_fuzz(NDProof("Ax", parse_sequent("p |- p * p")), 500, bounds, check=False)
    has_witness = control.witness is not None
    _finish(record_property, failures + (not has_witness),
            f"{failures} failing proofs of {len(proofs)}, {evaluations} sequent evaluations, "
            f"control witness {'found' if has_witness else 'MISSING'}")


@pytest.mark.criterion(9, "contraction fails in BL but holds on classical linear frames")
def test_bl_vs_gd(record_property):
    small = SearchBounds(1, 2)
    problems = []
    for text in ("p |- p*p", "|- p -> p*p"):
        if not isinstance(find_countermodel(parse_sequent(text), small), Countermodel):
            problems.append(text)
    big = SearchBounds(4, 6)
    theorems = [Sequent((), parse_formula("(p->q)|(q->p)"))]
    theorems += [check_nd(axiom_derivation(a, p, q, r)) for a in AXIOM_IDS]
    for s in theorems:
        if not isinstance(find_countermodel(s, big), NoneFound):
            problems.append(str(s))
    contraction = parse_formula("p -> p & p")
    for k in range(1, 4):
        for i in range(k + 1):
            c = ClassicalLinearKripke(k, {"p": [j >= i for j in range(k)]})
            if not all(classical_eval(c, w, contraction) for w in range(k)):
                problems.append(f"classical k={k} i={i}")
    _finish(record_property, len(problems),
            f"2 refutations, {len(theorems)} theorems without countermodel at K=4, N=6, "
            f"{len(problems)} problems {problems or ''}".rstrip())


@pytest.mark.criterion(10, "single-world Kripke validity equals algebraic validity")
def test_algebra_vs_kripke(record_property):
    rng = random.Random(5)
    chain = [F(a, 6) for a in range(7)]
    bad = valid = 0
    for _ in range(500):
        atoms = "pq"[:rng.randint(1, 2)]
        f = random_formula(rng, atoms, 4)
        names = atoms_of(f)
        algebraic = kripke = True
        for vals in itertools.product(chain, repeat=len(names)):
            a = dict(zip(names, vals))
            algebraic &= mv_denote(a, f) == ONE
            kripke &= bool(holds(LBMStructure(1, {x: [v] for x, v in a.items()}), Sequent((), f)))
        bad += algebraic != kripke
        valid += algebraic
    _finish(record_property, bad, f"{bad} mismatches over 500 formulas ({valid} valid on the 7-element chain)")
