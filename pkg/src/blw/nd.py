"""Natural deduction for BL with explicit sequent contexts.

Every node stores its full sequent and the checker validates it against the
rule schema and the premises' sequents.  Contexts are sequences: active
formulas sit at fixed positions (last, or last two) and ``Ex`` swaps one
adjacent pair.  There is no contraction.

Rules and arities::

    Ax, Prelin                                  0
    W, Ex, ImpI, AndE1, AndE2, OrI1, OrI2,
    Div, BotE                                   1
    ImpE, TensI, TensE, AndI                    2
    OrE                                         3
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Iterator, Mapping, Optional, Sequence

from .syntax import (
    BOT, And, Bottom, Formula, Implies, Or, ParseError, Sequent, Tensor,
    parse_sequent, render_sequent,
)

__all__ = [
    "RULES", "NDProof", "ProofError", "ProofFormatError", "check_nd", "iter_nodes",
    "ax", "weaken", "exchange", "imp_i", "imp_e", "tens_i", "tens_e", "and_i",
    "and_e", "or_i", "or_e", "div", "bot_e", "prelin", "curry", "uncurry",
    "tensor_fold", "tensor_unfold", "axiom_derivation", "proof_to_json",
    "proof_from_json",
]

RULES: dict[str, int] = {
    "Ax": 0, "Prelin": 0,
    "W": 1, "Ex": 1, "ImpI": 1, "AndE1": 1, "AndE2": 1, "OrI1": 1, "OrI2": 1,
    "Div": 1, "BotE": 1,
    "ImpE": 2, "TensI": 2, "TensE": 2, "AndI": 2,
    "OrE": 3,
}


@dataclass(frozen=True)
class NDProof:
    rule: str
    sequent: Sequent
    premises: tuple["NDProof", ...] = ()

    def __post_init__(self):
        if not isinstance(self.premises, tuple):
            object.__setattr__(self, "premises", tuple(self.premises))

    @property
    def conclusion(self) -> Sequent:
        return self.sequent

    def size(self) -> int:
        return sum(1 for _ in iter_nodes(self))


class ProofError(ValueError):
    """A node violates its rule.  ``path`` lists premise indices from the root."""

    def __init__(self, path: tuple[int, ...], rule: str, reason: str, sequent: Optional[Sequent] = None):
        self.path = path
        self.rule = rule
        self.reason = reason
        self.sequent = sequent
        where = "root" if not path else "root." + ".".join(map(str, path))
        shown = f" [{render_sequent(sequent)}]" if sequent is not None else ""
        super().__init__(f"{where} ({rule}){shown}: {reason}")


class ProofFormatError(ValueError):
    pass


class _Reject(Exception):
    pass


def iter_nodes(p: NDProof, path: tuple[int, ...] = ()) -> Iterator[tuple[tuple[int, ...], NDProof]]:
    """Pre-order traversal yielding ``(path, node)``."""
    stack = [(path, p)]
    while stack:
        path, node = stack.pop()
        yield path, node
        for i in reversed(range(len(node.premises))):
            stack.append((path + (i,), node.premises[i]))


# ------------------------------------------------------------------ checking

def _need(cond: bool, msg: str) -> None:
    if not cond:
        raise _Reject(msg)


def _same_conclusion(s: Sequent, prem: Sequent) -> None:
    _need(s.conclusion == prem.conclusion,
          f"conclusion formula mismatch: expected {prem.conclusion}, got {s.conclusion}")


def _same_context(s: Sequent, prem: Sequent) -> None:
    _need(s.context == prem.context, "context must equal the premise context")


def _rule_ax(s, ps):
    _need(len(s.context) == 1 and s.context[0] == s.conclusion,
          "axiom must have the form A |- A")


def _rule_prelin(s, ps):
    c = s.conclusion
    _need(isinstance(c, Or) and isinstance(c.left, Implies) and isinstance(c.right, Implies)
          and c.left.left == c.right.right and c.left.right == c.right.left,
          "conclusion must have the form (A -> B) | (B -> A)")


def _rule_w(s, ps):
    (p,) = ps
    _need(len(s.context) == len(p.context) + 1 and s.context[:-1] == p.context,
          "conclusion context must be the premise context plus one formula at the end")
    _same_conclusion(s, p)


def _rule_ex(s, ps):
    (p,) = ps
    _same_conclusion(s, p)
    a, b = p.context, s.context
    _need(len(a) == len(b), "exchange must keep the context length")
    diff = [i for i in range(len(a)) if a[i] != b[i]]
    if not diff:
        _need(any(a[i] == a[i + 1] for i in range(len(a) - 1)),
              "contexts are identical and contain no adjacent equal pair to swap")
        return
    _need(len(diff) == 2 and diff[1] == diff[0] + 1
          and a[diff[0]] == b[diff[1]] and a[diff[1]] == b[diff[0]],
          "contexts must differ by exactly one adjacent transposition")


def _rule_imp_i(s, ps):
    (p,) = ps
    _need(len(p.context) >= 1, "premise context is empty; nothing to discharge")
    _need(s.context == p.context[:-1], "conclusion context must be the premise context minus its last formula")
    expected = Implies(p.context[-1], p.conclusion)
    _need(s.conclusion == expected, f"conclusion formula mismatch: expected {expected}, got {s.conclusion}")


def _rule_imp_e(s, ps):
    major, minor = ps
    f = major.conclusion
    _need(isinstance(f, Implies), f"first premise must conclude an implication, got {f}")
    _need(minor.conclusion == f.left,
          f"second premise must conclude the antecedent {f.left}, got {minor.conclusion}")
    _need(s.context == major.context + minor.context, "conclusion context must concatenate the premise contexts")
    _need(s.conclusion == f.right, f"conclusion formula mismatch: expected {f.right}, got {s.conclusion}")


def _rule_tens_i(s, ps):
    left, right = ps
    _need(s.context == left.context + right.context, "conclusion context must concatenate the premise contexts")
    expected = Tensor(left.conclusion, right.conclusion)
    _need(s.conclusion == expected, f"conclusion formula mismatch: expected {expected}, got {s.conclusion}")


def _rule_tens_e(s, ps):
    minor, major = ps
    f = major.conclusion
    _need(isinstance(f, Tensor), f"second premise must conclude a strong conjunction, got {f}")
    _need(len(minor.context) >= 2 and minor.context[-2:] == (f.left, f.right),
          f"first premise context must end with {f.left}, {f.right}")
    _need(s.context == minor.context[:-2] + major.context,
          "conclusion context must be the first premise's remaining context followed by the second's")
    _same_conclusion(s, minor)


def _rule_and_i(s, ps):
    left, right = ps
    _need(left.context == right.context, "premises must share the same context")
    _same_context(s, left)
    expected = And(left.conclusion, right.conclusion)
    _need(s.conclusion == expected, f"conclusion formula mismatch: expected {expected}, got {s.conclusion}")


def _and_e(side):
    def rule(s, ps):
        (p,) = ps
        _need(isinstance(p.conclusion, And), f"premise must conclude a conjunction, got {p.conclusion}")
        _same_context(s, p)
        expected = getattr(p.conclusion, side)
        _need(s.conclusion == expected, f"conclusion formula mismatch: expected {expected}, got {s.conclusion}")
    return rule


def _or_i(side):
    def rule(s, ps):
        (p,) = ps
        _need(isinstance(s.conclusion, Or), f"conclusion must be a disjunction, got {s.conclusion}")
        _same_context(s, p)
        _need(getattr(s.conclusion, side) == p.conclusion,
              f"the {side} disjunct must be the premise conclusion {p.conclusion}")
    return rule


def _rule_or_e(s, ps):
    major, left, right = ps
    f = major.conclusion
    _need(isinstance(f, Or), f"first premise must conclude a disjunction, got {f}")
    _need(len(left.context) >= 1 and left.context[-1] == f.left,
          f"second premise context must end with {f.left}")
    _need(len(right.context) >= 1 and right.context[-1] == f.right,
          f"third premise context must end with {f.right}")
    delta = left.context[:-1]
    _need(right.context[:-1] == delta, "case premises must share the same side context")
    _need(left.conclusion == right.conclusion, "case premises must have the same conclusion")
    _need(s.context == major.context + delta, "conclusion context must concatenate the major context and the side context")
    _same_conclusion(s, left)


def _rule_div(s, ps):
    (p,) = ps
    _same_conclusion(s, p)
    _need(len(p.context) >= 2 and len(s.context) == len(p.context),
          "premise and conclusion contexts must have the same length, at least 2")
    phi, imp = p.context[-2], p.context[-1]
    _need(isinstance(imp, Implies) and imp.left == phi,
          "premise context must end with A, A -> B")
    psi = imp.right
    _need(s.context[:-2] == p.context[:-2], "the leading context must be unchanged")
    _need(s.context[-2:] == (psi, Implies(psi, phi)),
          f"conclusion context must end with {psi}, {Implies(psi, phi)}")


def _rule_bot_e(s, ps):
    (p,) = ps
    _need(isinstance(p.conclusion, Bottom), f"premise must conclude bot, got {p.conclusion}")
    _same_context(s, p)


_CHECKS = {
    "Ax": _rule_ax, "Prelin": _rule_prelin, "W": _rule_w, "Ex": _rule_ex,
    "ImpI": _rule_imp_i, "ImpE": _rule_imp_e, "TensI": _rule_tens_i,
    "TensE": _rule_tens_e, "AndI": _rule_and_i, "AndE1": _and_e("left"),
    "AndE2": _and_e("right"), "OrI1": _or_i("left"), "OrI2": _or_i("right"),
    "OrE": _rule_or_e, "Div": _rule_div, "BotE": _rule_bot_e,
}


def check_nd(p: NDProof) -> Sequent:
    """Verify every node of ``p``; return the root sequent or raise ProofError."""
    checked: set[int] = set()

    def go(node: NDProof, path: tuple[int, ...]) -> Sequent:
        if id(node) in checked:
            return node.sequent
        if node.rule not in RULES:
            raise ProofError(path, node.rule, "unknown rule", node.sequent)
        if len(node.premises) != RULES[node.rule]:
            raise ProofError(path, node.rule,
                             f"expects {RULES[node.rule]} premises, got {len(node.premises)}", node.sequent)
        prems = [go(q, path + (i,)) for i, q in enumerate(node.premises)]
        try:
            _CHECKS[node.rule](node.sequent, prems)
        except _Reject as e:
            raise ProofError(path, node.rule, str(e), node.sequent) from None
        checked.add(id(node))
        return node.sequent

    return go(p, ())


# ------------------------------------------------------- smart constructors
# These compute the conclusion from the premises; check_nd remains the judge.

def ax(f: Formula) -> NDProof:
    return NDProof("Ax", Sequent((f,), f))


def weaken(p: NDProof, f: Formula) -> NDProof:
    s = p.sequent
    return NDProof("W", Sequent(s.context + (f,), s.conclusion), (p,))


def exchange(p: NDProof, i: int) -> NDProof:
    """Swap context positions ``i`` and ``i + 1``."""
    ctx = list(p.sequent.context)
    ctx[i], ctx[i + 1] = ctx[i + 1], ctx[i]
    return NDProof("Ex", Sequent(ctx, p.sequent.conclusion), (p,))


def move_last_to(p: NDProof, i: int) -> NDProof:
    """Bubble the last context formula down to position ``i`` with Ex steps."""
    for j in range(len(p.sequent.context) - 2, i - 1, -1):
        p = exchange(p, j)
    return p


def imp_i(p: NDProof) -> NDProof:
    s = p.sequent
    return NDProof("ImpI", Sequent(s.context[:-1], Implies(s.context[-1], s.conclusion)), (p,))


def imp_e(major: NDProof, minor: NDProof) -> NDProof:
    f = major.sequent.conclusion
    return NDProof("ImpE", Sequent(major.sequent.context + minor.sequent.context, f.right), (major, minor))


def tens_i(left: NDProof, right: NDProof) -> NDProof:
    return NDProof("TensI", Sequent(left.sequent.context + right.sequent.context,
                                    Tensor(left.sequent.conclusion, right.sequent.conclusion)), (left, right))


def tens_e(minor: NDProof, major: NDProof) -> NDProof:
    return NDProof("TensE", Sequent(minor.sequent.context[:-2] + major.sequent.context,
                                    minor.sequent.conclusion), (minor, major))


def and_i(left: NDProof, right: NDProof) -> NDProof:
    return NDProof("AndI", Sequent(left.sequent.context,
                                   And(left.sequent.conclusion, right.sequent.conclusion)), (left, right))


def and_e(p: NDProof, i: int) -> NDProof:
    f = p.sequent.conclusion
    return NDProof(f"AndE{i}", Sequent(p.sequent.context, f.left if i == 1 else f.right), (p,))


def or_i(p: NDProof, i: int, other: Formula) -> NDProof:
    c = p.sequent.conclusion
    disj = Or(c, other) if i == 1 else Or(other, c)
    return NDProof(f"OrI{i}", Sequent(p.sequent.context, disj), (p,))


def or_e(major: NDProof, left: NDProof, right: NDProof) -> NDProof:
    return NDProof("OrE", Sequent(major.sequent.context + left.sequent.context[:-1],
                                  left.sequent.conclusion), (major, left, right))


def div(p: NDProof) -> NDProof:
    ctx = p.sequent.context
    phi, psi = ctx[-2], ctx[-1].right
    return NDProof("Div", Sequent(ctx[:-2] + (psi, Implies(psi, phi)), p.sequent.conclusion), (p,))


def bot_e(p: NDProof, f: Formula) -> NDProof:
    return NDProof("BotE", Sequent(p.sequent.context, f), (p,))


def prelin(context: Sequence[Formula], a: Formula, b: Formula) -> NDProof:
    return NDProof("Prelin", Sequent(context, Or(Implies(a, b), Implies(b, a))))


# -------------------------------------------------- deduction-theorem moves

def curry(p: NDProof) -> NDProof:
    """``G, A |- C``  to  ``G |- A -> C``."""
    s = check_nd(p)
    if not s.context:
        raise ValueError(f"curry needs a non-empty context: {s}")
    return imp_i(p)


def uncurry(p: NDProof) -> NDProof:
    """``G |- A -> C``  to  ``G, A |- C``."""
    s = check_nd(p)
    if not isinstance(s.conclusion, Implies):
        raise ValueError(f"uncurry needs an implication as conclusion: {s}")
    return imp_e(p, ax(s.conclusion.left))


def tensor_fold(p: NDProof) -> NDProof:
    """``G, A, B |- C``  to  ``G, A * B |- C``."""
    s = check_nd(p)
    if len(s.context) < 2:
        raise ValueError(f"tensor_fold needs at least two context formulas: {s}")
    a, b = s.context[-2:]
    return tens_e(p, ax(Tensor(a, b)))


def tensor_unfold(p: NDProof) -> NDProof:
    """``G, A * B |- C``  to  ``G, A, B |- C``."""
    s = check_nd(p)
    if not s.context or not isinstance(s.context[-1], Tensor):
        raise ValueError(f"tensor_unfold needs a strong conjunction last in the context: {s}")
    t = s.context[-1]
    return imp_e(imp_i(p), tens_i(ax(t.left), ax(t.right)))


# ------------------------------------------------------- axiom derivations

def _a1(a, b, c):
    return imp_i(ax(a))


def _a2(a, b, c):
    # A -> B, B -> C, A |- C
    ab, bc = Implies(a, b), Implies(b, c)
    p = imp_e(ax(bc), imp_e(ax(ab), ax(a)))      # B -> C, A -> B, A |- C
    p = exchange(p, 0)
    return imp_i(imp_i(imp_i(p)))


def _a3(a, b, c):
    p = exchange(tens_i(ax(b), ax(a)), 0)        # A, B |- B * A
    return imp_i(tens_e(p, ax(Tensor(a, b))))


def _a4(a, b, c):
    p = exchange(weaken(ax(b), a), 0)            # A, B |- B
    return imp_i(tensor_fold(p))


def _a5(a, b, c):
    abc = Implies(a, Implies(b, c))
    p = imp_e(imp_e(ax(abc), ax(a)), ax(b))      # A -> (B -> C), A, B |- C
    return imp_i(imp_i(tens_e(p, ax(Tensor(a, b)))))


def _a6(a, b, c):
    p = imp_e(ax(Implies(Tensor(a, b), c)), tens_i(ax(a), ax(b)))
    return imp_i(imp_i(imp_i(p)))


def _a7(a, b, c):
    ab = Implies(a, b)
    # weakening suffices here; divisibility is only needed for A8
    get_b = exchange(imp_e(ax(ab), ax(a)), 0)     # A, A -> B |- B
    get_a = weaken(ax(a), ab)                     # A, A -> B |- A
    p = and_i(get_a, get_b)
    return imp_i(tens_e(p, ax(Tensor(a, ab))))


def _a8(a, b, c):
    conj = And(a, b)
    # goal: A * (A -> B)
    # case A -> B:  A & B, A -> B |- A * (A -> B)
    case1 = tens_i(and_e(ax(conj), 1), ax(Implies(a, b)))
    # case B -> A:  from  A, A -> B |- goal  by Div get  B, B -> A |- goal,
    # then replace the hypothesis B by A & B through an implication cut
    base = tens_i(ax(a), ax(Implies(a, b)))
    divided = div(base)                            # B, B -> A |- goal
    lifted = imp_i(imp_i(divided))                 # |- B -> ((B -> A) -> goal)
    case2 = imp_e(imp_e(lifted, and_e(ax(conj), 2)), ax(Implies(b, a)))
    p = or_e(prelin((), a, b), case1, case2)       # A & B |- goal
    return imp_i(p)


def _a9(a, b, c):
    conj = And(a, b)
    return imp_i(and_i(and_e(ax(conj), 2), and_e(ax(conj), 1)))


def _a10(a, b, c):
    return imp_i(or_i(ax(a), 1, b))


def _a11(a, b, c):
    return imp_i(or_i(ax(b), 2, a))


def _a12(a, b, c):
    # (A -> B) & (C -> B), A | C |- B
    conj = And(Implies(a, b), Implies(c, b))
    left = imp_e(and_e(ax(conj), 1), ax(a))
    right = imp_e(and_e(ax(conj), 2), ax(c))
    p = or_e(ax(Or(a, c)), left, right)           # A | C, conj |- B
    return imp_i(imp_i(exchange(p, 0)))


def _a13(a, b, c):
    return imp_i(bot_e(ax(BOT), a))


def _a14(a, b, c):
    return prelin((), a, b)


_TEMPLATES = {
    "A1": (_a1, 1), "A2": (_a2, 3), "A3": (_a3, 2), "A4": (_a4, 2),
    "A5": (_a5, 3), "A6": (_a6, 3), "A7": (_a7, 2), "A8": (_a8, 2),
    "A9": (_a9, 2), "A10": (_a10, 2), "A11": (_a11, 2), "A12": (_a12, 3),
    "A13": (_a13, 1), "A14": (_a14, 2),
}


def axiom_derivation(axiom: str, phi: Formula, psi: Optional[Formula] = None,
                     chi: Optional[Formula] = None) -> NDProof:
    """Natural deduction proof of the instance of Hilbert axiom ``A1``..``A14``
    at the given formulas."""
    try:
        build, arity = _TEMPLATES[axiom]
    except KeyError:
        raise ValueError(f"unknown axiom {axiom!r}") from None
    args = (phi, psi, chi)
    if any(x is None for x in args[:arity]):
        raise ValueError(f"{axiom} needs {arity} instantiating formulas")
    return build(*args)


# ------------------------------------------------------------------- files

def proof_to_json(p: NDProof) -> dict[str, Any]:
    return {
        "rule": p.rule,
        "sequent": render_sequent(p.sequent),
        "premises": [proof_to_json(q) for q in p.premises],
    }


def proof_from_json(obj: Mapping[str, Any]) -> NDProof:
    """Parse ``{"rule", "sequent", "premises"}``.  Unknown rule names and
    malformed sequents are format errors; rule violations are left to
    :func:`check_nd`."""
    def go(node: Any, path: tuple[int, ...]) -> NDProof:
        where = "root" if not path else "root." + ".".join(map(str, path))
        if not isinstance(node, Mapping):
            raise ProofFormatError(f"{where}: node must be an object")
        rule = node.get("rule")
        if rule not in RULES:
            raise ProofFormatError(f"{where}: unknown rule {rule!r}")
        text = node.get("sequent")
        if not isinstance(text, str):
            raise ProofFormatError(f"{where}: 'sequent' must be a string")
        try:
            seq = parse_sequent(text)
        except ParseError as e:
            raise ProofFormatError(f"{where}: {e}") from None
        prems = node.get("premises", [])
        if not isinstance(prems, list):
            raise ProofFormatError(f"{where}: 'premises' must be a list")
        return NDProof(rule, seq, tuple(go(q, path + (i,)) for i, q in enumerate(prems)))

    return go(obj, ())
