"""Command line front end.

Exit codes: 0 ok / none-found, 1 rejected / countermodel, 2 usage, I/O or
parse errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from typing import Any, Optional, Sequence

from .hilbert import HilbertError, check_hilbert, hilbert_from_json, hilbert_to_nd
from .lbm import ModelFormatError, model_from_json, model_to_json
from .mv import UnassignedAtom, format_value
from .nd import (
    NDProof, ProofError, ProofFormatError, check_nd, proof_from_json, proof_to_json,
)
from .search import Countermodel, SearchBounds, default_workers, find_countermodel, soundness_fuzz
from .syntax import ParseError, parse_formula, parse_sequent, render, render_sequent, to_prefix

EXIT = {"ok": 0, "none-found": 0, "rejected": 1, "countermodel": 1, "error": 2}


@dataclass
class Verdict:
    status: str
    text: str
    data: dict[str, Any] = field(default_factory=dict)

    @property
    def exit_code(self) -> int:
        return EXIT[self.status]


class UsageError(Exception):
    pass


def _read_json(path: str) -> Any:
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as e:
        raise UsageError(f"cannot read {path}: {e.strerror}") from None
    except json.JSONDecodeError as e:
        raise UsageError(f"{path}: invalid JSON: {e}") from None


def _bounds(args) -> SearchBounds:
    try:
        return SearchBounds(args.max_worlds, args.max_denom)
    except ValueError as e:
        raise UsageError(str(e)) from None


def cmd_parse(args) -> Verdict:
    f = parse_formula(args.formula)
    return Verdict("ok", f"{to_prefix(f)}\n{render(f)}", {"ast": to_prefix(f), "rendered": render(f)})


def cmd_eval(args) -> Verdict:
    try:
        m = model_from_json(_read_json(args.model))
    except ModelFormatError as e:
        raise UsageError(f"{args.model}: {e}") from None
    f = parse_formula(args.formula)
    if not 0 <= args.world < m.worlds:
        raise UsageError(f"world {args.world} out of range 0..{m.worlds - 1}")
    try:
        v = m.value(args.world, f)
    except UnassignedAtom as e:
        raise UsageError(f"atom {e.args[0]!r} has no valuation in {args.model}") from None
    return Verdict("ok", format_value(v), {"world": args.world, "formula": render(f), "value": format_value(v)})


def _load_nd(path: str) -> NDProof:
    try:
        return proof_from_json(_read_json(path))
    except ProofFormatError as e:
        raise UsageError(f"{path}: {e}") from None


def cmd_check(args) -> Verdict:
    if args.translate and not args.hilbert:
        raise UsageError("--translate needs --hilbert")
    if args.nd:
        p = _load_nd(args.nd)
        try:
            s = check_nd(p)
        except ProofError as e:
            return Verdict("rejected", str(e), {"path": list(e.path), "rule": e.rule, "reason": e.reason})
        return Verdict("ok", render_sequent(s), {"conclusion": render_sequent(s), "nodes": p.size()})
    try:
        hp = hilbert_from_json(_read_json(args.hilbert))
    except ProofFormatError as e:
        raise UsageError(f"{args.hilbert}: {e}") from None
    try:
        f = check_hilbert(hp)
    except HilbertError as e:
        return Verdict("rejected", str(e), {"line": e.line, "reason": e.reason})
    data: dict[str, Any] = {"conclusion": render(f), "lines": len(hp.lines)}
    text = render(f)
    if args.translate:
        nd = hilbert_to_nd(hp)
        s = check_nd(nd)
        try:
            with open(args.translate, "w", encoding="utf-8") as fh:
                json.dump(proof_to_json(nd), fh, indent=1)
                fh.write("\n")
        except OSError as e:
            raise UsageError(f"cannot write {args.translate}: {e.strerror}") from None
        data["translation"] = {"file": args.translate, "conclusion": render_sequent(s), "nodes": nd.size()}
        text += f"\ntranslation: {render_sequent(s)} ({nd.size()} nodes) -> {args.translate}"
    return Verdict("ok", text, data)


def _countermodel_text(cm: Countermodel) -> tuple[str, dict[str, Any]]:
    model = model_to_json(cm.structure, cm.world)
    text = (f"countermodel: {cm.structure.worlds} world(s), fails at world {cm.world} "
            f"({format_value(cm.lhs)} > {format_value(cm.rhs)})\n"
            + json.dumps(model, sort_keys=True))
    return text, {"model": model, "lhs": format_value(cm.lhs), "rhs": format_value(cm.rhs)}


def cmd_valid(args) -> Verdict:
    text = args.sequent if "|-" in args.sequent else f"|- {args.sequent}"
    s = parse_sequent(text)
    bounds = _bounds(args)
    out = find_countermodel(s, bounds, workers=default_workers())
    if isinstance(out, Countermodel):
        t, data = _countermodel_text(out)
        return Verdict("countermodel", t, {"sequent": render_sequent(s), **data})
    return Verdict(
        "none-found",
        f"no countermodel with at most {bounds.max_worlds} world(s) and denominator "
        f"at most {bounds.max_denominator} ({out.structures_checked} structures checked)",
        {"sequent": render_sequent(s), "max_worlds": bounds.max_worlds,
         "max_denom": bounds.max_denominator, "structures_checked": out.structures_checked},
    )


def cmd_fuzz(args) -> Verdict:
    obj = _read_json(args.proof)
    notes = {}
    if isinstance(obj, dict) and "lines" in obj:
        try:
            hp = hilbert_from_json(obj)
            check_hilbert(hp)
        except ProofFormatError as e:
            raise UsageError(f"{args.proof}: {e}") from None
        except HilbertError as e:
            return Verdict("rejected", str(e), {"line": e.line, "reason": e.reason})
        p = hilbert_to_nd(hp)
        checked = True
    else:
        p = _load_nd(args.proof)
        try:
            check_nd(p)
            checked = True
        except ProofError as e:
            # still fuzzed: a broken proof is the negative control
            notes["rejected"] = str(e)
            checked = False
    report = soundness_fuzz(p, args.trials, _bounds(args), args.seed, check=False)
    data: dict[str, Any] = {"trials": report.trials, "sequents_checked": report.sequents_checked,
                            "proof_checked": checked, **notes}
    if report.witness is None:
        if not checked:
            return Verdict("rejected", f"{notes['rejected']}\nno semantic witness in {report.trials} trials", data)
        return Verdict("ok", f"passed: {report.trials} trials, {report.sequents_checked} sequent evaluations", data)
    w = report.witness
    model = model_to_json(w.structure, w.world)
    data.update({"node": list(w.path), "sequent": render_sequent(w.sequent), "model": model,
                 "lhs": format_value(w.lhs), "rhs": format_value(w.rhs), "trial": w.trial})
    where = "root" if not w.path else "root." + ".".join(map(str, w.path))
    text = (f"witness: node {where} [{render_sequent(w.sequent)}] fails at world {w.world} "
            f"({format_value(w.lhs)} > {format_value(w.rhs)}), found in trial {w.trial}\n"
            + json.dumps(model, sort_keys=True))
    return Verdict("countermodel", text, data)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="blw", description="Basic Logic workbench")
    sub = ap.add_subparsers(dest="command", required=True)

    def add(name, fn, help):
        sp = sub.add_parser(name, help=help)
        sp.add_argument("--json", action="store_true", help="structured output")
        sp.set_defaults(func=fn)
        return sp

    sp = add("parse", cmd_parse, "parse and pretty-print a formula")
    sp.add_argument("formula")

    sp = add("eval", cmd_eval, "evaluate a formula at a world of a model file")
    sp.add_argument("model")
    sp.add_argument("world", type=int)
    sp.add_argument("formula")

    sp = add("check", cmd_check, "check a natural deduction or Hilbert proof file")
    g = sp.add_mutually_exclusive_group(required=True)
    g.add_argument("--nd", metavar="FILE")
    g.add_argument("--hilbert", metavar="FILE")
    sp.add_argument("--translate", metavar="OUT", help="write the natural deduction translation")

    def bounds(sp, k, n):
        sp.add_argument("--max-worlds", type=int, default=k, metavar="K")
        sp.add_argument("--max-denom", type=int, default=n, metavar="N")

    sp = add("valid", cmd_valid, "search for a countermodel within bounds")
    sp.add_argument("sequent")
    bounds(sp, 3, 4)

    sp = add("fuzz", cmd_fuzz, "evaluate every node of a proof on random structures")
    sp.add_argument("proof")
    sp.add_argument("--trials", type=int, default=500)
    sp.add_argument("--seed", type=int, default=0)
    bounds(sp, 3, 4)
    return ap


def execute(args: argparse.Namespace) -> Verdict:
    try:
        return args.func(args)
    except (ParseError, UsageError) as e:
        return Verdict("error", str(e), {"message": str(e)})


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    v = execute(args)
    if args.json:
        print(json.dumps({"status": v.status, **v.data}, sort_keys=True, indent=2))
    elif v.status == "error":
        print(f"error: {v.text}", file=sys.stderr)
    else:
        print(v.text)
    return v.exit_code


if __name__ == "__main__":
    sys.exit(main())
