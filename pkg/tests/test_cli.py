import json
import os
import subprocess
import sys

import pytest

from blw.cli import main
from blw.corpus import PQ_IMPLIES_P
from blw.hilbert import hilbert_to_json
from blw.nd import axiom_derivation, check_nd, proof_from_json, proof_to_json
from blw.syntax import Atom, parse_sequent


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def write(tmp_path, name, obj):
    path = tmp_path / name
    path.write_text(json.dumps(obj))
    return str(path)


@pytest.fixture
def files(tmp_path):
    return {
        "model": write(tmp_path, "m.json", {"worlds": 1, "denominator": 2, "valuation": {"p": [1]}}),
        "bad_model": write(tmp_path, "bad.json", {"worlds": 2, "denominator": 2, "valuation": {"p": [1, 1]}}),
        "identity": write(tmp_path, "id.json", proof_to_json(axiom_derivation("A1", Atom("p")))),
        "a14": write(tmp_path, "a14.json", proof_to_json(axiom_derivation("A14", Atom("p"), Atom("q")))),
        "ax": write(tmp_path, "ax.json", {"rule": "Ax", "sequent": "p |- p", "premises": []}),
        "corrupt": write(tmp_path, "corrupt.json", {"rule": "Ax", "sequent": "p |- p * p", "premises": []}),
        "badrule": write(tmp_path, "badrule.json", {"rule": "Magic", "sequent": "p |- p", "premises": []}),
        "hilbert": write(tmp_path, "h.json", hilbert_to_json(PQ_IMPLIES_P)),
        "bad_hilbert": write(tmp_path, "bh.json", {"lines": [{"formula": "p -> q", "axiom": "A1"}]}),
        "dir": tmp_path,
    }


def test_parse(capsys):
    code, out, _ = run(capsys, "parse", "p*q->r")
    assert code == 0 and out.splitlines() == ["Implies(Tensor(p,q),r)", "p * q -> r"]
    code, out, _ = run(capsys, "parse", "top")
    assert code == 0 and out.startswith("Top")
    code, _, err = run(capsys, "parse", "p->")
    assert code == 2 and "error" in err


def test_eval(capsys, files):
    assert run(capsys, "eval", files["model"], "0", "p*p")[:2] == (0, "0\n")
    assert run(capsys, "eval", files["model"], "0", "top")[:2] == (0, "1\n")
    assert run(capsys, "eval", files["model"], "0", "p -> bot")[:2] == (0, "1/2\n")
    assert run(capsys, "eval", files["model"], "1", "p")[0] == 2
    assert run(capsys, "eval", files["bad_model"], "0", "p")[0] == 2
    assert run(capsys, "eval", files["model"], "0", "q")[0] == 2
    assert run(capsys, "eval", str(files["dir"] / "missing.json"), "0", "p")[0] == 2


def test_check_nd(capsys, files):
    code, out, _ = run(capsys, "check", "--nd", files["identity"])
    assert code == 0 and out.strip() == "|- p -> p"
    code, out, _ = run(capsys, "check", "--nd", files["corrupt"])
    assert code == 1 and out.startswith("root (Ax)")
    assert run(capsys, "check", "--nd", files["badrule"])[0] == 2


def test_check_hilbert_translate(capsys, files):
    out_path = files["dir"] / "nd.json"
    code, out, _ = run(capsys, "check", "--hilbert", files["hilbert"], "--translate", str(out_path))
    assert code == 0 and out.startswith("p * q -> p")
    nd = proof_from_json(json.loads(out_path.read_text()))
    assert check_nd(nd) == parse_sequent("|- p * q -> p")
    assert run(capsys, "check", "--nd", str(out_path))[0] == 0
    code, out, _ = run(capsys, "check", "--hilbert", files["bad_hilbert"])
    assert code == 1 and out.startswith("line 1")


def test_valid(capsys):
    code, out, _ = run(capsys, "valid", "p |- p*p", "--max-worlds", "1", "--max-denom", "2", "--json")
    doc = json.loads(out)
    assert code == 1 and doc["status"] == "countermodel"
    assert doc["model"] == {"worlds": 1, "denominator": 2, "valuation": {"p": [1]}, "world": 0}
    code, out, _ = run(capsys, "valid", "|- (p->q)|(q->p)", "--max-worlds", "3", "--max-denom", "3", "--json")
    doc = json.loads(out)
    assert code == 0 and doc["status"] == "none-found" and doc["structures_checked"] == 277
    assert run(capsys, "valid", "p,q |- p*q")[0] == 0
    assert run(capsys, "valid", "p -> p")[0] == 0
    assert run(capsys, "valid", "p |-")[0] == 2
    assert run(capsys, "valid", "p |- p", "--max-worlds", "0")[0] == 2


def test_fuzz(capsys, files):
    code, out, _ = run(capsys, "fuzz", files["a14"], "--trials", "500")
    assert code == 0 and out.startswith("passed")
    assert run(capsys, "fuzz", files["ax"], "--trials", "1")[0] == 0
    assert run(capsys, "fuzz", files["hilbert"], "--trials", "50")[0] == 0
    code, out, _ = run(capsys, "fuzz", files["corrupt"], "--json")
    doc = json.loads(out)
    assert code == 1 and doc["status"] == "countermodel"
    assert doc["model"] == {"worlds": 1, "denominator": 2, "valuation": {"p": [1]}, "world": 0}
    assert run(capsys, "fuzz", files["badrule"])[0] == 2


def test_json_is_valid_everywhere(capsys, files):
    for argv in (["parse", "p->"], ["eval", files["model"], "0", "p"], ["check", "--nd", files["corrupt"]],
                 ["valid", "p |- p"], ["fuzz", files["ax"], "--trials", "3"]):
        _, out, _ = run(capsys, *argv, "--json")
        assert "status" in json.loads(out)


def test_usage_errors_exit_2():
    with pytest.raises(SystemExit) as e:
        main(["check"])
    assert e.value.code == 2


def _blw(*argv, env=None):
    return subprocess.run([sys.executable, "-m", "blw", *argv], capture_output=True, env=env)


def test_byte_identical_runs(files):
    env = dict(os.environ)
    first = _blw("fuzz", files["hilbert"], "--trials", "40", "--seed", "5", "--json", env=env)
    second = _blw("fuzz", files["hilbert"], "--trials", "40", "--seed", "5", "--json", env=env)
    assert first.returncode == 0 and first.stdout == second.stdout


def test_thread_count_does_not_change_output():
    outs = []
    for threads in ("1", "2"):
        env = dict(os.environ, BLW_THREADS=threads)
        r = _blw("valid", "p, q -> r |- (p -> r) * q", "--max-worlds", "3", "--max-denom", "4", "--json", env=env)
        outs.append((r.returncode, r.stdout))
    assert outs[0] == outs[1]
