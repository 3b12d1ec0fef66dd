import io
import json
import subprocess
import sys
from importlib import resources

import pytest

from mixvol.cli import run

CORPUS = resources.files("mixvol") / "corpus"
EXPECTED = json.loads((CORPUS / "expected.json").read_text())


def call(*argv):
    out = io.StringIO()
    code = run(list(argv), out)
    return code, out.getvalue()


@pytest.mark.parametrize("name", sorted(EXPECTED))
def test_corpus_values(name):
    case = EXPECTED[name]
    code, text = call(case["command"], *case["args"], str(CORPUS / f"{name}.json"))
    assert code == 0, text
    assert json.loads(text)["value"] == case["value"]


@pytest.mark.parametrize("name", sorted(EXPECTED))
def test_corpus_is_deterministic(name):
    case = EXPECTED[name]
    argv = [case["command"], *case["args"], str(CORPUS / f"{name}.json")]
    assert call(*argv) == call(*argv)


def test_prism_routes_agree_on_corpus():
    names = [n for n, c in EXPECTED.items() if c["command"] == "prism-mv"]
    assert names
    for n in names:
        path = str(CORPUS / f"{n}.json")
        assert call("prism-mv", "--via", "lattice", path) == call("prism-mv", "--via", "direct", path)


@pytest.mark.parametrize("method", ["face_formula", "polarization", "truncation"])
def test_methods_via_cli(method):
    code, text = call("pair-mixed-volume", "--method", method, str(CORPUS / "two_curves.json"))
    assert code == 0 and json.loads(text) == {"value": "4"}


def test_inline_problem_and_explain():
    pair = {"A": {"dim": 1, "vertices": [[0]], "rays": [[1]]}, "B": {"dim": 1, "vertices": [[2]], "rays": [[1]]}}
    code, text = call("pair-volume", json.dumps({"pair": pair}))
    assert code == 0 and json.loads(text)["value"] == "2"
    code, text = call("milnor", "--explain", str(CORPUS / "cusp.json"))
    body = json.loads(text)
    assert code == 0 and body["value"] == "2" and "explain" in body


def test_precondition_exit_code():
    pair = {"A": {"dim": 2, "vertices": [[0, 0]], "rays": [[1, 0], [0, 1]]},
            "B": {"dim": 2, "vertices": [[1, 0]], "rays": [[1, 0], [0, 1]]}}
    code, text = call("pair-volume", json.dumps({"pair": pair}))
    assert code == 2
    err = json.loads(text)["error"]
    assert err["code"] == "unbounded_difference_error"
    assert "symmetric difference unbounded" in err["message"]


def test_schema_exit_codes():
    code, text = call("pair-volume", json.dumps({"pear": 1}))
    assert code == 3 and json.loads(text)["error"]["code"] == "schema_error"
    code, text = call("volume", "{not json")
    assert code == 3
    code, _ = call("no-such-command")
    assert code == 3


def test_rationals_are_strings():
    code, text = call("stable", str(CORPUS / "stable_convenient.json"))
    assert code == 0 and json.loads(text) == {"value": "1/2"}


def test_essential_and_codim():
    sig = json.dumps({"N": 2, "sigmas": [[[0, 0], [1, 0]], [[0, 0], [1, 0]], [[0, 0], [1, 0], [0, 1], [1, 1]]]})
    code, text = call("essential", "--sigmas", sig)
    assert code == 0 and json.loads(text)["value"] == [0, 1]
    code, text = call("codim", "--resultantal", "--sigmas", sig)
    assert code == 0 and json.loads(text)["value"] == "1"


def test_max_dim_env(monkeypatch):
    monkeypatch.setenv("MIXVOL_MAX_DIM", "1")
    code, text = call("milnor", str(CORPUS / "cusp.json"))
    assert code == 2
    assert json.loads(text)["error"]["code"] == "dimension_error"


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "mixvol.cli", "milnor", str(CORPUS / "cusp.json")],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert json.loads(proc.stdout) == {"value": "2"}
