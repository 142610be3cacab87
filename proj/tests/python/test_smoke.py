import json
import os
import subprocess
from pathlib import Path

import jsonschema
import pytest

import antiunify

SCHEMA = json.loads(Path(os.environ["ANTIUNIFY_SCHEMA"]).read_text())
DATA = Path(os.environ["ANTIUNIFY_TEST_DATA"])
CLI = os.environ.get("ANTIUNIFY_CLI")


def witness_holds(result, side):
    theta = result["theta1" if side == 0 else "theta2"]
    return antiunify.verify_witness(result["goal"], result["inputs"][side], theta, result["relation"])


def test_msg_figure_example():
    r = antiunify.msg("p(X, t(4)), r(u(5, s(Y)), 8), r(u(8, Z), 5).", "p(A), r(u(8, s(3)), 5).")
    jsonschema.validate(r, SCHEMA)
    assert r["goal"] == "r(u(8, V1), 5)."
    assert r["tau_value"] == 4
    assert r["pairing"] == [[2, 1]]
    assert r["theta2"] == {"V1": "s(3)"}


def test_kswap_sizes():
    g1 = (DATA / "arith_g1.goal").read_text()
    g2 = (DATA / "arith_g2.goal").read_text()
    for k, size in [(0, 2), (1, 2), (2, 3), (None, 3)]:
        r = antiunify.kswap(g1, g2, k)
        jsonschema.validate(r, SCHEMA)
        assert r["size"] == size
        assert r["k"] == ("inf" if k is None else str(k))
        assert witness_holds(r, 0) and witness_holds(r, 1)


def test_lcg_relations_and_renaming_apart():
    r = antiunify.lcg("p(t(X), Y), q(3, f(X)).", "p(5, X), q(3, f(X)).", "preceq")
    jsonschema.validate(r, SCHEMA)
    assert r["size"] == 1
    assert r["inputs"][1] != "p(5, X), q(3, f(X))."
    assert antiunify.lcg("p(t(X), Y), q(3, f(X)).", "p(5, Z), q(3, f(Z)).")["size"] == 2


def test_inj_lcg_and_check():
    r = antiunify.inj_lcg("and(A, B), or(B, C), xor(C, A).", "and(X, Z), or(Y, X), xor(Z, Y).")
    jsonschema.validate(r, SCHEMA)
    assert r["size"] == 1
    c = antiunify.check("p(X, Y).", "p(a, b), q.")
    jsonschema.validate(c, SCHEMA)
    assert c["holds"] and c["witness"] == {"X": "a", "Y": "b"}
    assert antiunify.check("p(X, X).", "p(a, b).")["witness"] is None


def test_errors():
    with pytest.raises(antiunify.ParseError):
        antiunify.normalize("p(X,,Y).")
    with pytest.raises(ValueError):
        antiunify.lcg("p(X).", "p(Y).", "nonsense")
    with pytest.raises(antiunify.InstanceTooLarge):
        g = ", ".join(f"p(X{i})" for i in range(12)) + "."
        antiunify.inj_lcg(g, g.replace("X", "Y"))
    with pytest.raises(antiunify.InvalidConfig):
        antiunify.generate(colour=1)


def test_generate_is_deterministic():
    a = antiunify.generate(seed=7, atoms_min=3, atoms_max=5)
    assert a == antiunify.generate(seed=7, atoms_min=3, atoms_max=5)
    for g in a:
        assert antiunify.normalize(g) == g


def test_in_process_cli_matches_module():
    code, out, _ = antiunify.run_cli(["--json", "msg", str(DATA / "weights_g1.goal"), str(DATA / "weights_g2.goal")])
    assert code == 0
    assert json.loads(out)["goal"] == "r(u(8, V1), 5)."


@pytest.mark.skipif(not CLI, reason="command-line tool not built")
@pytest.mark.parametrize(
    "args",
    [
        ["msg", "weights_g1", "weights_g2"],
        ["lcg", "--rel", "preceq", "shared_q_g1", "shared_q_g2"],
        ["kswap", "-k", "2", "arith_g1", "arith_g2"],
        ["oracle", "--problem", "inj-lcg", "rotation_g1", "rotation_g2"],
        ["oracle", "--problem", "min-vars", "-p", "5", "dataflow_g1", "dataflow_g2"],
        ["check", "shared_q_g1", "shared_q_g2"],
        ["gen", "--seed", "3"],
    ],
)
def test_cli_json_matches_schema(args):
    args = [str(DATA / f"{a}.goal") if (DATA / f"{a}.goal").exists() else a for a in args]
    proc = subprocess.run([CLI, "--json", *args], capture_output=True, text=True)
    assert proc.returncode in (0, 1), proc.stderr
    doc = json.loads(proc.stdout)
    jsonschema.validate(doc, SCHEMA)
    if "goal" in doc:
        assert witness_holds(doc, 0) and witness_holds(doc, 1)
