"""End-to-end command-line checks: output shapes, exit codes, determinism."""

import json

import numpy as np
import pytest
from click.testing import CliRunner

import braidgate.gates
from braidgate import CNOT, matrix_to_json
from braidgate.cli import main


@pytest.fixture()
def runner():
    return CliRunner()


def invoke(runner, *args, **kwargs):
    result = runner.invoke(main, list(args), **kwargs)
    if result.exception is not None and not isinstance(result.exception, SystemExit):
        raise result.exception
    return result


# ---------------------------------------------------------------------------
# ybe
# ---------------------------------------------------------------------------


def test_ybe_solution_passes(runner):
    result = invoke(runner, "ybe", "R")
    assert result.exit_code == 0
    payload = json.loads(result.output)
    assert payload["form"] == "braided"
    assert payload["residual"] <= 1e-12
    assert payload["ok"] is True


def test_ybe_non_solution_fails(runner):
    result = invoke(runner, "ybe", "CNOT")
    assert result.exit_code == 1
    assert json.loads(result.output)["ok"] is False


def test_ybe_algebraic_form(runner):
    assert invoke(runner, "ybe", "D", "--form", "algebraic").exit_code == 0
    assert invoke(runner, "ybe", "R", "--form", "algebraic").exit_code == 1


def test_ybe_unknown_gate_is_usage_error(runner):
    assert invoke(runner, "ybe", "nope").exit_code == 2


def test_ybe_tolerance_env_override(runner):
    result = invoke(runner, "ybe", "R", env={"BRAIDGATE_TOL": "1e-20"})
    assert result.exit_code == 1  # the 1e-16 residual no longer clears the bar
    result = invoke(runner, "ybe", "R", env={"BRAIDGATE_TOL": "not-a-number"})
    assert result.exit_code == 2


def test_ybe_explicit_tol_beats_env(runner):
    result = invoke(
        runner, "ybe", "R", "--tol", "1e-12", env={"BRAIDGATE_TOL": "1e-20"}
    )
    assert result.exit_code == 0


def test_ybe_matrix_file(runner, tmp_path):
    path = tmp_path / "cnot.json"
    path.write_text(json.dumps(matrix_to_json(CNOT)))
    result = invoke(runner, "ybe", "--matrix-file", str(path))
    assert result.exit_code == 1
    assert json.loads(result.output)["gate"] == f"file:{path}"
    bad = tmp_path / "bad.json"
    bad.write_text("{\"dim\": 4, \"entries\": []}")
    assert invoke(runner, "ybe", "--matrix-file", str(bad)).exit_code == 2


def test_ybe_needs_some_gate(runner):
    assert invoke(runner, "ybe").exit_code == 2


# ---------------------------------------------------------------------------
# gate
# ---------------------------------------------------------------------------


def test_gate_classify_golden(runner):
    result = invoke(runner, "gate", "R", "--classify")
    assert result.exit_code == 0
    payload = json.loads(result.output)
    assert payload["gate"] == "R"
    assert payload["unitary"] is True
    assert payload["entangling"] is True
    assert payload["cnot_class"] == 1
    assert payload["gamma_trace"] == [0.0, 0.0]


def test_gate_classify_swap(runner):
    payload = json.loads(invoke(runner, "gate", "SWAP", "--classify").output)
    assert payload["entangling"] is False
    assert payload["cnot_class"] == "more"


def test_gate_decompose_verify(runner):
    for route in ("qdq", "r0", "mrn"):
        result = invoke(runner, "gate", "--decompose-verify", route)
        assert result.exit_code == 0, route
        payload = json.loads(result.output)
        assert payload["route"] == route
        assert payload["target"] == "CNOT"
        assert payload["ok"] is True


def test_gate_needs_exactly_one_mode(runner):
    assert invoke(runner, "gate", "R").exit_code == 2
    assert (
        invoke(runner, "gate", "R", "--classify", "--decompose-verify", "qdq").exit_code
        == 2
    )


def test_gate_classify_parametric(runner):
    payload = json.loads(
        invoke(runner, "gate", "Rprime:1,0,1,0,1,0,-1,0", "--classify").output
    )
    assert payload["cnot_class"] == 2


# ---------------------------------------------------------------------------
# braid
# ---------------------------------------------------------------------------


def test_braid_golden(runner):
    result = invoke(runner, "braid", "1 1")
    assert result.exit_code == 0
    assert json.loads(result.output) == {
        "components": 2,
        "letters": [1, 1],
        "linking": [[1, 2, 1]],
        "n": 2,
        "writhe": 2,
    }


def test_braid_lists_all_component_pairs(runner):
    payload = json.loads(invoke(runner, "braid", "n=3;").output)
    assert payload["linking"] == [[1, 2, 0], [1, 3, 0], [2, 3, 0]]


def test_braid_rejects_malformed_words(runner):
    assert invoke(runner, "braid", "1 x 2").exit_code == 2
    assert invoke(runner, "braid", "n=2; 5").exit_code == 2


# ---------------------------------------------------------------------------
# invariant
# ---------------------------------------------------------------------------


def test_invariant_tau_golden(runner):
    result = invoke(runner, "invariant", "--link", "borromean", "--kind", "tau")
    assert result.exit_code == 0
    payload = json.loads(result.output)
    assert payload["tau"] == {"float": -8.0, "mantissa": -1, "sqrt2_exp": 6}
    assert payload["equivalence_class"] == "mantissa=-1"


def test_invariant_tau_guard_exit(runner):
    assert invoke(runner, "invariant", "n=13; 1", "--kind", "tau").exit_code == 3


def test_invariant_linking(runner):
    result = invoke(
        runner,
        "invariant",
        "--link",
        "hopf",
        "--kind",
        "linking",
        "--a",
        "1,0",
        "--c",
        "0,1",
    )
    assert result.exit_code == 0
    payload = json.loads(result.output)
    assert payload["components"] == 2
    assert payload["z"] == [0.0, 0.0]  # a=1, c=i lands on a zero of the sum


def test_invariant_bracket_with_oracle(runner):
    result = invoke(
        runner,
        "invariant",
        "n=3; 1 1",
        "--kind",
        "bracket",
        "--theta",
        "0.3",
        "--check-oracle",
    )
    assert result.exit_code == 0
    payload = json.loads(result.output)
    assert payload["ok"] is True
    assert payload["oracle_residual"] <= 1e-9
    assert payload["writhe"] == 2


def test_invariant_bracket_singular_angle(runner):
    result = invoke(
        runner, "invariant", "n=3; 1", "--kind", "bracket", "--theta", str(np.pi / 4)
    )
    assert result.exit_code == 1
    assert "error" in json.loads(result.output)


def test_invariant_usage_errors(runner):
    assert invoke(runner, "invariant", "1 1").exit_code == 2  # --kind required
    assert invoke(runner, "invariant", "--kind", "tau").exit_code == 2  # no word
    assert (
        invoke(runner, "invariant", "--link", "nope", "--kind", "tau").exit_code == 2
    )
    assert (
        invoke(
            runner, "invariant", "1 1", "--kind", "linking", "--a", "1,0"
        ).exit_code
        == 2
    )  # missing --c
    assert (
        invoke(
            runner, "invariant", "1 1", "--link", "hopf", "--kind", "tau"
        ).exit_code
        == 2
    )  # word and link are exclusive


# ---------------------------------------------------------------------------
# sim
# ---------------------------------------------------------------------------


def test_sim_trace_report_shape(runner):
    result = invoke(runner, "sim", "trace", "--gate", "R", "--shots", "2000", "--seed", "7")
    assert result.exit_code == 0
    payload = json.loads(result.output)
    assert sorted(payload) == ["estimate", "exact_p", "seed", "shots", "stderr"]
    assert payload["shots"] == 2000 and payload["seed"] == 7
    assert abs(payload["exact_p"] - 0.5) < 1e-12


def test_sim_trace_rejects_non_unitary(runner, tmp_path):
    path = tmp_path / "m.json"
    path.write_text(json.dumps(matrix_to_json(np.diag([1.0, 2.0]))))
    assert invoke(runner, "sim", "trace", "--matrix-file", str(path)).exit_code == 2


def test_sim_trace_guard(runner, tmp_path):
    path = tmp_path / "big.json"
    path.write_text(json.dumps(matrix_to_json(np.eye(2**11))))
    assert invoke(runner, "sim", "trace", "--matrix-file", str(path)).exit_code == 3


def test_sim_teleport_golden(runner):
    result = invoke(runner, "sim", "teleport", "--n", "1", "--gate", "H", "--seed", "4")
    assert result.exit_code == 0
    payload = json.loads(result.output)
    assert payload["matches_gate_action"] is True
    assert payload["n"] == 1
    assert len(payload["bits"]) == 2
    assert set(payload["bits"]) <= {"0", "1"}


def test_sim_teleport_explicit_state(runner):
    psi = json.dumps([[1.0, 0.0], [0.0, 0.0]])
    result = invoke(
        runner, "sim", "teleport", "--n", "1", "--gate", "X", "--psi", psi, "--seed", "1"
    )
    assert result.exit_code == 0
    payload = json.loads(result.output)
    received = [complex(re, im) for re, im in payload["received"]]
    assert abs(abs(received[0]) - 1.0) < 1e-9  # X maps |0> to |0> up to phase


def test_sim_teleport_guard(runner, tmp_path):
    path = tmp_path / "eye16.json"
    path.write_text(json.dumps(matrix_to_json(np.eye(16))))
    result = invoke(runner, "sim", "teleport", "--n", "4", "--matrix-file", str(path))
    assert result.exit_code == 3
    # a catalog gate of the wrong dimension is caught as a usage error instead
    assert invoke(runner, "sim", "teleport", "--n", "4", "--gate", "R").exit_code == 2


def test_sim_teleport_zero_state(runner):
    psi = json.dumps([[0.0, 0.0], [0.0, 0.0]])
    result = invoke(
        runner, "sim", "teleport", "--n", "1", "--gate", "H", "--psi", psi
    )
    assert result.exit_code == 1


def test_sim_project_branch(runner):
    result = invoke(
        runner, "sim", "project", "--state", "branch", "--qubit", "1", "--bit", "1"
    )
    assert result.exit_code == 0
    payload = json.loads(result.output)
    assert payload["verdict"] == "entangled"
    assert payload["prob"] == pytest.approx(0.5)


def test_sim_project_ghz_unentangled(runner):
    for bit in ("0", "1"):
        payload = json.loads(
            invoke(
                runner, "sim", "project", "--state", "ghz", "--qubit", "2", "--bit", bit
            ).output
        )
        assert payload["verdict"] == "unentangled"


def test_sim_project_two_qubit_unclassified(runner):
    psi = json.dumps([[1.0, 0.0], [0.0, 0.0], [0.0, 0.0], [1.0, 0.0]])
    payload = json.loads(
        invoke(
            runner, "sim", "project", "--psi", psi, "--qubit", "1", "--bit", "0"
        ).output
    )
    assert payload["verdict"] == "unclassified"


def test_sim_project_zero_probability(runner):
    psi = json.dumps([[1.0, 0.0]] + [[0.0, 0.0]] * 7)
    result = invoke(
        runner, "sim", "project", "--psi", psi, "--qubit", "1", "--bit", "1"
    )
    assert result.exit_code == 1


def test_sim_project_usage(runner):
    assert invoke(runner, "sim", "project", "--qubit", "1", "--bit", "0").exit_code == 2


# ---------------------------------------------------------------------------
# catalog and selftest
# ---------------------------------------------------------------------------


def test_catalog_gates(runner):
    payload = json.loads(invoke(runner, "catalog", "gates").output)
    assert "R" in payload["gates"]
    assert "Rprime:..." in payload["gates"]


def test_catalog_links(runner):
    payload = json.loads(invoke(runner, "catalog", "links").output)
    assert payload["links"]["hopf"] == "n=2; 1 1"
    assert payload["links"]["borromean"] == "n=3; 1 -2 1 -2 1 -2"


def test_selftest_passes_on_a_fresh_build(runner):
    result = invoke(runner, "selftest")
    assert result.exit_code == 0
    assert "FAIL" not in result.output


def test_selftest_json_lists_every_check(runner):
    result = invoke(runner, "selftest", "--json")
    assert result.exit_code == 0
    payload = json.loads(result.output)
    assert payload["ok"] is True
    rows = payload["checks"]
    assert len(rows) >= 40
    assert all(row["pass"] for row in rows)


def test_selftest_catches_a_mutated_gate(runner, monkeypatch):
    broken = braidgate.gates.R.copy()
    broken[0, 3] = -broken[0, 3]
    monkeypatch.setattr(braidgate.gates, "R", broken)
    result = invoke(runner, "selftest")
    assert result.exit_code == 1
    assert "FAIL" in result.output


def test_output_is_deterministic(runner):
    args = ["sim", "teleport", "--n", "2", "--gate", "CNOT", "--seed", "3"]
    first = invoke(runner, *args)
    second = invoke(runner, *args)
    assert first.output == second.output
    again = invoke(runner, "invariant", "--link", "whitehead", "--kind", "tau")
    assert again.output == invoke(runner, "invariant", "--link", "whitehead", "--kind", "tau").output
