import csv
import logging
import os

import numpy as np
import pytest

from probclone.data import load_machine, save_machine
from probclone.engine.commands import format_value, main, resolve_eta
from probclone.modeling import cloning_machine

from helpers import write_states

CONFIGS = os.path.join(os.path.dirname(__file__), "..", "configs")
STATES_DIR = os.path.join(CONFIGS, "states")
ORTHONORMAL = os.path.join(STATES_DIR, "orthonormal_pair.json")
HALF = os.path.join(STATES_DIR, "overlap_half_pair.json")
DUPLICATE = os.path.join(STATES_DIR, "duplicate_pair.json")


@pytest.fixture(autouse=True)
def report_logs(caplog):
    caplog.set_level(logging.INFO)
    return caplog


def test_check_orthonormal_pair(caplog):
    assert main(["check", ORTHONORMAL]) == 0
    assert "independent, clonable" in caplog.text


def test_check_duplicate_pair(caplog):
    assert main(["check", DUPLICATE]) == 2
    assert "dependent, not clonable" in caplog.text
    assert "null combination" in caplog.text


def test_check_malformed_amplitude(tmp_path, caplog):
    path = tmp_path / "bad.json"
    path.write_text('{"dimension": 2, "states": [[[1, 0], [0, 0]], [[1, 0], [0, "i"]]]}')
    assert main(["check", str(path)]) == 1
    assert "states[1][1]" in caplog.text


def test_check_missing_file(tmp_path):
    assert main(["check", str(tmp_path / "absent.json")]) == 1


def test_efficiency_half_overlap(caplog):
    assert main(["efficiency", HALF]) == 0
    assert "eta* (eigen):     0.6666667" in caplog.text
    assert "eta* (bisection): 0.6666667" in caplog.text
    assert "non-orthogonal" in caplog.text


def test_efficiency_orthonormal_triple(tmp_path, caplog):
    path = write_states(tmp_path / "triple.json", [[1, 0, 0], [0, 1, 0], [0, 0, 1]])
    assert main(["efficiency", path, "--copies", "5"]) == 0
    assert "eta* (eigen):     1.0000000" in caplog.text
    assert "orthonormal" in caplog.text


def test_efficiency_dependent_set(caplog):
    assert main(["efficiency", DUPLICATE]) == 2
    assert "eta* (eigen):     0.0000000" in caplog.text


def test_efficiency_rejects_single_copy():
    assert main(["efficiency", HALF, "--copies", "1"]) == 1


def test_build_orthonormal_pair(tmp_path, caplog):
    output = str(tmp_path / "machine.json")
    assert main(["build", ORTHONORMAL, "--eta", "1", "-o", output]) == 0
    assert "verification: pass" in caplog.text
    machine = load_machine(output)
    assert machine.eta == 1.0
    assert machine.composite_dim == 12


def test_build_infeasible_eta(tmp_path):
    output = tmp_path / "machine.json"
    assert main(["build", HALF, "--eta", "0.9", "-o", str(output)]) == 3
    assert not output.exists()


def test_build_at_max_efficiency(tmp_path, caplog):
    output = str(tmp_path / "machine.json")
    assert main(["build", HALF, "-o", output]) == 0
    assert "verification: pass" in caplog.text
    assert load_machine(output).eta == pytest.approx(2.0 / 3.0, abs=1e-8)


def test_build_dependent_set(tmp_path):
    assert main(["build", DUPLICATE, "-o", str(tmp_path / "m.json")]) == 2


def test_build_rejects_bad_eta(tmp_path):
    assert main(["build", HALF, "--eta", "fast", "-o", str(tmp_path / "m.json")]) == 1
    assert main(["build", HALF, "--eta", "1.5", "-o", str(tmp_path / "m.json")]) == 1


def test_resolve_eta():
    assert resolve_eta("max", 0.5, 0.0) == 0.5
    assert resolve_eta("max", 0.5, 1e-9) < 0.5
    assert resolve_eta("0.25", 0.5, 1e-9) == 0.25


@pytest.fixture
def half_machine_file(tmp_path, half_overlap_machine):
    path = str(tmp_path / "half.json")
    save_machine(half_overlap_machine, path)
    return path


def test_simulate_member(half_machine_file, caplog):
    assert main(["simulate", half_machine_file, "--input", "0"]) == 0
    assert "  P0     0.6666667    1.0000000" in caplog.text
    assert "total probability: 1.0000000" in caplog.text
    assert "monte carlo" not in caplog.text


def test_simulate_sampled_is_reproducible(half_machine_file, caplog):
    args = ["simulate", half_machine_file, "--input", "1", "--shots", "1000000", "--seed", "3"]
    assert main(args) == 0
    first = [r.getMessage() for r in caplog.records if "monte carlo" in r.getMessage()]
    caplog.clear()
    assert main(args) == 0
    second = [r.getMessage() for r in caplog.records if "monte carlo" in r.getMessage()]
    assert len(first) == 1
    assert first == second
    assert "seed=3" in first[0]


def test_simulate_non_member(tmp_path, half_machine_file, caplog):
    states = write_states(tmp_path / "plus.json", [[1, 1]])
    assert main(["simulate", half_machine_file, "--state-file", states]) == 0
    assert "non-member" in caplog.text
    assert "n/a" in caplog.text


def test_simulate_recognizes_member_in_state_file(tmp_path, half_machine_file, caplog):
    states = write_states(tmp_path / "members.json", [[-1, 0]])
    assert main(["simulate", half_machine_file, "--state-file", states]) == 0
    assert "designated member 0" in caplog.text


def test_simulate_input_out_of_range(half_machine_file):
    assert main(["simulate", half_machine_file, "--input", "5"]) == 1


def test_simulate_dimension_mismatch(tmp_path, half_machine_file):
    states = write_states(tmp_path / "qutrit.json", [[1, 0, 0]])
    assert main(["simulate", half_machine_file, "--state-file", states]) == 1


def test_simulate_needs_an_input(half_machine_file):
    with pytest.raises(SystemExit) as excinfo:
        main(["simulate", half_machine_file])
    assert excinfo.value.code == 1


def test_sweep_writes_csv(tmp_path):
    output = tmp_path / "sweep" / "pairs.csv"
    assert main(["sweep", "--overlap", "0:0.5:0.25", "-o", str(output)]) == 0
    with open(str(output)) as f:
        rows = list(csv.reader(f))
    assert rows[0] == ["s", "eta_eigen", "eta_bisect", "delta"]
    assert [float(r[0]) for r in rows[1:]] == [0.0, 0.25, 0.5]
    assert float(rows[1][1]) == 1.0
    assert "{:.7f}".format(float(rows[3][1])) == "0.6666667"
    assert abs(float(rows[3][2]) - 2.0 / 3.0) <= 1e-8
    for row in rows[1:]:
        assert float(row[3]) <= 1e-8


def test_sweep_three_copies(tmp_path):
    output = tmp_path / "pairs.csv"
    assert main(["sweep", "--overlap", "0.5:0.5:0.1", "--copies", "3", "-o", str(output)]) == 0
    with open(str(output)) as f:
        rows = list(csv.reader(f))
    assert float(rows[1][1]) == pytest.approx(4.0 / 7.0, abs=1e-12)


@pytest.mark.parametrize("overlap", ["0.5:0.1:0.1", "0:1:0.1", "0:0.5:0", "0:0.5", "a:b:c"])
def test_sweep_rejects_bad_range(tmp_path, overlap):
    assert main(["sweep", "--overlap", overlap, "-o", str(tmp_path / "s.csv")]) == 1


def test_usage_errors_exit_one():
    with pytest.raises(SystemExit) as excinfo:
        main([])
    assert excinfo.value.code == 1
    with pytest.raises(SystemExit) as excinfo:
        main(["teleport", HALF])
    assert excinfo.value.code == 1


def test_opts_override_config(caplog):
    assert main(["efficiency", HALF, "--opts", "SYNTHESIS.COPIES", "3"]) == 0
    assert "eta* (eigen):     0.5714286" in caplog.text


def test_flag_wins_over_opts(caplog):
    assert main(["efficiency", HALF, "--copies", "2", "--opts", "SYNTHESIS.COPIES", "3"]) == 0
    assert "eta* (eigen):     0.6666667" in caplog.text


def test_report_digits_from_opts(caplog):
    assert main(["efficiency", HALF, "--opts", "REPORT.DIGITS", "3"]) == 0
    assert "eta* (eigen):     0.667" in caplog.text


def test_config_file(tmp_path, caplog):
    config = tmp_path / "three.yaml"
    config.write_text("SYNTHESIS:\n  COPIES: 3\nFEASIBILITY:\n  METHOD: \"bisection\"\n")
    assert main(["efficiency", HALF, "--config-file", str(config)]) == 0
    assert "eta* (bisection): 0.5714286" in caplog.text


def test_default_config_file_loads(caplog):
    config = os.path.join(CONFIGS, "probclone_default.yaml")
    assert main(["efficiency", HALF, "--config-file", config]) == 0
    assert "eta* (eigen):     0.6666667" in caplog.text


@pytest.mark.parametrize("opts", [["NO.SUCH_KEY", "1"], ["SEED"]])
def test_bad_opts_exit_one(opts):
    assert main(["check", HALF, "--opts"] + opts) == 1


@pytest.mark.parametrize("copies", [2, 3])
def test_sweep_is_non_increasing(tmp_path, copies):
    output = tmp_path / "pairs.csv"
    args = ["sweep", "--overlap", "0:0.95:0.05", "--copies", str(copies), "-o", str(output)]
    assert main(args) == 0
    with open(str(output)) as f:
        rows = [[float(v) for v in row] for row in list(csv.reader(f))[1:]]
    assert len(rows) == 20
    for s, eta_eigen, eta_bisect, delta in rows:
        assert eta_eigen == pytest.approx((1 - s) / (1 - s ** copies), abs=1e-10)
        assert delta <= 1e-8
    etas = [row[1] for row in rows]
    for k in range(len(etas) - 1):
        assert etas[k + 1] <= etas[k]


@pytest.mark.parametrize("value,expected", [
    (2.0 / 3.0, "0.6666667"),
    (1.0, "1.0000000"),
    (0.0, "0.0000000"),
    (1.234e-4, "0.0001234000"),
    (4.0 / 7.0, "0.5714286"),
])
def test_format_value_keeps_significant_digits(value, expected):
    assert format_value(value, 7) == expected


def test_three_copies_sample_config(tmp_path, caplog, half_machine_file):
    config = os.path.join(CONFIGS, "three_copies_bisection.yaml")
    opts = ["--config-file", config, "--opts", "OUTPUT_DIR", str(tmp_path / "logs")]
    assert main(["efficiency", HALF] + opts) == 0
    assert "copies: 3" in caplog.text
    assert "eta* (bisection): 0.5714286" in caplog.text
    assert os.path.exists(str(tmp_path / "logs" / "probclone.log"))

    caplog.clear()
    assert main(["simulate", half_machine_file, "--input", "0"] + opts) == 0
    assert "shots=100000" in caplog.text
    assert "seed=2024" in caplog.text


def test_build_nearly_dependent_set(tmp_path, caplog):
    path = write_states(tmp_path / "near.json", [[1, 0, 0], [0, 1, 0], [1, 1, 1e-4]])
    output = str(tmp_path / "near_machine.json")
    assert main(["check", path]) == 0
    assert main(["build", path, "-o", output]) == 0
    assert "verification: pass" in caplog.text


def test_build_reports_conditioning_failure(tmp_path, monkeypatch):
    def identity_completion(domain, target, tol):
        return np.eye(domain.shape[1], dtype=np.complex128)

    monkeypatch.setattr(cloning_machine, "complete_unitary", identity_completion)
    output = tmp_path / "m.json"
    assert main(["build", HALF, "--eta", "0.5", "-o", str(output)]) == 3
    assert not output.exists()
