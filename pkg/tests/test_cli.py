import json
import subprocess
import sys

import pytest

from codeword_paradoxes.cli import main
from codeword_paradoxes.report import REPORT_DIR_ENV


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def run_json(capsys, *argv):
    code, out = run_cli(capsys, *argv, "--format", "json")
    return code, json.loads(out)


def test_verify_code_five(capsys):
    code, payload = run_json(capsys, "verify-code", "--code", "five")
    assert code == 0
    assert payload["verdict"] == "pass"
    checks = payload["details"]["checks"]
    assert checks["group_order"] == {"expected": 32, "got": 32}
    assert checks["invariant_subgroup_order"] == {"expected": 16, "got": 16}
    assert checks["error_correction_pairs"] == 256
    assert "+1 -1 ZZZZZ" in payload["details"]["group"]


def test_verify_code_mermin(capsys):
    code, payload = run_json(capsys, "verify-code", "--code", "mermin")
    assert code == 0
    checks = payload["details"]["checks"]
    assert checks["group_order"]["got"] == 8
    assert checks["uncorrectable_errors"][0]["fails_as_expected"] is True


def test_verify_code_steane(capsys):
    code, payload = run_json(capsys, "verify-code", "--code", "steane")
    assert code == 0
    assert payload["details"]["checks"]["group_order"]["got"] == 128


def test_unknown_code_is_usage_error(capsys):
    with pytest.raises(SystemExit) as err:
        main(["verify-code", "--code", "shor"])
    assert err.value.code == 2


def test_missing_command_is_usage_error(capsys):
    with pytest.raises(SystemExit) as err:
        main([])
    assert err.value.code == 2


def test_reality_counts(capsys):
    code, payload = run_json(capsys, "reality", "--code", "five",
                             "--site", "1", "--letter", "x")
    assert code == 0
    assert payload["details"]["determination_count"] == 8
    assert payload["details"]["compatible_pair_count"] == 5


def test_reality_cyclic_target(capsys):
    code, payload = run_json(capsys, "reality", "--code", "five",
                             "--site", "3", "--letter", "y")
    assert code == 0
    assert payload["details"]["determination_count"] == 8


def test_reality_mermin_witness(capsys):
    code, payload = run_json(capsys, "reality", "--code", "mermin",
                             "--site", "1", "--letter", "z")
    assert code == 0
    witnesses = {d["witness"] for d in payload["details"]["determinations"]}
    assert "IZI" in witnesses


def test_reality_site_out_of_range(capsys):
    with pytest.raises(SystemExit) as err:
        main(["reality", "--code", "mermin", "--site", "9", "--letter", "z"])
    assert err.value.code == 2


def test_pentagon(capsys):
    code, payload = run_json(capsys, "pentagon")
    assert code == 0
    assert payload["verdict"] == "contradiction-confirmed"
    for ws in (0, 1):
        inst = payload["details"]["instances"][f"codeword{ws}"]
        assert inst["contradiction"] is True
        assert inst["eigenvalue_product"] == -1


def test_array(capsys):
    code, payload = run_json(capsys, "array")
    assert code == 0
    det = payload["details"]
    assert det["impossibility"] is True
    assert det["col_products"][-1] == "-IIIII"
    assert det["shape"] == [6, 13]


def test_ks(capsys):
    code, payload = run_json(capsys, "ks")
    assert code == 0
    det = payload["details"]
    assert det["vertices"] == 104
    assert det["projectors_per_dimension"] == "104/32 = 3.25"
    assert det["colorability"]["satisfiable"] is False
    assert det["canonical_contexts_alone_satisfiable"] is False
    assert det["canonical_contexts_found"] is True


def test_ks_budget_exhaustion_exits_3(capsys):
    code = main(["ks", "--budget", "5"])
    assert code == 3


def test_ks_dump_set(capsys, tmp_path):
    path = tmp_path / "ks.json"
    code, payload = run_json(capsys, "ks", "--dump-set", str(path))
    assert code == 0
    dump = json.loads(path.read_text())
    assert len(dump["vertices"]) == 104
    assert len(dump["contexts"]) == 39
    assert all(len(e) == 2 for e in dump["edges"])


def test_steane_search(capsys):
    code, payload = run_json(capsys, "steane-search", "--max", "10")
    assert code == 0
    assert payload["verdict"] == "contradiction-confirmed"
    for ws in (0, 1):
        res = payload["details"]["results"][f"codeword{ws}"]
        assert res["contradictions_found"] > 0
        assert res["minimal_size"] == 4


def test_steane_search_single_state(capsys):
    code, payload = run_json(capsys, "steane-search", "--max", "4",
                             "--state", "1")
    assert code == 0
    assert list(payload["details"]["results"]) == ["codeword1"]


def test_selftest(capsys):
    code, payload = run_json(capsys, "selftest", "--seed", "1")
    assert code == 0
    assert all(s["ok"] for s in payload["details"]["suites"])


def test_json_output_is_deterministic(capsys):
    _, first = run_cli(capsys, "pentagon", "--format", "json")
    _, second = run_cli(capsys, "pentagon", "--format", "json")
    assert first == second


def test_report_dir_env(capsys, tmp_path, monkeypatch):
    monkeypatch.setenv(REPORT_DIR_ENV, str(tmp_path))
    code, _ = run_cli(capsys, "array", "--format", "json")
    assert code == 0
    written = json.loads((tmp_path / "array.json").read_text())
    assert written["verdict"] == "contradiction-confirmed"


def test_text_format_mentions_verdict(capsys):
    code, out = run_cli(capsys, "verify-code", "--code", "mermin")
    assert code == 0
    assert "verdict: pass" in out


def test_console_script_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "codeword_paradoxes.cli", "verify-code",
         "--code", "mermin", "--format", "json"],
        capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["verdict"] == "pass"
