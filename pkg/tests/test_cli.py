import io
import json
import subprocess
import sys

import pytest

from stanley.cli import main


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def test_expand_stanley():
    code, text = run("expand", "stanley", "10")
    lines = text.splitlines()
    assert code == 0 and len(lines) == 11
    assert lines[0] == "0\t1"
    assert lines[2:4] == ["2\t-2", "3\t-1"]


def test_expand_trivial_and_class():
    assert run("expand", "F0", "0") == (0, "0\t1\n")
    code, text = run("expand", "class(8,3,3)", "19")
    assert code == 0 and text.splitlines()[-1] == "19\t4"


def test_expand_json():
    code, text = run("expand", "G0", "5", "--format", "json")
    d = json.loads(text)
    assert code == 0 and d["name"] == "G0" and len(d["coeffs"]) == 6


def test_expand_unknown_lists_catalog(capsys):
    code, _ = run("expand", "nope", "5")
    assert code == 2
    assert "class(m,r,L)" in capsys.readouterr().err


@pytest.mark.parametrize("suite,N", [("dissection", "400"), ("congruence", "400"), ("monotone", "300"), ("jtp", "200")])
def test_verify_suites_pass(suite, N):
    code, text = run("verify", suite, N)
    assert code == 0
    assert text.startswith("PASS")


def test_verify_json_lines():
    code, text = run("verify", "gg", "120", "--format", "json")
    reps = [json.loads(line) for line in text.splitlines()]
    assert code == 0 and all(r["passed"] for r in reps)


def test_map_worked_example():
    code, text = run("map", "85,53,45,45,43,19,3", "8", "3", "11")
    d = json.loads(text)
    assert code == 0
    assert d["image"] == "81,49,47,41^2,23,7,1^4" and d["case"] == 2


def test_map_table_row():
    code, text = run("map", "19", "8", "3", "3")
    assert code == 0 and json.loads(text)["image"] == "17,1^2"


def test_map_rejects_non_member(capsys):
    code, _ = run("map", "4", "8", "3", "1")
    assert code == 2
    assert "4" in capsys.readouterr().err


def test_witness():
    code, text = run("witness", "18")
    assert code == 0 and json.loads(text)["witness"] == "7^2,1^4"
    code, text = run("witness", "3")
    assert code == 0 and json.loads(text)["witness"] is None


def test_audit_commands():
    assert run("audit", "8", "3", "3", "40")[0] == 0
    assert run("audit", "5", "2", "6", "40")[0] == 0
    code, text = run("audit", "6", "2", "1", "20")
    assert code == 0
    assert "finding\t4\t" in text


def test_audit_table_flag():
    code, text = run("audit", "8", "3", "3", "19", "--table")
    assert code == 0
    assert any(line.split() == ["19", "4", "4", "4", "8", "True"] for line in text.splitlines())


def test_table_lists_map():
    code, text = run("table", "19")
    lines = text.splitlines()
    assert code == 0 and len(lines) == 8
    assert "19\t->\t17,1^2\tcase 1\t(i)" in lines


def test_report_runs():
    code, text = run("report", "200", "--stride", "100")
    assert code == 0 and "Meinardus" in text


def test_usage_errors_exit_two():
    assert run("map", "4", "8", "9", "1")[0] == 2
    assert run("expand", "stanley", "-1")[0] == 2
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["verify", "nosuchsuite"])
    assert exc.value.code == 2


def test_max_n_cap(monkeypatch):
    monkeypatch.setenv("STANLEY_MAX_N", "50")
    assert run("expand", "stanley", "60")[0] == 2
    assert run("expand", "stanley", "50")[0] == 0


def test_output_is_deterministic():
    assert run("map", "85,53,45,45,43,19,3", "8", "3", "11") == run("map", "85,53,45,45,43,19,3", "8", "3", "11")
    assert run("audit", "8", "3", "2", "25", "--table") == run("audit", "8", "3", "2", "25", "--table")


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "stanley", "expand", "stanley", "3"], capture_output=True, text=True, check=False
    )
    assert proc.returncode == 0
    assert proc.stdout == "0\t1\n1\t1\n2\t-2\n3\t-1\n"
