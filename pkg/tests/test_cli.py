import csv
import io
import json
import subprocess
import sys

import pytest

from quandlering.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv, "--format", "json")
    return code, json.loads(out)


def test_validate_catalog_label(capsys):
    code, out, _ = run(capsys, "validate", "Q5.14")
    assert code == 0
    assert "medial: yes" in out


def test_validate_bad_table(tmp_path, capsys):
    f = tmp_path / "bad.txt"
    f.write_text("2\n2 2\n1 1\n")
    code, data = run_json(capsys, "validate", str(f))
    assert code == 1
    assert data["data"]["valid"] is False and data["data"]["axiom"] == "idempotency"


def test_json_config_records_arguments(capsys):
    code, data = run_json(capsys, "idem", "R3", "--ring", "q", "--bound", "3", "--denom", "3")
    assert code == 0
    assert data["command"] == "idem"
    assert data["config"]["ring"] == "q" and data["config"]["bound"] == 3 and data["config"]["denom"] == 3
    assert len(data["data"]["elements"]) == 7


def test_mod2_idempotents(capsys):
    code, data = run_json(capsys, "idem", "Q5.14")
    assert code == 0
    assert data["data"]["elements"][5] == "e1+e2+e3"
    assert len(data["data"]["elements"]) == 10


def test_resource_limit_exit_code(capsys):
    code, _, err = run(capsys, "idem", "Q5.1", "--ring", "z", "--bound", "9", "--limit", "1000")
    assert code == 3
    assert "limit" in err


def test_unknown_quandle_is_usage_error(capsys):
    code, _, err = run(capsys, "validate", "no-such-file")
    assert code == 2 and err


def test_argparse_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["idem-table"])
    assert exc.value.code == 2


def test_catalog_csv(capsys):
    code, out, _ = run(capsys, "catalog", "--order", "4", "--format", "csv")
    rows = list(csv.reader(io.StringIO(out)))
    assert code == 0
    assert rows[0] == ["label", "table", "latin", "medial"] and len(rows) == 8


def test_color_counts(capsys):
    code, data = run_json(capsys, "color", "builtin:L4a1{0}", "R6")
    assert code == 0 and data["data"]["count"] == 12
    code, data = run_json(capsys, "color", "builtin:L4a1{1}", "Q5.14", "--idempotents")
    assert data["data"]["count"] == 76


def test_color_compare(capsys):
    code, out, _ = run(capsys, "color", "builtin:L2a1{0}", "Q5.14", "--compare", "builtin:L4a1{1}")
    assert code == 0
    assert "isomorphic" in out


def test_color_presentation_file(tmp_path, capsys):
    f = tmp_path / "hopf.q"
    f.write_text("quandle hopf {\n  gens: a, b;\n  rel: a*b = a;\n  rel: b*a = b;\n}\n")
    code, out, _ = run(capsys, "color", str(f), "T3", "--count-only")
    assert code == 0 and out.strip() == "9"


def test_enhance_csv_header(capsys):
    code, out, _ = run(capsys, "enhance", "--p1", "builtin:L4a1{0}", "--p2", "builtin:L5a1{1}",
                       "--format", "csv")
    assert code == 0
    assert "relation_1" in out.splitlines()[0]


def test_enhance_bad_grid(capsys):
    code, _, _ = run(capsys, "enhance", "--p1", "builtin:L4a1{0}", "--p2", "builtin:L5a1{1}", "--grid", "x")
    assert code == 2


def test_peirce_r3(capsys):
    code, out, _ = run(capsys, "peirce", "R3", "--bound", "3", "--denom", "3")
    assert code == 0
    assert out.strip().splitlines()[-1] == "spectrum: {0, 1, -1}"


def test_idem_table_order3(capsys):
    code, data = run_json(capsys, "idem-table", "--order", "3")
    assert code == 0
    assert len(data["data"]) == 3


def test_reproduce_single_group(capsys):
    code, data = run_json(capsys, "reproduce", "--only", "colorings")
    assert code == 0
    assert [r["group"] for r in data["data"]] == ["colorings"]
    assert data["data"][0]["status"] == "PASS"


def test_reproduce_unknown_group(capsys):
    code, _, err = run(capsys, "reproduce", "--only", "nonsense")
    assert code == 2 and "nonsense" in err


def test_corrupted_catalog_names_the_row(tmp_path, capsys):
    code, data = run_json(capsys, "catalog")
    rows = data["data"]
    row = next(r for r in rows if r["label"] == "Q4.3")
    row["mod2_idempotents"] = row["mod2_idempotents"][1:]
    subset = [r for r in rows if r["label"] in ("Q3.1", "Q4.3", "Q5.14")]
    f = tmp_path / "cat.json"
    f.write_text(json.dumps(subset))
    code, out, _ = run(capsys, "reproduce", "--only", "tables", "--catalog", str(f))
    assert code == 1
    assert "Q4.3" in out


def test_clean_catalog_subset_passes(tmp_path, capsys):
    code, data = run_json(capsys, "catalog", "--order", "4")
    f = tmp_path / "cat.json"
    f.write_text(json.dumps(data))
    code, out, _ = run(capsys, "reproduce", "--only", "tables,families", "--catalog", str(f))
    assert code == 0, out


def test_out_file(tmp_path, capsys):
    target = tmp_path / "r.json"
    code, out, _ = run(capsys, "validate", "R5", "--format", "json", "--out", str(target))
    assert code == 0 and out == ""
    assert json.loads(target.read_text())["data"]["latin"] is True


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "quandlering.cli", "validate", "R3"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and "valid quandle of order 3" in proc.stdout
