from __future__ import annotations

import csv
import io
import json
import subprocess
import sys
from pathlib import Path

import pytest

from hermsig.cli import main

GOLDEN = Path(__file__).parent / "golden"


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def write_diamond(tmp_path, doc, name="x.json"):
    path = tmp_path / name
    path.write_text(json.dumps(doc))
    return str(path)


def test_signatures_markdown(capsys):
    code, out, _ = run(capsys, "signatures", "--type", "EIII", "--rplus", "0")
    assert code == 0
    assert "| 0 | 8 11 12 13 14 15 16 |" in out


def test_signatures_check_agree(capsys):
    code, out, _ = run(capsys, "signatures", "--type", "CI", "--n", "2", "--rplus", "0", "--check", "--format", "json")
    doc = json.loads(out)
    assert code == 0 and doc["exit_code"] == 0
    assert doc["rows"] == [{"r_plus": 0, "r_minus": [2, 3], "closed_form": [2, 3], "status": "AGREE", "note": ""}]


def test_signatures_check_without_closed_form(capsys):
    code, out, _ = run(capsys, "signatures", "--type", "CI", "--n", "2", "--check", "--format", "csv")
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["R+", "R-", "closed form", "status", "note"]
    assert rows[2][:4] == ["1", "1 2", "-", "NOT_TABULATED"]


def test_signatures_provenance(capsys):
    code, out, _ = run(capsys, "signatures", "--type", "CI", "--n", "2", "--provenance", "--format", "json")
    doc = json.loads(out)
    pairs = {(p["r_plus"], p["r_minus"]) for p in doc["provenance"]}
    assert pairs == {(r["r_plus"], m) for r in doc["rows"] for m in r["r_minus"]}


@pytest.mark.parametrize(
    "argv",
    [
        ["signatures", "--type", "AIII", "--m", "1", "--n", "1"],
        ["signatures", "--type", "G2"],
        ["signatures", "--type", "CI", "--n", "3", "--m", "2"],
        ["signatures", "--type", "CI"],
        ["vanishing", "--type", "EIII", "--qmax", "0"],
        ["tables", "--which", "3", "--max-params", "2"],
    ],
)
def test_bad_arguments_exit_2(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2 and "error" in err


def test_argparse_errors_exit_2():
    with pytest.raises(SystemExit) as exc:
        main(["tables", "--which", "5"])
    assert exc.value.code == 2


def test_json_error_document(capsys):
    code, out, _ = run(capsys, "signatures", "--type", "AIII", "--m", "1", "--n", "1", "--format", "json")
    assert code == 2 and json.loads(out) == {"status": "error", "exit_code": 2, "message": json.loads(out)["message"]}


def test_table2_golden(capsys):
    code, out, _ = run(capsys, "tables", "--which", "2")
    assert code == 0
    assert out == (GOLDEN / "table2.md").read_text()


def test_table3_bdi_even_3_is_provisional(capsys):
    code, out, _ = run(capsys, "tables", "--which", "3", "--format", "json")
    rows = {r["pair"]: r for r in json.loads(out)["rows"]}
    assert code == 0
    assert rows["BDI_even(m=3)"]["status"] == "PROVISIONAL"
    assert "EIII" not in rows


def test_table4_flags_aiii_rows(capsys):
    code, out, _ = run(capsys, "tables", "--which", "4", "--max-params", "8", "--format", "json")
    doc = json.loads(out)
    assert code == 0 and doc["status"] == "ok"
    aiii = [r for r in doc["rows"] if r["type"] == "AIII" and r["params"]["m"] >= 2]
    assert aiii and all(r["status"] == "PROVISIONAL" for r in aiii)
    assert not any(r["pair"].startswith("CI(n=2)") or r["pair"] == "BDI_even(m=3)" for r in doc["rows"])


def test_tables_exit_3_on_disagreement(capsys, monkeypatch):
    import hermsig.closed_forms as cf

    monkeypatch.setattr(cf, "attainable_rminus", lambda desc, r: ())
    code, out, _ = run(capsys, "tables", "--which", "2", "--format", "json")
    assert code == 3 and json.loads(out)["exit_code"] == 3


def test_vanishing_evii(capsys):
    code, out, _ = run(capsys, "vanishing", "--type", "EVII", "--qmax", "28", "--format", "json")
    doc = json.loads(out)
    assert code == 0
    nonzero = {r["q"] for r in doc["rows"] if r["h0q"] == "Unconstrained"}
    assert nonzero == {17, 21, 22, 23, 24, 25, 26, 27}
    assert doc["h11"]["verdict"] == "IsomorphicToC"


def test_vanishing_bdi_odd_2(capsys):
    code, out, _ = run(capsys, "vanishing", "--type", "BDI-odd", "--m", "2")
    assert code == 0 and "H^(1,1): Unconstrained" in out


def test_vanishing_aiii_1_3(capsys):
    _, out, _ = run(capsys, "vanishing", "--type", "AIII", "--m", "1", "--n", "3", "--qmax", "6", "--format", "csv")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert [r["H^(0,q)"] for r in rows] == ["Unconstrained"] * 3 + ["Zero"] * 3


def test_hodge_y_fiber_point_is_identity(capsys, tmp_path):
    entries = [{"p": p, "q": q, "value": int(p == q)} for p in range(4) for q in range(4)]
    entries[1]["value"] = "unknown"
    path = write_diamond(tmp_path, {"dim": 3, "entries": entries})
    code, out, _ = run(capsys, "hodge-y", "--type", "CI", "--n", "2", "--parabolic", "1", "--x-hodge", path)
    doc = json.loads(out)
    assert code == 0 and doc["fiber_betti"] == [1]
    assert doc["y_diamond"]["entries"] == entries
    assert doc["picard"]["y_gamma_extra_rank"] == 0


def test_hodge_y_convolution_and_euler(capsys, tmp_path):
    entries = [{"p": p, "q": q, "value": [[1, 0, 2, 0], [0, 3, 1, 0], [2, 1, 3, 0], [0, 0, 0, 1]][p][q]}
               for p in range(4) for q in range(4)]
    path = write_diamond(tmp_path, {"dim": 3, "entries": entries})
    code, out, _ = run(capsys, "hodge-y", "--type", "CI", "--n", "2", "--parabolic", "", "--x-hodge", path)
    doc = json.loads(out)
    assert code == 0 and doc["fiber_betti"] == [1, 1]
    assert doc["euler"]["multiplicative"] is True
    y = {(e["p"], e["q"]): e["value"] for e in doc["y_diamond"]["entries"]}
    assert y[(1, 1)] == 3 + 1 and y[(1, 3)] == 0 + 2 and y[(4, 4)] == 1


def test_hodge_y_evii_full_subset(capsys, tmp_path):
    path = write_diamond(tmp_path, {"dim": 27, "entries": [{"p": 0, "q": 0, "value": 1}]})
    code, out, _ = run(capsys, "hodge-y", "--type", "EVII", "--parabolic", "1,2,3,4,5,6", "--x-hodge", path)
    doc = json.loads(out)
    assert code == 0 and doc["fiber_betti"] == [1]
    assert doc["picard"]["y_gamma_extra_rank"] == 0
    assert doc["euler"]["x"] is None


def test_hodge_y_errors(capsys, tmp_path):
    good = write_diamond(tmp_path, {"dim": 1, "entries": []})
    code, out, _ = run(capsys, "hodge-y", "--type", "CI", "--n", "2", "--x-hodge", good)
    assert code == 4 and json.loads(out)["exit_code"] == 4
    bad = write_diamond(tmp_path, {"dim": 3, "entries": [{"p": 0}]}, "bad.json")
    assert run(capsys, "hodge-y", "--type", "CI", "--n", "2", "--x-hodge", bad)[0] == 2
    assert run(capsys, "hodge-y", "--type", "CI", "--n", "2", "--x-hodge", str(tmp_path / "missing.json"))[0] == 2
    assert run(capsys, "hodge-y", "--type", "CI", "--n", "2", "--parabolic", "2", "--x-hodge", good)[0] == 2
    assert run(capsys, "hodge-y", "--type", "CI", "--n", "2", "--parabolic", "a", "--x-hodge", good)[0] == 2


def test_hodge_y_markdown_footer(capsys, tmp_path):
    entries = [{"p": p, "q": q, "value": int(p == q)} for p in range(4) for q in range(4)]
    path = write_diamond(tmp_path, {"dim": 3, "entries": entries})
    code, out, _ = run(capsys, "hodge-y", "--type", "CI", "--n", "2", "--x-hodge", path, "--format", "markdown")
    assert code == 0 and "chi(Y) = 8 = chi(X) * sum(b) = 4 * 2" in out


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "hermsig", "signatures", "--type", "EIII", "--rplus", "1"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0 and "5 9 11 12 13 14 15" in proc.stdout
