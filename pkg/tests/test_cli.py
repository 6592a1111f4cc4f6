import csv
import io
import json

import pytest

from trifree.cli import main
from trifree.enumeration import canonical_form
from trifree.formats import emit_graph6, parse_graph6
from helpers import C5, PETERSEN


def write_g6(path, graphs):
    path.write_bytes(b"".join(emit_graph6(g) + b"\n" for g in graphs))


def run(capsys, argv):
    code = main(argv)
    return code, capsys.readouterr().out


def test_stats_text(tmp_path, capsys):
    f = tmp_path / "in.g6"
    write_g6(f, [C5])
    code, out = run(capsys, ["stats", "--input", str(f), "--jobs", "1"])
    assert code == 0
    assert "omega" in out and "Dhc" in out
    line = [ln for ln in out.splitlines() if "Dhc" in ln][0]
    assert " 2 " in line and " 3 " in line  # omega=2, chi=3


def test_stats_json_fields(tmp_path, capsys):
    f = tmp_path / "in.g6"
    write_g6(f, [C5, PETERSEN])
    code, out = run(capsys, ["stats", "--input", str(f), "--jobs", "1",
                             "--format", "json", "--deterministic"])
    assert code == 0
    report = json.loads(out)
    assert report["command"] == "stats"
    assert set(report) == {"command", "params", "rows", "violations", "stats"}
    rows = report["rows"]
    assert rows[0]["chi"] == 3 and rows[0]["three_k1_free"] is True
    assert rows[1]["alpha"] == 4 and rows[1]["three_k1_free"] is False
    assert "timestamp" not in report["stats"]


def test_stats_empty_input(tmp_path, capsys):
    f = tmp_path / "empty.g6"
    f.write_bytes(b"")
    code, out = run(capsys, ["stats", "--input", str(f), "--jobs", "1",
                             "--format", "json", "--deterministic"])
    assert code == 0
    assert json.loads(out)["rows"] == []


def test_stats_parse_error_abort_exits_2(tmp_path, capsys):
    f = tmp_path / "bad.g6"
    f.write_bytes(b"Bw\n:sparse\n")
    code, _ = run(capsys, ["stats", "--input", str(f), "--jobs", "1"])
    assert code == 2


def test_stats_parse_error_skip_counts(tmp_path, capsys):
    f = tmp_path / "bad.g6"
    f.write_bytes(b"Bw\n:sparse\nDhc\n")
    code, out = run(capsys, ["stats", "--input", str(f), "--jobs", "1",
                             "--on-parse-error", "skip", "--format", "json",
                             "--deterministic"])
    assert code == 0
    report = json.loads(out)
    assert len(report["rows"]) == 2
    assert report["stats"]["parse_errors"] == 1


def test_stats_edgelist_input(tmp_path, capsys):
    f = tmp_path / "g.txt"
    f.write_text("5\n0 1\n1 2\n2 3\n3 4\n4 0\n")
    code, out = run(capsys, ["stats", "--input", str(f), "--input-format",
                             "edgelist", "--jobs", "1", "--format", "json",
                             "--deterministic"])
    assert code == 0
    assert json.loads(out)["rows"][0]["chi"] == 3


def test_verify_bounds_small(capsys):
    code, out = run(capsys, ["verify-bounds", "--max-n", "5", "--jobs", "1",
                             "--format", "json", "--deterministic"])
    assert code == 0
    report = json.loads(out)
    assert report["violations"] == []
    omegas = [row["omega"] for row in report["rows"]]
    assert omegas == sorted(omegas)
    total = sum(row["graphs"] for row in report["rows"])
    assert total == 1 + 2 + 3 + 7 + 14
    # C5's complement is tight against the even bound at omega 2
    row2 = next(r for r in report["rows"] if r["omega"] == 2)
    assert row2["min_slack_lemma2"] == 0 and row2["min_slack_table1"] == 0


def test_verify_ramsey_consistent(capsys):
    code, out = run(capsys, ["verify-ramsey", "--k", "3", "--n", "6",
                             "--format", "json", "--deterministic"])
    assert code == 0
    report = json.loads(out)
    assert report["rows"][0]["count"] == 0
    assert report["rows"][0]["consistent"] is True

    code, out = run(capsys, ["verify-ramsey", "--k", "3", "--n", "5",
                             "--format", "json", "--deterministic"])
    assert code == 0
    assert json.loads(out)["rows"][0]["count"] == 1


def test_lemma_command(tmp_path, capsys):
    f = tmp_path / "in.g6"
    write_g6(f, [C5, PETERSEN])
    code, out = run(capsys, ["lemma", "--input", str(f), "--jobs", "1",
                             "--format", "json", "--deterministic"])
    assert code == 0
    report = json.loads(out)
    ok_row = report["rows"][0]
    assert ok_row["status"] == "ok"
    assert (ok_row["r"], ok_row["s"], ok_row["t"], ok_row["k"]) == (1, 2, 0, 0)
    assert all(i["holds"] for i in ok_row["identities"])
    skip_row = report["rows"][1]
    assert "not 3K1-free" in skip_row["status"]
    assert report["stats"]["skipped"] == 1
    assert report["violations"] == []


def test_table1_csv(capsys):
    code, out = run(capsys, ["table1", "--format", "csv", "--deterministic"])
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert len(rows) == 10
    by_op1 = {int(r["omega_plus_1"]): r for r in rows}
    assert by_op1[8]["bound"] == "14" and by_op1[8]["strengthened"] == "yes"
    assert by_op1[10]["bound"] == "21" and by_op1[10]["strengthened"] == "yes"
    assert by_op1[12]["bound"] == "30" and by_op1[12]["strengthened"] == "no"


def test_search_writes_witness_files(tmp_path, capsys):
    base = tmp_path / "w"
    code, out = run(capsys, ["search", "--n", "5", "--k", "3", "--jobs", "1",
                             "--witness-out", str(base), "--format", "json",
                             "--deterministic"])
    assert code == 0
    g6 = (tmp_path / "w.g6").read_text().strip()
    assert canonical_form(parse_graph6(g6)) == canonical_form(C5)
    sidecar = json.loads((tmp_path / "w.json").read_text())
    assert sidecar["k"] == 3 and sidecar["provenance"] == "searched"
    assert sidecar["seed"] == 0


def test_search_exhausted_exits_3(tmp_path, capsys):
    base = tmp_path / "none"
    code, _ = run(capsys, ["search", "--n", "6", "--k", "3", "--jobs", "1",
                           "--max-iterations", "3000", "--restarts", "2",
                           "--witness-out", str(base), "--deterministic"])
    assert code == 3
    assert not (tmp_path / "none.g6").exists()


def test_deterministic_reports_are_byte_identical(capsys):
    _, out1 = run(capsys, ["table1", "--format", "json", "--deterministic"])
    _, out2 = run(capsys, ["table1", "--format", "json", "--deterministic"])
    assert out1 == out2


def test_stats_reads_stdin(monkeypatch, capsys):
    wrapper = io.TextIOWrapper(io.BytesIO(emit_graph6(C5) + b"\n"))
    monkeypatch.setattr("sys.stdin", wrapper)
    code, out = run(capsys, ["stats", "--jobs", "1", "--format", "json",
                             "--deterministic"])
    assert code == 0
    report = json.loads(out)
    assert report["rows"][0]["source"] == "<stdin>:1"
    assert report["rows"][0]["chi"] == 3


def test_stats_parallel_jobs(tmp_path, capsys):
    f = tmp_path / "in.g6"
    write_g6(f, [C5, PETERSEN, C5])
    code, out = run(capsys, ["stats", "--input", str(f), "--jobs", "2",
                             "--format", "json", "--deterministic"])
    assert code == 0
    rows = json.loads(out)["rows"]
    assert [r["n"] for r in rows] == [5, 10, 5]


def test_usage_error_exits_2():
    with pytest.raises(SystemExit) as exc:
        main(["verify-ramsey", "--k", "3"])  # missing required --n
    assert exc.value.code == 2


def test_max_n_cap(capsys):
    code, _ = run(capsys, ["verify-bounds", "--max-n", "12", "--jobs", "1"])
    assert code == 2
