import json
from pathlib import Path

import pytest

from qtcodes.catalog import CSV_COLUMNS
from qtcodes.cli import main

DATA = Path(__file__).parent / "data"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def construct(capsys, tmp_path, *argv):
    code, out, _ = run(capsys, "construct", *argv)
    assert code == 0
    path = tmp_path / "code.json"
    path.write_text(out)
    return json.loads(out), path


def test_construct_binary_series(capsys, tmp_path):
    rec, _ = construct(capsys, tmp_path, "--q", "2", "--t", "3", "--p", "8", "--h-poly", "1,1,0,1")
    assert (rec["n"], rec["k"], rec["w1"], rec["w2"]) == (56, 6, 28, 32)
    assert rec["g_coeffs"] == [1, 1, 1, 0, 1]
    assert len(rec["generator"]) == 14


def test_construct_signed_coefficients(capsys, tmp_path):
    rec, path = construct(capsys, tmp_path, "--q", "3", "--t", "2", "--p", "9", "--h-poly=-1,-1,1")
    assert rec["h_coeffs"] == [2, 2, 1] and rec["lambda"] == 2
    code, out, _ = run(capsys, "analyze", str(path), "--format", "json")
    assert code == 0
    assert json.loads(out)["min_distance"] == 24


def test_construct_matrix_format(capsys):
    code, out, _ = run(capsys, "construct", "--q", "2", "--t", "2", "--p", "2", "--format", "matrix")
    assert code == 0
    rows = out.strip().splitlines()
    assert len(rows) == 6 and all(len(r.split()) == 6 for r in rows)


@pytest.mark.parametrize(
    "argv",
    [
        ("--q", "6", "--t", "2", "--p", "3"),
        ("--q", "2", "--t", "3", "--p", "1"),
        ("--q", "3", "--t", "2", "--p", "4", "--h-poly", "1,0,1"),
        ("--q", "2", "--t", "3"),
    ],
)
def test_construct_parameter_errors(capsys, argv):
    code, _, err = run(capsys, "construct", *argv)
    assert code == 2
    assert err.startswith("error:")


def test_analyze_binary_series(capsys, tmp_path):
    _, path = construct(capsys, tmp_path, "--q", "2", "--t", "3", "--p", "8", "--h-poly", "1,1,0,1")
    code, out, _ = run(capsys, "analyze", str(path))
    assert code == 0
    assert "two_weight: (28,32)" in out
    assert "projective: true" in out
    assert "qt_closure_interleaved: true" in out and "qt_closure_block: true" in out


def test_analyze_explicit_g_simplex(capsys, tmp_path):
    _, path = construct(
        capsys, tmp_path, "--q", "3", "--t", "3", "--g-poly", "1,0,1,1,1,-1,-1,0,1,-1,1", "--base-only"
    )
    code, out, _ = run(capsys, "analyze", str(path))
    assert code == 0
    assert "equidistant: 9" in out


def test_analyze_truncated_file(capsys, tmp_path):
    _, path = construct(capsys, tmp_path, "--q", "2", "--t", "2", "--p", "3")
    path.write_text(path.read_text()[:80])
    code, _, _ = run(capsys, "analyze", str(path))
    assert code == 2


def test_analyze_missing_keys(capsys, tmp_path):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({"q": 2}))
    assert run(capsys, "analyze", str(path))[0] == 2


def test_analyze_too_large(capsys, tmp_path, monkeypatch):
    import qtcodes.analyze as analyze

    _, path = construct(capsys, tmp_path, "--q", "3", "--t", "2", "--p", "3")
    monkeypatch.setattr(analyze.weight_distribution, "__defaults__", (10,))
    assert run(capsys, "analyze", str(path))[0] == 3


@pytest.mark.parametrize("q, t", [(2, 2), (2, 3), (3, 2), (4, 2)])
def test_construct_analyze_round_trip(capsys, tmp_path, q, t):
    for p in range(2, q**t + 2):
        rec, path = construct(capsys, tmp_path, "--q", str(q), "--t", str(t), "--p", str(p))
        code, out, _ = run(capsys, "analyze", str(path), "--format", "json")
        report = json.loads(out)
        assert code == 0 and report["matches_claim"]
        assert report["min_distance"] == rec["w1"]
        assert report["projective"] and report["qt_closure_interleaved"]


def test_table1_golden(capsys):
    code, out, _ = run(capsys, "table1")
    assert code == 0
    assert out == (DATA / "table1.csv").read_text()


def test_table1_output_file(capsys, tmp_path):
    target = tmp_path / "t.csv"
    assert run(capsys, "table1", "--output", str(target))[0] == 0
    assert target.read_text() == (DATA / "table1.csv").read_text()


def test_catalog_binary_series(capsys):
    code, out, _ = run(capsys, "catalog", "--q", "2", "--t", "3", "--p-range", "2", "8")
    lines = out.strip().splitlines()
    assert lines[0] == ",".join(CSV_COLUMNS)
    rows = [dict(zip(CSV_COLUMNS, line.split(","))) for line in lines[1:]]
    got = [(int(r["n"]), int(r["w1"]), int(r["w2"])) for r in rows]
    assert got == [(14, 4, 8), (21, 8, 12), (28, 12, 16), (35, 16, 20), (42, 20, 24), (49, 24, 28), (56, 28, 32)]


def test_catalog_series_sizes(capsys):
    _, out, _ = run(capsys, "catalog", "--q", "3", "--t", "3", "--p-range", "2", "27", "--format", "json")
    recs = json.loads(out)
    assert len(recs) == 26
    assert all((r["n"], r["w1"], r["w2"]) == (13 * r["p"], 9 * (r["p"] - 1), 9 * r["p"]) for r in recs)
    _, out, _ = run(capsys, "catalog", "--q", "3", "--t", "2", "--p-range", "2", "9", "--format", "json")
    assert [(r["n"], r["d"]) for r in json.loads(out)] == [(4 * p, 3 * (p - 1)) for p in range(2, 10)]


def test_catalog_p_range_all(capsys):
    code, out, _ = run(capsys, "catalog", "--q", "2", "--t", "2", "--p-range", "ALL")
    assert code == 0
    assert [line.split(",")[2] for line in out.strip().splitlines()[1:]] == ["2", "3", "4", "5"]
    code, _, _ = run(capsys, "catalog", "--q", "2", "--t", "2", "--p-range", "3")
    assert code == 2


def test_catalog_errors_do_not_abort(capsys):
    code, out, err = run(capsys, "catalog", "--q", "2", "--t", "2", "--p-range", "4", "6", "--format", "json")
    recs = json.loads(out)
    assert code == 0
    assert [r["p"] for r in recs] == [4, 5, 6]
    assert "error" not in recs[0] and "error" not in recs[1]
    assert "BadP" in recs[2]["error"] and "p=6" in err


def test_catalog_deterministic(capsys):
    first = run(capsys, "catalog")[1]
    second = run(capsys, "catalog")[1]
    assert first == second
    assert len(first.strip().splitlines()) == 1 + sum(q**t for q, t in [(2, 2), (2, 3), (2, 4), (3, 2), (3, 3), (4, 2), (5, 2)])


def test_verify_paper(capsys):
    code, out, _ = run(capsys, "verify-paper")
    assert code == 0
    assert out.count("PASS") == 10 and "FAIL" not in out


def test_verify_paper_only(capsys):
    code, out, _ = run(capsys, "verify-paper", "--only", "table1")
    assert code == 0
    assert out.strip() == "PASS table1"


def test_verify_paper_mutation_detected(capsys):
    code, out, _ = run(capsys, "verify-paper", "--mutate", "--only", "binary_series", "--only", "two_weight_sweep")
    assert code == 1
    assert "FAIL binary_series" in out and "FAIL two_weight_sweep" in out
