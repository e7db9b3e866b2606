"""CLI behaviour: schemas of each subcommand, determinism, exit codes."""

import json

import pytest

from covorbits.cli import main
from covorbits.tables import GROUPS, get_records, load_tables


def run_cli(capsys, *argv):
    try:
        code = main(list(argv))
    except SystemExit as exc:  # usage/domain paths raise
        code = exc.code
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, err = run_cli(capsys, "--json", *argv)
    assert code in (0, 3), err
    return code, json.loads(out)


def test_orbits_json_schema(capsys):
    code, body = run_json(capsys, "orbits", "B", "2")
    assert code == 0
    assert set(body) == {"family", "rank", "orbit_weight", "count", "orbits"}
    assert {"partition", "special", "qa"} == set(body["orbits"][0])


def test_orbits_human_lists_special_rows(capsys):
    code, out, _ = run_cli(capsys, "orbits", "B", "2")
    assert code == 0
    assert "[5]" in out and "[1,1,1,1,1]" in out
    assert out.count("special") >= 2


def test_bv_json_schema(capsys):
    code, body = run_json(capsys, "bv", "B", "2", "1", "4")
    assert code == 0
    assert body["pairs"] == [{"source": [4], "image": [1, 1, 1, 1, 1]}]
    code, body = run_json(capsys, "bv", "A", "4", "2", "4")
    assert body["pairs"][0]["image"] == [2, 2]
    code, body = run_json(capsys, "bv", "C", "2", "2")
    assert len(body["pairs"]) == 4


def test_verify_json_schema_and_exit(capsys):
    code, body = run_json(capsys, "verify", "B", "3", "5")
    assert code == 0
    assert body["violations"] == 0 and body["cells"] == 15
    assert set(body["config"]) == {"family", "rank_max", "degree_max", "seed"}


def test_verify_byte_identical_across_jobs(capsys):
    _, out1, _ = run_cli(capsys, "--json", "verify", "B", "6", "10")
    _, out2, _ = run_cli(capsys, "--json", "verify", "B", "6", "10")
    _, out3, _ = run_cli(capsys, "--json", "--jobs", "8", "verify", "B", "6", "10")
    assert out1 == out2 == out3


def test_n0_json_schema(capsys):
    code, body = run_json(capsys, "n0", "B", "4")
    assert code == 0
    assert set(body) == {"family", "rank", "degree_cap", "n0_qa", "n0_bv", "equal", "difference"}
    assert [2, 2, 1, 1, 1, 1, 1] in body["n0_qa"]


def test_scan_json_schema(capsys):
    code, body = run_json(capsys, "scan", "C", "6")
    assert code == 0
    assert body["first_divergence_rank"] is None
    assert {"rank", "n0_qa", "n0_bv", "equal", "difference"} == set(body["rows"][0])


def test_exceptional_json_schemas(capsys):
    code, body = run_json(capsys, "exceptional", "E8", "dump")
    assert code == 0 and body["count"] == 70
    record_fields = {
        "label", "special", "even", "stabilizer", "pairs", "criterion",
        "qa", "raisable", "tau_same_pair", "diagram", "graded_dims",
    }
    assert set(body["records"][0]) == record_fields
    code, body = run_json(capsys, "exceptional", "E6", "check")
    assert code == 0 and body["mismatches"] == 0
    code, body = run_json(capsys, "exceptional", "E7", "n0")
    assert code == 0 and len(body["labels"]) == 3


def test_gdim_json_schema(capsys):
    code, body = run_json(capsys, "gdim", "E7", "1", "0", "0", "0", "0", "0", "0")
    assert code == 0
    assert body["dims"]["1"] == 32 and body["dims"]["2"] == 1
    assert body["total_dim"] == 133


def test_usage_error_exits_1(capsys):
    code, _, err = run_cli(capsys, "orbits", "B")
    assert code == 1
    code, _, err = run_cli(capsys, "bv", "B", "2", "1", "4x")
    assert code == 1


def test_domain_error_exits_2(capsys):
    code, _, err = run_cli(capsys, "orbits", "Q", "3")
    assert code == 2 and "error" in err
    code, _, err = run_cli(capsys, "bv", "B", "2", "1", "9,9")
    assert code == 2


def test_gdim_bad_labels_exit_2(capsys):
    code, _, err = run_cli(capsys, "gdim", "E6", "9", "0", "0", "0", "0", "0")
    assert code == 2


def test_failed_table_check_exits_3(tmp_path, capsys, monkeypatch):
    raw = {g: [r.to_json() for r in get_records(g)] for g in GROUPS}
    raw["E6"][3]["qa"] = {"kind": "finite", "members": [5]}
    data_dir = tmp_path / "data"
    data_dir.mkdir()
    (data_dir / "exceptional_orbits.json").write_text(json.dumps(raw))
    monkeypatch.setenv("COVORBITS_DATA", str(data_dir))
    load_tables.cache_clear()
    try:
        code, out, _ = run_cli(capsys, "exceptional", "E6", "check")
        assert code == 3
        assert "1 mismatches" in out
    finally:
        monkeypatch.delenv("COVORBITS_DATA")
        load_tables.cache_clear()
