import csv
import io
import json

import pytest

from kuratowski import cli


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def payload(capsys, *argv):
    code, out, _ = run(capsys, *argv)
    assert code == 0
    doc = json.loads(out)
    assert set(doc) >= {"schema_version", "command", "elapsed_ms", "payload"}
    assert doc["schema_version"] == 1
    assert doc["command"] == list(argv)
    return doc["payload"]


def test_table_envelope(capsys):
    p = payload(capsys, "table")
    assert len(p["names"]) == 14
    assert p["entries"][1][1] == "s0"
    assert p["identity"] == "s0"


def test_table_within_and_named(capsys):
    p = payload(capsys, "table", "--within", "6,9")
    assert p["names"] == ["s%d" % i for i in range(6, 14)]
    p = payload(capsys, "table", "--name", "(7)")
    assert sorted(p["names"]) == ["s10", "s13", "s2", "s5", "s7", "s8"]


def test_census_scoped(capsys):
    p = payload(capsys, "census", "--within", "3,4")
    assert (p["semigroups"], p["types"]) == (57, 28)
    assert p["by_size"]["12"] == [1, 1]
    assert sum(c for c, _ in p["by_size"].values()) == 57


def test_classify_covers_all(capsys):
    p = payload(capsys, "classify")
    assert sum(c["count"] for c in p["classes"]) == 118
    assert len(p["classes"]) == 56


def test_verify_single_and_all(capsys):
    code, out, _ = run(capsys, "verify", "golden-table")
    assert code == 0
    doc = json.loads(out)
    assert doc["payload"]["failed"] == 0
    code, out, _ = run(capsys, "verify", "all")
    assert code == 0
    assert json.loads(out)["payload"]["passed"] == 15


def test_verify_unknown_id_is_usage_error(capsys):
    code, _, err = run(capsys, "verify", "no-such-check")
    assert code == 2
    assert "error:" in err


def test_quotient_csv_matches_fixture(capsys):
    code, out, _ = run(capsys, "quotient", "--format", "csv",
                       "--relate", "7=13")
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert len(rows) == 11
    import kuratowski.monoid as monoid
    fix = monoid.load_fixture("quotient_s7eq13.json")
    assert [r[0] for r in rows[1:]] == ["s%d" % r for r in fix["reps"]]
    name = {i: "s%d" % r for i, r in enumerate(fix["reps"])}
    assert [r[1:] for r in rows[1:]] == \
        [[name[v] for v in row] for row in fix["entries"]]


def test_quotient_multiple_relations(capsys):
    p = payload(capsys, "quotient", "--relate", "2=7", "--relate", "2=8")
    assert len(p["names"]) < 6


def test_space_analyze_topology_file(capsys, tmp_path):
    f = tmp_path / "sier.json"
    f.write_text(json.dumps({"points": 2, "opens": [[], [0], [0, 1]]}))
    p = payload(capsys, "space", "analyze", "--file", str(f))
    assert p["input"] == "space"
    assert p["monoid"]["order"] == 8
    assert "s7=s8" in p["monoid"]["collapsed"]
    assert p["discrete"] is False
    assert p["opens"] == 3
    assert p["max_set"]["distinct"] == 4


def test_space_analyze_operator_file(capsys, tmp_path):
    f = tmp_path / "op.json"
    f.write_text(json.dumps(
        {"points": 2, "images": ["10", "10", "11", "11"]}))
    p = payload(capsys, "space", "analyze", "--file", str(f))
    assert p["input"] == "operator"
    assert p["monoid"]["order"] == 6
    assert "s2=s7" in p["monoid"]["collapsed"]
    assert p["preserves_empty"] is False


def test_space_analyze_specific_set(capsys, tmp_path):
    f = tmp_path / "three.json"
    f.write_text(json.dumps(
        {"points": 3, "min_nbhd": ["110", "110", "001"]}))
    p = payload(capsys, "space", "analyze", "--file", str(f),
                "--set", "100")
    assert p["orbit"]["distinct"] == 6
    assert p["orbit"]["set"] == "100"
    assert len(p["orbit"]["images"]) == 14
    assert p["orbit"]["images"][0] == {"word": "s0", "image": "100"}


def test_space_analyze_bad_file(capsys, tmp_path):
    code, _, err = run(capsys, "space", "analyze", "--file",
                       str(tmp_path / "missing.json"))
    assert code == 2 and "error:" in err
    f = tmp_path / "bad.json"
    f.write_text(json.dumps({"points": 2, "min_nbhd": ["01", "01"]}))
    code, _, err = run(capsys, "space", "analyze", "--file", str(f))
    assert code == 2 and "reflexive" in err
    f.write_text(json.dumps({"min_nbhd": ["01", "01"]}))
    code, _, err = run(capsys, "space", "analyze", "--file", str(f))
    assert code == 2 and "points" in err


def test_space_enumerate(capsys):
    p = payload(capsys, "space", "enumerate", "-n", "3")
    assert p["count"] == 29
    p = payload(capsys, "space", "enumerate", "-n", "3", "--up-to-homeo")
    assert p["count"] == 9
    assert p["spaces"][0]["min_nbhd"] == ["100", "010", "001"]


def test_space_check_exit_codes(capsys):
    code, out, _ = run(capsys, "space", "check", "--premise", "2=5",
                       "--conclusion", "discrete", "--max-n", "3")
    assert code == 0
    assert json.loads(out)["payload"]["holds"] is True
    code, out, _ = run(capsys, "space", "check", "--premise", "7=8",
                       "--conclusion", "discrete", "--max-n", "3")
    assert code == 1
    doc = json.loads(out)
    assert doc["payload"]["holds"] is False
    assert doc["payload"]["counterexample"]["min_nbhd"] == ["10", "11"]


def test_failed_check_exits_one(capsys, monkeypatch):
    import kuratowski.checks as checks
    monkeypatch.setitem(
        checks.__dict__, "CHECKS",
        [("always-bad", lambda: ("fail", "broken on purpose"))])
    code, out, _ = run(capsys, "verify", "all")
    assert code == 1
    assert json.loads(out)["payload"]["failed"] == 1


def test_output_file_and_figures(capsys, tmp_path):
    dest = tmp_path / "census.json"
    code, _, err = run(capsys, "census", "--output", str(dest))
    assert code == 0
    doc = json.loads(dest.read_text())
    assert doc["payload"]["semigroups"] == 118
    figs = doc.get("figures", [])
    assert figs
    for f in figs:
        assert (tmp_path / f).exists()


def test_ascii_format_table(capsys):
    code, out, _ = run(capsys, "table", "--format", "ascii")
    assert code == 0
    assert "σ13" in out and "{" not in out


def test_usage_errors(capsys):
    with pytest.raises(SystemExit) as e:
        cli.main(["table", "--bogus"])
    assert e.value.code == 2
    with pytest.raises(SystemExit):
        cli.main(["table", "--format", "yaml"])
    code, _, err = run(capsys)
    assert code == 2


def test_fourteen_small(capsys):
    p = payload(capsys, "space", "fourteen", "--max-n", "3",
                "--threads", "1")
    assert p["first_fourteen_n"] is None
    assert [r["max_orbit"] for r in p["results"]] == [2, 4, 6]
    assert p["results"][2]["witness_space"] == ["100", "110", "111"]
