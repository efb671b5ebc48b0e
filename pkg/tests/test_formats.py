import csv
import io
import json

from kuratowski import formats
from kuratowski.algebra import make_table
from kuratowski.monoid import the_monoid


def table_payload(table):
    return {
        "kind": "table",
        "scope": "monoid",
        "order": len(table.names),
        "names": list(table.names),
        "identity": "s0",
        "entries": [[table.names[v] for v in row] for row in table.entries],
    }


def test_json_render_round_trips():
    report = {"schema_version": 1, "command": ["table"], "elapsed_ms": 3,
              "payload": table_payload(the_monoid().table)}
    text = formats.render(report, "json")
    again = json.loads(text)
    assert again == report


def test_ascii_drops_identity_row_and_column():
    text = formats.render({"payload": table_payload(the_monoid().table)}, "ascii")
    lines = [l for l in text.splitlines() if l.strip()]
    header = next(l for l in lines if l.lstrip().startswith("*"))
    assert "σ0" not in header and "σ13" in header
    assert "s1" not in text   # display names are σ-form
    grid = [l for l in lines if l.lstrip().startswith("σ")]
    assert len(grid) == 13    # σ0 row dropped
    assert not any(l.lstrip().startswith("σ0 ") for l in grid)
    assert "omit" in text.lower()


def test_csv_keeps_every_row():
    text = formats.render({"payload": table_payload(the_monoid().table)}, "csv")
    rows = list(csv.reader(io.StringIO(text)))
    assert len(rows) == 15
    assert rows[0][0] == "*"
    assert rows[1][:3] == ["s0", "s0", "s1"]


def test_trivial_table_renders_one_csv_data_row():
    t = make_table([[0]], ["s0"])
    text = formats.render({"payload": table_payload(t)}, "csv")
    rows = list(csv.reader(io.StringIO(text)))
    assert rows == [["*", "s0"], ["s0", "s0"]]


def test_census_tabulation():
    payload = {"kind": "census", "scope": "M", "semigroups": 118,
               "types": 56, "non_monoids": 43, "groups": 12, "monoids": 75,
               "by_size": {"1": [7, 1], "2": [17, 4]}}
    text = formats.render({"payload": payload}, "ascii")
    assert "118" in text and "56" in text
    cap, header, rows = formats.tabulate(payload)
    assert header[0] == "size"
    assert rows[-1][0] == "total"


def test_sigma_substitution_only_hits_whole_names():
    assert formats._sigma("s3 s13") == "σ3 σ13"
    assert formats._sigma("was3") == "was3"
    assert formats._sigma("s3x") == "s3x"


def test_checks_tabulation():
    payload = {"kind": "checks", "passed": 1, "failed": 0,
               "checks": [{"id": "golden-table", "status": "pass",
                           "detail": "196 products"}]}
    text = formats.render({"payload": payload}, "ascii")
    assert "golden-table" in text and "pass" in text
