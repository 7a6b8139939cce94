import io
import json

import pytest

import config
import main
from checks.lemma13 import GroundValleyCheck
from main import EXIT_CAP, EXIT_INPUT, EXIT_OK, EXIT_VIOLATION, parse_range
from errors import OutOfRange
from report import CheckResult


def run(capsys, *argv):
    code = main.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


@pytest.fixture
def restore_cap(monkeypatch):
    # --max-size rebinds every config cap for the rest of the process
    for name in config.CAPS:
        monkeypatch.setattr(config, name, getattr(config, name))


# ---------- map ----------
def test_map_f_and_g(capsys):
    assert run(capsys, "map", "UUUDDD")[:2] == (EXIT_OK, "UUDUDD\n")
    assert run(capsys, "map", "--f", "UUUDDD")[:2] == (EXIT_OK, "UUDUDD\n")
    assert run(capsys, "map", "--g", "UUDUDD")[:2] == (EXIT_OK, "UUUDDD\n")
    assert run(capsys, "map", "--iterations", "4", "UUUUDDDD")[:2] == (EXIT_OK, "UUUUDDDD\n")


def test_map_rejects_bad_path(capsys):
    code, out, err = run(capsys, "map", "UDD")
    assert code == EXIT_INPUT
    assert out == ""
    assert "error" in err


def test_map_rejects_nonpositive_iterations(capsys):
    for count in ("0", "-2"):
        code, out, err = run(capsys, "map", "--iterations", count, "UUUDDD")
        assert code == EXIT_INPUT
        assert out == ""
        assert "--iterations" in err


# ---------- orbit ----------
def test_orbit_of_a_path(capsys):
    assert run(capsys, "orbit", "UUUDDD")[:2] == (EXIT_OK, "UUUDDD\nUUDUDD\nlength=2\n")
    assert run(capsys, "orbit", "UD")[:2] == (EXIT_OK, "UD\nlength=1\n")


def test_orbit_all(capsys):
    code, out, _ = run(capsys, "orbit", "--all", "2")
    assert code == EXIT_OK
    assert out == "UUDD\nlength=1\n\nUDUD\nlength=1\n"
    code, out, _ = run(capsys, "orbit", "--all", "0")
    assert out == "ε\nlength=1\n"


def test_orbit_universe(capsys):
    code, out, _ = run(capsys, "orbit", "--all", "5", "--universe", "primitive_duu_avoiding")
    assert code == EXIT_OK
    assert out.count("length=4") == 2


def test_orbit_compositions(capsys):
    assert run(capsys, "orbit", "--comp", "2,1")[:2] == (EXIT_OK, "2,1\n1,1,1\nlength=2\n")
    code, out, _ = run(capsys, "orbit", "--cn", "5")
    assert code == EXIT_OK
    assert out.count("length=4") == 2
    assert run(capsys, "orbit", "--comp", "2,0")[0] == EXIT_INPUT


def test_orbit_cap(capsys, restore_cap):
    code, _, err = run(capsys, "orbit", "--all", str(config.ENUM_CAP + 1))
    assert code == EXIT_CAP
    assert "exceeds cap" in err
    assert run(capsys, "orbit", "--cn", "40")[0] == EXIT_CAP
    assert run(capsys, "--max-size", "3", "orbit", "UUUUDDDD")[0] == EXIT_CAP


# ---------- forest ----------
FOREST_JSON = ('{"trees":[{"label":[1],"children":[{"label":[1],"children":[]},'
               '{"label":[1,1],"children":[]}]}]}')


def test_forest_encode_decode(capsys, monkeypatch):
    assert run(capsys, "forest", "encode", "UUDUUDDD")[:2] == (EXIT_OK, FOREST_JSON + "\n")
    assert run(capsys, "forest", "decode", FOREST_JSON)[:2] == (EXIT_OK, "UUDUUDDD\n")
    monkeypatch.setattr("sys.stdin", io.StringIO(FOREST_JSON))
    assert run(capsys, "forest", "decode")[:2] == (EXIT_OK, "UUDUUDDD\n")


def test_forest_decode_reports_vertex(capsys):
    bad = json.dumps({"trees": [{"label": [1, 2], "children": []}]})
    code, out, err = run(capsys, "forest", "decode", bad)
    assert code == EXIT_INPUT
    assert out == ""
    assert "trees[0]" in err


# ---------- verify ----------
def test_parse_range():
    assert parse_range("3..7") == (3, 7)
    assert parse_range("5") == (5, 5)
    for bad in ["7..3", "a..b", ".."]:
        with pytest.raises(OutOfRange):
            parse_range(bad)


def test_verify_theorem6(capsys):
    code, out, err = run(capsys, "verify", "theorem6", "1..6")
    assert code == EXIT_OK
    doc = json.loads(out)
    assert doc["holds"] is True
    (target,) = doc["targets"]
    assert target["target"] == "theorem6" and target["range"] == [1, 6]
    assert [r["n"] for r in target["results"]] == [1, 2, 3, 4, 5, 6]
    assert target["results"][4]["details"]["parity"] == 1
    assert "[verify][theorem6] 1..6 ok" in err


@pytest.mark.parametrize("target, span", [
    ("cor7", "2..8"),
    ("fixedpoints", "0..7"),
    ("prop12", "2..7"),
    ("prop11", "1..6"),
    ("lemma13", "3..8"),
    ("prop14", "2..10"),
    ("prop15", "1..6"),
    ("lemma4", "1..6"),
    ("lemma5", "1..7"),
])
def test_verify_targets_hold(capsys, target, span):
    code, out, _ = run(capsys, "verify", target, span)
    assert code == EXIT_OK
    assert json.loads(out)["holds"] is True


def test_verify_cap_is_checked_before_running(capsys, restore_cap):
    code, out, _ = run(capsys, "verify", "cor7", "2..20")
    assert code == EXIT_CAP
    assert out == ""
    code, _, _ = run(capsys, "--max-size", "5", "verify", "prop11", "1..5")
    assert code == EXIT_CAP


@pytest.mark.parametrize("target, span", [
    ("lemma4", "30..30"),
    ("prop15", "1..30"),
    ("prop14", "2..100000"),
])
def test_every_verify_target_is_bounded(capsys, target, span):
    code, out, err = run(capsys, "verify", target, span)
    assert code == EXIT_CAP
    assert out == ""
    assert f"{target} size" in err


def test_verify_reports_violation(capsys, monkeypatch):
    monkeypatch.setattr(GroundValleyCheck, "run",
                        lambda self, n: CheckResult("lemma13", n, n != 4, counterexample="UDUUDD"))
    code, out, err = run(capsys, "verify", "lemma13", "3..5")
    assert code == EXIT_VIOLATION
    doc = json.loads(out)
    assert doc["holds"] is False
    assert [r["holds"] for r in doc["targets"][0]["results"]] == [True, False, True]
    assert "FAILED" in err


def test_verify_rejects_bad_input(capsys):
    assert run(capsys, "verify", "lemma4", "5..2")[0] == EXIT_INPUT
    with pytest.raises(SystemExit):
        main.main(["verify", "nonsense"])


# ---------- table ----------
def test_table_leaf_csv(capsys):
    code, out, _ = run(capsys, "table", "leaf-table", "--max-n", "3")
    assert code == EXIT_OK
    assert out == "n,k,count\n1,1,1\n2,1,1\n2,2,1\n3,1,2\n3,2,2\n3,3,1\n"


def test_table_fk_csv(capsys):
    code, out, _ = run(capsys, "table", "fk-series", "--k", "0", "--order", "4")
    assert out == "n,k,count\n0,0,1\n1,0,1\n2,0,2\n3,0,3\n4,0,6\n"


def test_table_orbit_census(capsys):
    code, out, _ = run(capsys, "table", "orbit-census", "--n", "4")
    assert out == "n,length,count\n4,1,6\n4,2,4\n4,4,4\n"


def test_table_text_is_deterministic(capsys):
    first = run(capsys, "table", "leaf-table", "--max-n", "5", "--format", "text")[1]
    second = run(capsys, "table", "leaf-table", "--max-n", "5", "--format", "text")[1]
    assert first == second
    assert "Rows: 15" in first


def test_table_to_file(capsys, tmp_path):
    target = tmp_path / "sub" / "leaf.csv"
    code, out, err = run(capsys, "table", "leaf-table", "--max-n", "2", "--out", str(target))
    assert code == EXIT_OK
    assert out == ""
    assert target.read_text() == "n,k,count\n1,1,1\n2,1,1\n2,2,1\n"
    assert "Saved 3 rows" in err


def test_table_limits_are_caps(capsys, restore_cap):
    code, out, err = run(capsys, "table", "fk-series", "--order", "500")
    assert code == EXIT_CAP
    assert out == ""
    assert "exceeds cap" in err
    assert run(capsys, "table", "leaf-table", "--max-n", "30")[0] == EXIT_CAP
    assert run(capsys, "table", "fk-series", "--order", "-1")[0] == EXIT_INPUT


def test_max_size_lifts_table_caps(capsys, restore_cap):
    code, out, _ = run(capsys, "--max-size", "26", "table", "leaf-table", "--max-n", "26")
    assert code == EXIT_OK
    assert out.splitlines()[-1] == "26,26,1"
    assert config.LEAF_TABLE_MAX_N == config.SERIES_MAX_ORDER == 26
