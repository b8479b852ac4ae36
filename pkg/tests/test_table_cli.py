import json

import pytest

from stirling_lab.cli import CACHE_ENV, main
from stirling_lab.strategies import s_triangular
from stirling_lab.table import SignedStirlingTable, TableRangeError


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_table_lookup():
    t = s_triangular(5)
    assert t(2, 5) == 0
    with pytest.raises(TableRangeError):
        t(6, 1)
    with pytest.raises(ValueError):
        t(-1, 0)


def test_table_rejects_bad_shapes():
    with pytest.raises(ValueError):
        SignedStirlingTable(2, (1, 0, 1))
    with pytest.raises(ValueError):
        SignedStirlingTable.from_rows([[1], [0, 1, 2]])
    with pytest.raises(ValueError):
        SignedStirlingTable.from_rows([[1]], "made_up")


def test_json_round_trip_60():
    t = s_triangular(60)
    again = SignedStirlingTable.from_json(t.to_json())
    assert again == t
    assert json.loads(t.to_json())["entries"][4] == [0, -6, 11, -6, 1]


def test_csv_round_trip():
    t = s_triangular(30)
    assert SignedStirlingTable.from_csv(t.to_csv()) == t
    assert t.to_csv().splitlines()[:3] == ["0,0,1", "1,0,0", "1,1,1"]


def test_cli_table_examples(capsys):
    code, out, _ = run(capsys, "table", "--max-n", "4", "--strategy", "triangular", "--format", "csv")
    assert code == 0 and "4,2,11" in out.splitlines()
    code, out, _ = run(capsys, "table", "--max-n", "1")
    assert code == 0 and out.splitlines() == ["0,0,1", "1,0,0", "1,1,1"]


def test_cli_table_genfun_matches_triangular(capsys):
    _, tri, _ = run(capsys, "table", "--max-n", "40", "--strategy", "triangular")
    _, gen, _ = run(capsys, "table", "--max-n", "40", "--strategy", "genfun")
    assert tri == gen


def test_cli_table_json(capsys):
    code, out, _ = run(capsys, "table", "--max-n", "3", "--format", "json", "--strategy", "harmonic_recurrence")
    obj = json.loads(out)
    assert code == 0 and obj["max_n"] == 3 and obj["strategy"] == "harmonic_recurrence"
    assert obj["entries"][3] == [0, 2, -3, 1]


@pytest.mark.parametrize("argv", [
    ["table", "--max-n", "0"],
    ["table", "--strategy", "nope"],
    ["table", "--format", "xml"],
    ["table", "--max-n", "x"],
    ["frobnicate"],
])
def test_cli_table_bad_flags(capsys, argv):
    code, out, _ = run(capsys, *argv)
    assert code == 2 and out == ""


@pytest.mark.parametrize("argv,expected", [
    (["3", "2", "1", "1"], "3"),
    (["4", "2", "1", "2", "6"], "36"),
    (["2", "1", "1/2", "2/3"], "2/3"),
    (["0", "0"], "1"),
    (["3", "1", "-1/2", "2/3", "-3/2"], "-3/2"),
])
def test_cli_bell(capsys, argv, expected):
    code, out, _ = run(capsys, "bell", *argv)
    assert code == 0 and out == expected + "\n"


@pytest.mark.parametrize("argv", [["2", "1", "1/x", "2"], ["2", "1", "1.5", "2"], ["2", "3", "1"], ["4", "2", "1"]])
def test_cli_bell_errors(capsys, argv):
    code, out, err = run(capsys, "bell", *argv)
    assert code == 2 and out == "" and err


def test_cli_bell_route_disagreement(capsys, monkeypatch):
    from fractions import Fraction

    import stirling_lab.cli as cli

    monkeypatch.setattr(cli, "bell_series", lambda n, k, args: Fraction(-999))
    code, out, _ = run(capsys, "bell", "3", "2", "1", "1")
    assert code == 4 and out == ""


def test_cli_verify(capsys):
    code, out, _ = run(capsys, "verify", "--identities", "LOGCVX", "--max-n", "30")
    assert code == 0
    assert json.loads(out)["results"][0]["id"] == "LOGCVX"
    code, out, _ = run(capsys, "verify", "--max-n", "0")
    assert code == 2 and out == ""
    code, _, _ = run(capsys, "verify", "--identities", "XYZ")
    assert code == 2


def test_cli_verify_small_is_deterministic(capsys):
    _, a, _ = run(capsys, "verify", "--max-n", "8")
    _, b, _ = run(capsys, "verify", "--max-n", "8")
    assert a == b


def test_cli_bench(capsys):
    code, out, _ = run(capsys, "bench", "--max-n", "12", "--strategies", "triangular,genfun", "--repetitions", "2")
    lines = out.splitlines()
    assert code == 0 and len(lines) == 3
    assert lines[1].split()[0] == "triangular" and lines[2].split()[0] == "genfun"
    assert all(line.endswith("verified") for line in lines[1:])
    code, _, _ = run(capsys, "bench", "--max-n", "1")
    assert code == 0


def test_cli_bench_printed_variant_fails(capsys):
    code, out, err = run(capsys, "bench", "--max-n", "6", "--strategies", "triangular,vertical_factorial_printed")
    assert code == 4 and out == "" and "vertical_factorial_printed" in err
    code, _, _ = run(capsys, "bench", "--repetitions", "0")
    assert code == 2


def test_cache_round_trip_and_reuse(tmp_path, capsys, monkeypatch):
    monkeypatch.delenv(CACHE_ENV, raising=False)
    cache = tmp_path / "t.json"
    code, cold, _ = run(capsys, "table", "--max-n", "60", "--cache", str(cache))
    assert code == 0 and cache.exists()
    payload = json.loads(cache.read_text())
    assert SignedStirlingTable.from_json_obj(payload["table"]) == s_triangular(60)
    code, warm, _ = run(capsys, "table", "--max-n", "60", "--cache", str(cache))
    assert code == 0 and warm == cold


def test_cache_checksum_corruption(tmp_path, capsys, monkeypatch):
    monkeypatch.delenv(CACHE_ENV, raising=False)
    cache = tmp_path / "t.json"
    run(capsys, "table", "--max-n", "6", "--cache", str(cache))
    payload = json.loads(cache.read_text())
    payload["table"]["entries"][4][2] = 12
    cache.write_text(json.dumps(payload))
    code, out, err = run(capsys, "table", "--max-n", "6", "--cache", str(cache))
    assert code == 3 and out == "" and "checksum" in err


def test_cache_cross_check_corruption(tmp_path, capsys, monkeypatch):
    monkeypatch.delenv(CACHE_ENV, raising=False)
    cache = tmp_path / "t.json"
    rows = s_triangular(6).rows()
    rows[4][2] = 12
    bad = SignedStirlingTable.from_rows(rows)
    cache.write_text(json.dumps({"checksum": bad.checksum(), "table": bad.to_json_obj()}))
    code, out, _ = run(capsys, "table", "--max-n", "6", "--cache", str(cache))
    assert code == 3 and out == ""
    cache.write_text("not json")
    code, _, _ = run(capsys, "table", "--max-n", "6", "--cache", str(cache))
    assert code == 3


def test_cache_env_override(tmp_path, capsys, monkeypatch):
    env_cache = tmp_path / "env.json"
    flag_cache = tmp_path / "flag.json"
    monkeypatch.setenv(CACHE_ENV, str(env_cache))
    code, _, _ = run(capsys, "table", "--max-n", "5", "--cache", str(flag_cache))
    assert code == 0 and env_cache.exists() and not flag_cache.exists()
