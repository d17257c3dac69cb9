import csv
import json

import pytest

from swapinsert import apply_script, correction_distance, Insert, Script, Swap, Delete
from swapinsert.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def parse_script_lines(out):
    ops = []
    in_script = False
    for line in out.splitlines():
        if line == "script:":
            in_script = True
            continue
        if not in_script:
            continue
        parts = line.split()
        if parts[0] == "ins":
            ops.append(Insert(int(parts[1]), parts[2]))
        elif parts[0] == "swap":
            ops.append(Swap(int(parts[1])))
        elif parts[0] == "del":
            ops.append(Delete(int(parts[1])))
    return Script(tuple(ops))


# -- dist ---------------------------------------------------------------------

def test_dist_with_script(capsys):
    code, out, _ = run_cli(capsys, "dist", "ba", "aab", "--script")
    assert code == 0
    assert "distance: 2" in out
    script = parse_script_lines(out)
    assert len(script) == 2
    assert apply_script("ba", script) == "aab"


def test_dist_unreachable_exit_2(capsys):
    code, out, _ = run_cli(capsys, "dist", "aa", "a")
    assert code == 2
    assert "unreachable" in out


def test_dist_swap_delete(capsys):
    code, out, _ = run_cli(capsys, "dist", "--ops", "swap-delete", "aab", "ba")
    assert code == 0
    assert "distance: 2" in out


def test_dist_swap_delete_script_replays(capsys):
    code, out, _ = run_cli(capsys, "dist", "--ops", "swap-delete", "aab", "ba",
                           "--script")
    assert code == 0
    script = parse_script_lines(out)
    assert apply_script("aab", script) == "ba"


def test_dist_json_round_trip(capsys):
    code, out, _ = run_cli(capsys, "dist", "ba", "aab", "--json")
    assert code == 0
    report = json.loads(out)
    recomputed = correction_distance(report["source"], report["target"])
    assert recomputed.distance.value == report["distance"]
    assert report["reachable"] is True
    assert report["n"] == 2 and report["m"] == 3


def test_dist_json_unreachable(capsys):
    code, out, _ = run_cli(capsys, "dist", "aa", "a", "--json")
    assert code == 2
    report = json.loads(out)
    assert report["distance"] is None
    assert report["reachable"] is False


def test_dist_weighted_output(capsys):
    code, out, _ = run_cli(capsys, "dist", "ba", "aab", "--c-ins", "2",
                           "--c-swap", "3")
    assert code == 0
    assert "weighted cost (2, 3): 5" in out


def test_dist_usage_error_exit_1(capsys):
    with pytest.raises(SystemExit) as err:
        main(["dist", "onlyone"])
    assert err.value.code == 1


def test_unknown_command_exit_1(capsys):
    with pytest.raises(SystemExit) as err:
        main(["frobnicate"])
    assert err.value.code == 1


def test_dist_from_files(tmp_path, capsys):
    src = tmp_path / "s.txt"
    tgt = tmp_path / "l.txt"
    src.write_text("ba\n")
    tgt.write_text("aab\n")
    code, out, _ = run_cli(capsys, "dist", str(src), str(tgt), "--files")
    assert code == 0
    assert "distance: 2" in out


def test_dist_missing_file_reports_error(tmp_path, capsys):
    code, _, err = run_cli(capsys, "dist", str(tmp_path / "nope"), str(tmp_path / "x"),
                           "--files")
    assert code == 1
    assert "error" in err


def test_dist_from_stdin(capsys, monkeypatch):
    import io
    monkeypatch.setattr("sys.stdin", io.StringIO("ba\naab\n"))
    code, out, _ = run_cli(capsys, "dist", "--stdin")
    assert code == 0
    assert "distance: 2" in out


def test_dist_bytes_mode(capsys):
    code, out, _ = run_cli(capsys, "dist", "--bytes", "ba", "aab", "--json")
    assert code == 0
    report = json.loads(out)
    assert report["source"] == list(b"ba")
    assert report["distance"] == 2


def test_exit_code_independent_of_format(capsys):
    plain = main(["dist", "aa", "a"])
    capsys.readouterr()
    as_json = main(["dist", "aa", "a", "--json"])
    capsys.readouterr()
    assert plain == as_json == 2


# -- oracle ---------------------------------------------------------------------

def test_oracle_agreement(capsys):
    code, out, _ = run_cli(capsys, "oracle", "ba", "aab")
    assert code == 0
    assert "engine=2 ucs=2 matching=2 AGREE" in out


def test_oracle_unreachable_agreement(capsys):
    code, out, _ = run_cli(capsys, "oracle", "aa", "a")
    assert code == 0
    assert "AGREE" in out


def test_oracle_budget_exit_3(capsys):
    code, _, err = run_cli(capsys, "oracle", "abcabc", "abcabcabcb",
                           "--budget", "5")
    assert code == 3
    assert "too large" in err


def test_oracle_weighted(capsys):
    code, out, _ = run_cli(capsys, "oracle", "ba", "aab",
                           "--c-ins", "2", "--c-swap", "3")
    assert code == 0
    assert "AGREE" in out
    assert "weighted_engine=5" in out


# -- stats ------------------------------------------------------------------------

def test_stats_output(capsys):
    code, out, _ = run_cli(capsys, "stats", "aab", "aaabab")
    assert code == 0
    assert "g: 2" in out
    assert "feasible: yes" in out


def test_stats_json(capsys):
    code, out, _ = run_cli(capsys, "stats", "aab", "aaabab", "--json")
    assert code == 0
    report = json.loads(out)
    assert report["g"] == 2
    assert report["feasible"] is True
    assert {entry["symbol"] for entry in report["per_symbol"]} == {"a", "b"}


# -- bench -------------------------------------------------------------------------

def test_bench_two_records(tmp_path, capsys):
    out_prefix = str(tmp_path / "bench")
    code, out, _ = run_cli(capsys, "bench", "--profile", "zero-g",
                           "--sizes", "1000,10000", "--repeats", "1",
                           "--out", out_prefix)
    assert code == 0
    with open(out_prefix + ".csv") as handle:
        rows = list(csv.reader(handle))
    assert len(rows) == 3  # header + 2 records
    assert rows[0][0] == "d"
    with open(out_prefix + ".json") as handle:
        assert len(json.load(handle)) == 2


# -- selftest ------------------------------------------------------------------------

def test_selftest_passes(capsys):
    code, out, _ = run_cli(capsys, "selftest", "--max-n", "4", "--max-m", "6",
                           "--alphabet", "2")
    assert code == 0
    assert "checked 3937 pairs" in out
    assert "selftest passed" in out
