"""Exit codes and output of the tq command line tool."""

import dataclasses
import io
import json
import subprocess
import sys

import pytest

from twentyq import analysis, bar_bet_distribution
from twentyq.cli import main, run_game

BARBET = {"labels": ["a", "b", "c", "d"], "probs": [0.3, 0.3, 0.2, 0.2]}


def write_dist(tmp_path, payload, name="dist.json"):
    path = tmp_path / name
    path.write_text(json.dumps(payload))
    return str(path)


def run_cli(*args):
    return subprocess.run(
        [sys.executable, "-m", "twentyq", *args],
        capture_output=True,
        text=True,
        timeout=120,
    )


def test_analyze_reports_and_exits_zero(tmp_path):
    proc = run_cli("analyze", write_dist(tmp_path, BARBET))
    assert proc.returncode == 0
    assert "2.3" in proc.stdout


def test_analyze_json_output(tmp_path):
    proc = run_cli("analyze", "--json", write_dist(tmp_path, BARBET))
    assert proc.returncode == 0
    report = json.loads(proc.stdout)
    assert report["l_yes"] == pytest.approx(2.3, abs=1e-12)
    assert all(report["bounds_hold"].values())


def test_missing_input_file(tmp_path):
    proc = run_cli("analyze", str(tmp_path / "nope.json"))
    assert proc.returncode == 1
    assert proc.stderr.startswith("error:")
    assert "not found" in proc.stderr


def test_invalid_json_input(tmp_path):
    path = tmp_path / "broken.json"
    path.write_text("{not json")
    proc = run_cli("analyze", str(path))
    assert proc.returncode == 1
    assert "invalid JSON" in proc.stderr


def test_invalid_distribution(tmp_path):
    bad = write_dist(tmp_path, {"labels": ["a", "b"], "probs": [0.7, 0.2]})
    proc = run_cli("analyze", bad)
    assert proc.returncode == 1
    assert proc.stderr.startswith("error:")


def test_normalize_flag(tmp_path):
    raw = write_dist(tmp_path, {"labels": ["a", "b"], "probs": [3, 1]})
    proc = run_cli("analyze", "--normalize", raw)
    assert proc.returncode == 0


def test_huffman_command(tmp_path):
    proc = run_cli("huffman", write_dist(tmp_path, BARBET))
    assert proc.returncode == 0
    assert "average questions: 2.000000" in proc.stdout


def test_optimal_command_with_dot(tmp_path):
    dot_file = tmp_path / "tree.dot"
    proc = run_cli("optimal", write_dist(tmp_path, BARBET), "--dot", str(dot_file))
    assert proc.returncode == 0
    assert "average questions: 2.300000" in proc.stdout
    assert "depth profile: [1, 2, 3, 4]" in proc.stdout
    assert dot_file.read_text().startswith("digraph question_tree {")


def test_augment_command(tmp_path):
    path = write_dist(tmp_path, BARBET)
    proc = run_cli("augment", path)
    assert proc.returncode == 0
    assert "average questions: 2.500000" in proc.stdout
    assert "added cost: 0.500000" in proc.stdout
    relabeled = run_cli("augment", path, "--relabel")
    assert "average questions: 2.400000" in relabeled.stdout


def test_barbet_command():
    proc = run_cli("barbet")
    assert proc.returncode == 0
    assert "2.300000" in proc.stdout
    assert "2.400000" in proc.stdout
    assert "0.100000" in proc.stdout


def test_barbet_sweep_csv():
    proc = run_cli("barbet", "--sweep", "0.08,0.05,0.01")
    assert proc.returncode == 0
    lines = proc.stdout.strip().split("\n")
    assert lines[0] == "epsilon,gap,q1,q2,huffman_balanced"
    gaps = [float(line.split(",")[1]) for line in lines[1:]]
    assert gaps == pytest.approx([1 / 3 - 0.32, 1 / 3 - 0.2, 1 / 3 - 0.04], abs=1e-9)


def test_barbet_sweep_domain_error():
    proc = run_cli("barbet", "--sweep", "0.10")
    assert proc.returncode == 1
    assert proc.stderr.startswith("error:")


def test_sweep_command():
    proc = run_cli("sweep", "--random", "5", "--n", "4", "--seed", "1")
    assert proc.returncode == 0
    assert "checked 5 random distributions" in proc.stdout
    assert "smallest H+1 margin" in proc.stdout


def test_sweep_csv_rows():
    proc = run_cli("sweep", "--random", "3", "--n", "3", "--seed", "2", "--csv")
    assert proc.returncode == 0
    lines = proc.stdout.strip().split("\n")
    assert lines[0] == "index,entropy,l_huffman,l_yes,upper_margin,all_hold"
    assert len(lines) == 5  # header + 3 rows + summary
    assert lines[1].endswith("true")


def test_play_full_game(tmp_path):
    proc = subprocess.run(
        [sys.executable, "-m", "twentyq", "play", write_dist(tmp_path, BARBET)],
        input="no\nno\nno\nyes\n",
        capture_output=True,
        text=True,
        timeout=120,
    )
    assert proc.returncode == 0
    assert "It's d!" in proc.stdout
    assert "4 questions" in proc.stdout
    assert "last answer was yes" in proc.stdout


def test_play_eof_mid_game(tmp_path):
    proc = subprocess.run(
        [sys.executable, "-m", "twentyq", "play", write_dist(tmp_path, BARBET)],
        input="no\n",
        capture_output=True,
        text=True,
        timeout=120,
    )
    assert proc.returncode == 1
    assert "ended before the game finished" in proc.stderr


def test_run_game_handles_bad_replies():
    out = io.StringIO()
    code = run_game(bar_bet_distribution(), io.StringIO("what\ny\n"), out)
    assert code == 0
    text = out.getvalue()
    assert 'please answer "y" or "n"' in text
    assert "It's alpha!" in text


def test_run_game_inconsistent_end():
    out = io.StringIO()
    code = run_game(bar_bet_distribution(), io.StringIO("n\nn\nn\nn\n"), out)
    assert code == 0
    assert "contradict" in out.getvalue()


def test_help_exits_zero():
    assert main(["--help"]) == 0


def test_unknown_command_exits_one(capsys):
    assert main(["frobnicate"]) == 1
    assert capsys.readouterr().err.startswith("error:")


def test_bound_violation_exits_two(tmp_path, monkeypatch, capsys):
    # force a failed bound to check the regression tripwire path
    real = analysis.analyze

    def doctored(dist, limit=None):
        report = real(dist, limit=limit)
        broken = dict(report.bounds_hold)
        broken["huffman_lt_yes"] = False
        return dataclasses.replace(report, bounds_hold=broken)

    monkeypatch.setattr(analysis, "analyze", doctored)
    code = main(["analyze", write_dist(tmp_path, BARBET)])
    assert code == 2
    err = capsys.readouterr().err
    assert "huffman_lt_yes" in err
    assert '"labels"' in err  # counterexample distribution is printed


def test_console_script_runs():
    proc = subprocess.run(
        ["tq", "--help"], capture_output=True, text=True, timeout=120
    )
    assert proc.returncode == 0
    assert "analyze" in proc.stdout
