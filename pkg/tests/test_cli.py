"""CLI contract: JSON-line reports, exit codes, determinism."""

import json
import subprocess
import sys

from transferideals.cli import main


def run_cli(args):
    out = subprocess.run(
        [sys.executable, "-m", "transferideals.cli"] + args,
        capture_output=True,
        text=True,
    )
    return out


def parse_reports(stdout):
    reports = []
    for line in stdout.splitlines():
        if not line.startswith("{"):
            continue
        payload = line.split("\t#")[0]
        reports.append(json.loads(payload))
    return reports


def test_check_conjecture_passes(capsys):
    code = main(["check", "conjecture", "--p", "3", "--q", "2"])
    assert code == 0
    [rep] = parse_reports(capsys.readouterr().out)
    assert rep["check"] == "conjecture"
    assert rep["verdict"] == "pass"
    assert rep["params"] == {"p": 3, "q": 2, "field": "QQ"}


def test_check_stability_all_r(capsys):
    code = main(["check", "stability", "--p", "3", "--q", "2"])
    assert code == 0
    reps = parse_reports(capsys.readouterr().out)
    assert [r["params"]["r"] for r in reps] == [0, 1, 2]
    assert all(r["verdict"] == "pass" for r in reps)
    assert all(r["params"]["field"] == "GF(3)" for r in reps)


def test_field_override(capsys):
    code = main(["--field", "Q", "check", "stability", "--p", "3", "--r", "0"])
    assert code == 0
    [rep] = parse_reports(capsys.readouterr().out)
    assert rep["params"]["field"] == "QQ"


def test_gen_ideal_json(capsys):
    code = main(["gen", "ideal", "--p", "3", "--q", "2", "--which", "transfer"])
    assert code == 0
    obj = json.loads(capsys.readouterr().out)
    assert obj["generators"] == ["t^2 + t*e3 + e6", "t*e1 + e4", "t*e2 + e5"]


def test_gen_ideal_out_dir(tmp_path, capsys):
    code = main(
        [
            "--out", str(tmp_path),
            "gen", "ideal", "--p", "3", "--q", "2", "--which", "minors",
        ]
    )
    assert code == 0
    capsys.readouterr()
    written = list(tmp_path.glob("*.json"))
    assert len(written) == 1
    obj = json.loads(written[0].read_text())
    assert len(obj["generators"]) == 10


def test_resolve_prints_betti_table(capsys):
    code = main(["resolve", "--p", "3"])
    assert code == 0
    out = capsys.readouterr().out
    [rep] = parse_reports(out)
    assert rep["detail"]["betti"] == [1, 4, 4, 1]
    assert "total:" in out


def test_usage_errors_exit_2():
    assert run_cli(["--bogus-flag"]).returncode == 2
    assert run_cli(["check", "nonsense"]).returncode == 2
    assert run_cli([]).returncode == 2


def test_deterministic_output():
    outs = []
    for _ in range(2):
        r = run_cli(["check", "initial", "--p", "3", "--q", "2"])
        assert r.returncode == 0
        # strip the wall-time comments, the rest must match byte for byte
        outs.append(
            "\n".join(line.split("\t#")[0] for line in r.stdout.splitlines())
        )
    assert outs[0] == outs[1]


def test_failed_report_carries_witness_and_sets_exit(capsys):
    from transferideals.cli import Reporter

    rep = Reporter()
    rep.emit("demo", {"p": 3}, False, witness={"bad": [1, 2]})
    assert rep.failed
    [obj] = parse_reports(capsys.readouterr().out)
    assert obj["verdict"] == "fail"
    assert obj["witness"] == {"bad": [1, 2]}


def test_out_dir_writes_reports(tmp_path, capsys):
    code = main(
        ["--out", str(tmp_path), "check", "conjecture", "--p", "3", "--q", "2"]
    )
    assert code == 0
    capsys.readouterr()
    text = (tmp_path / "reports.jsonl").read_text()
    [rep] = parse_reports(text)
    assert rep["verdict"] == "pass"


def test_reports_are_json_lines():
    r = run_cli(["check", "q2", "--p", "3", "--bound", "3"])
    assert r.returncode == 0
    reps = parse_reports(r.stdout)
    assert reps and all("check" in rep and "verdict" in rep for rep in reps)
