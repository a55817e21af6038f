import json

import pytest

from blocktoeplitz import cli


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_words(capsys):
    code, out, _ = run(capsys, "words", "--t-max", "6")
    assert code == 0
    rows = json.loads(out)["words"]
    assert [r["pair_matched"] for r in rows] == [1, 3, 15, 105, 945, 10395]
    assert [r["catalan"] for r in rows[:4]] == [1, 2, 5, 14]


def test_words_csv(capsys):
    code, out, _ = run(capsys, "words", "--t-max", "2", "--format", "csv")
    assert out.splitlines() == ["t,pair_matched,catalan", "1,1,1", "2,3,2"]


def test_count(capsys):
    code, out, _ = run(capsys, "count", "--link", "sym_toeplitz", "--n", "2", "--word", "abab", "--sign=-1,-1")
    assert code == 0 and json.loads(out)["count"] == "6"
    code, out, _ = run(capsys, "count", "--link", "tbi", "--n", "2", "--k", "2", "--word", "aa")
    assert json.loads(out)["count"] == "16"


def test_pw(capsys):
    code, out, _ = run(capsys, "pw", "--link", "sym_toeplitz", "--word", "abab")
    assert code == 0 and abs(json.loads(out)["p_hat"] - 2 / 3) < 0.02


def test_moments(capsys):
    code, out, _ = run(capsys, "moments", "--model", "tbi", "--t-max", "3")
    assert json.loads(out)["moments"] == {"1": 0.0, "2": 1.0, "3": 0.0, "4": 2.0, "5": 0.0, "6": 5.0}


def test_simulate_deterministic(tmp_path, capsys):
    args = ["simulate", "--model", "TBT", "--n", "6", "--k", "5", "--reps", "4", "--seed", "3"]
    p1, p2 = tmp_path / "a.json", tmp_path / "b.json"
    assert run(capsys, *args, "--out", str(p1))[0] == 0
    assert run(capsys, *args, "--out", str(p2))[0] == 0
    a, b = json.loads(p1.read_text()), json.loads(p2.read_text())
    a.pop("timing"), b.pop("timing")
    assert a == b


def test_simulate_eigenvalue_csv(tmp_path, capsys):
    e = tmp_path / "e.csv"
    code, *_ = run(capsys, "simulate", "--model", "TBI", "--n", "4", "--k", "3", "--reps", "2",
                   "--format", "csv", "--out", str(tmp_path / "h.csv"), "--eig-out", str(e))
    assert code == 0
    lines = e.read_text().splitlines()
    assert lines[0] == "replicate,index,eigenvalue" and len(lines) == 1 + 2 * 12
    assert (tmp_path / "h.csv").read_text().startswith("bin_left,bin_right,density")


def test_converge(capsys):
    code, out, _ = run(capsys, "converge", "--model", "TBT", "--regime", "fixed_k", "--n", "6",
                       "--sizes", "2,4,8", "--h-max", "4", "--no-empirical")
    assert code == 0
    gaps = [p["gap"]["4"] for p in json.loads(out)["points"]]
    assert gaps[0] > gaps[1] > gaps[2]


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "decomposition", "--max-size", "3")
    assert code == 0 and json.loads(out)["pass"] is True


def test_verify_failure_exit_code(capsys, monkeypatch):
    from blocktoeplitz.verify import Check, VerificationReport

    monkeypatch.setattr(cli, "run_verification",
                        lambda *a: VerificationReport("lemmas", [Check("ok", True), Check("broken identity", False)]))
    code, _, err = run(capsys, "verify", "--suite", "lemmas")
    assert code == 1 and "broken identity" in err


@pytest.mark.parametrize("argv", [
    ["count", "--link", "hankel", "--n", "3", "--word", "aa"],
    ["count", "--link", "sym_toeplitz", "--n", "3", "--word", "abc"],
    ["simulate", "--model", "TBI", "--n", "128", "--k", "64"],
    ["converge", "--model", "TBI", "--sizes", "2,4"],
    ["count", "--link", "sym_toeplitz", "--n", "100000", "--word", "abcabc", "--budget", "1e6"],
    ["simulate", "--model", "TBI", "--n", "4", "--k", "2", "--reps", "2", "--out", "/nonexistent-dir/x.json"],
])
def test_usage_and_io_errors_exit_2(capsys, argv):
    assert run(capsys, *argv)[0] == 2


def test_argparse_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(["simulate", "--model", "XYZ"])
    assert exc.value.code == 2
