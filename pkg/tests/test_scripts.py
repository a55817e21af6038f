import json
import subprocess
import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parents[1]


def run(*argv, cwd=None):
    return subprocess.run([sys.executable, *argv], capture_output=True, text=True, cwd=cwd)


def test_module_entry_point():
    r = run("-m", "blocktoeplitz", "words", "--t-max", "3")
    assert r.returncode == 0 and json.loads(r.stdout)["words"][2]["pair_matched"] == 15
    assert run("-m", "blocktoeplitz", "moments", "--model", "TBX").returncode == 2


def test_seed_env_var_changes_default(tmp_path):
    import os

    args = ["-m", "blocktoeplitz", "simulate", "--model", "TBI", "--n", "4", "--k", "2", "--reps", "2"]
    env = dict(os.environ, BLOCKTOEPLITZ_SEED="5")
    a = subprocess.run([sys.executable, *args], capture_output=True, text=True, env=env)
    b = subprocess.run([sys.executable, *args, "--seed", "5"], capture_output=True, text=True)
    assert json.loads(a.stdout)["empirical"] == json.loads(b.stdout)["empirical"]


def test_experiment_scripts(tmp_path):
    r = run(str(ROOT / "scripts" / "semicircle_run.py"), "--n", "4", "--reps", "3", "--outdir", str(tmp_path))
    assert r.returncode == 0, r.stderr
    assert (tmp_path / "semicircle_n4.json").exists()
    r = run(str(ROOT / "scripts" / "tbt_run.py"), "--n", "4", "--reps", "3", "--outdir", str(tmp_path))
    assert r.returncode == 0, r.stderr
    r = run(str(ROOT / "scripts" / "convergence_sweep.py"), "--no-empirical", "--ks", "2,4,8", "--outdir", str(tmp_path))
    assert r.returncode == 0, r.stderr
    assert "TBT" in r.stdout and (tmp_path / "converge_tbt.csv").exists()
