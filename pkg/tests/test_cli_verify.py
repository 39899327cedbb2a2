import json
import subprocess
import sys

import pytest

from tmzv import cli, verify
from tmzv.errors import DomainError


def run(capsys, *argv, env=None, monkeypatch=None):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out.strip(), err


@pytest.fixture(autouse=True)
def clean_env(monkeypatch):
    for name in list(cli.ENV_NAMES.values()) + ["TMZV_CONFIG"]:
        monkeypatch.delenv(name, raising=False)


# ---------------------------------------------------------------------------
# expand / relation / eval

@pytest.mark.parametrize("argv,expected", [
    (("t_sh", "x", "y"), "xy + yx - t*xx"),
    (("t_st", "z2", "z3"), "z2z3 + z3z2 + (1-2t)*z5"),
    (("sh", "1", "xy"), "xy"),
    (("t_st", "z1", "z1 z1"), "3*z1z1z1 + (1-2t)*z1z2 + (1-2t)*z2z1 + (-t+t^2)*z3"),
])
def test_expand(capsys, argv, expected):
    code, out, _ = run(capsys, "expand", *argv)
    assert code == 0 and out == expected


def test_expand_json(capsys):
    code, out, _ = run(capsys, "expand", "t_sh", "y", "y", "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["product"] == "t_sh"
    assert data["terms"]


def test_expand_domain_error(capsys):
    code, _, err = run(capsys, "expand", "t_st", "yx", "y")
    assert code == 2 and "error" in err


def test_relation_sum(capsys):
    code, out, _ = run(capsys, "relation", "sum", "--k", "3", "--n", "2")
    assert code == 0 and out == "ζ^t(2,1) = (1+t)*ζ(3)"


def test_relation_fds(capsys):
    code, out, _ = run(capsys, "relation", "fds", "--w1", "xy", "--w0", "xy")
    assert code == 0 and out == "4*ζ^t(3,1) + (-1-4*t)*ζ(4) = 0"


def test_relation_hoffman_json(capsys):
    code, out, _ = run(capsys, "relation", "hoffman", "--index", "2,1", "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["label"] == "hoffman(2,1)" and data["claim"] == "vanishes"
    assert {sum(rec["index"]) for rec in data["terms"]} == {4}


@pytest.mark.parametrize("argv", [
    ("relation", "sum", "--k", "3"),
    ("relation", "sum", "--k", "2", "--n", "2"),
    ("relation", "cyclic", "--index", "1,1"),
    ("relation", "fds", "--w1", "y", "--w0", "xy"),
])
def test_relation_invalid(capsys, argv):
    assert run(capsys, *argv)[0] == 2


def test_eval(capsys):
    code, out, _ = run(capsys, "eval", "--index", "2")
    assert code == 0 and out.startswith("1.644934")
    code, out, _ = run(capsys, "eval", "--index", "2,1", "--t", "1", "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["value"].startswith("2.404113") and data["t"] == "1"
    assert {"error_bound", "cutoff_used"} <= set(data)


def test_eval_errors(capsys):
    assert run(capsys, "eval", "--index", "1,2")[0] == 2
    assert run(capsys, "eval", "--index", "2", "--t", "half")[0] == 2


def test_parse_errors_exit_nonzero(capsys):
    with pytest.raises(SystemExit) as info:
        cli.main(["expand", "bogus", "x", "y"])
    assert info.value.code == 2


# ---------------------------------------------------------------------------
# settings

def _settings(argv, environ):
    return cli.resolve_settings(cli.build_parser().parse_args(argv), environ)


def test_settings_precedence(tmp_path):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"seed": 5, "max_weight": 4, "tol": "1e-9"}))
    s = _settings(["verify", "--config", str(cfg)], {})
    assert (s["seed"], s["max_weight"], s["tol"]) == (5, 4, "1e-9")
    s = _settings(["verify", "--config", str(cfg)], {"TMZV_SEED": "6"})
    assert s["seed"] == 6 and s["max_weight"] == 4
    s = _settings(["verify", "--config", str(cfg), "--seed", "7"], {"TMZV_SEED": "6"})
    assert s["seed"] == 7
    s = _settings(["verify"], {"TMZV_CONFIG": str(cfg)})
    assert s["seed"] == 5
    assert _settings(["verify"], {})["seed"] == 0


def test_settings_errors(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"colour": "red"}))
    assert run(capsys, "verify", "--suite", "hyp", "--config", str(bad))[0] == 2
    assert run(capsys, "verify", "--suite", "hyp", "--max-weight", "11")[0] == 2
    assert run(capsys, "verify", "--suite", "hyp", "--precision", "32")[0] == 2
    assert run(capsys, "eval", "--index", "2", "--tol", "abc")[0] == 2


def test_run_config_guards():
    with pytest.raises(DomainError):
        verify.RunConfig(max_weight=11)
    with pytest.raises(DomainError):
        verify.RunConfig(precision_bits=53)
    with pytest.raises(DomainError):
        verify.RunConfig(tol="-1")
    assert verify.RunConfig(max_weight=3).scope("sigma_binomial") == 3


# ---------------------------------------------------------------------------
# verify

def test_verify_hyp(capsys):
    code, out, err = run(capsys, "verify", "--suite", "hyp")
    lines = out.splitlines()
    assert code == 0 and lines[0].startswith("# config")
    assert all(line.startswith("PASS") for line in lines[1:])
    assert any("pochhammer_identity" in line and "n=6" in line for line in lines)
    assert "checks passed" in err


def test_verify_algebra_weight_8(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "algebra", "--max-weight", "8", "--format", "json")
    records = [json.loads(line) for line in out.splitlines()]
    assert code == 0 and records[0]["config"]["max_weight"] == 8
    assert all(r["status"] == "pass" for r in records[1:])
    checks = {r["check"]: r for r in records[1:]}
    for kind in ("sh", "t_sh", "st", "t_st"):
        assert checks["commutative_" + kind]["cases"] >= 200
        assert checks["associative_" + kind]["cases"] >= 200
    assert checks["s_map_t_st"]["params"]["max_weight"] == 8


def test_verify_all_smoke(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "all", "--max-weight", "3", "--format", "json")
    records = [json.loads(line) for line in out.splitlines()]
    assert code == 0
    assert {r["suite"] for r in records[1:]} == set(verify.SUITES)
    for r in records[1:]:
        assert set(r) >= {"check", "params", "max_residual", "exact", "status"}


def test_seed_is_echoed_and_reports_are_deterministic(capsys, tmp_path):
    a, b = tmp_path / "a.jsonl", tmp_path / "b.jsonl"
    for path in (a, b):
        code, _, _ = run(capsys, "verify", "--suite", "hyp", "--seed", "3", "--format", "json", "--out", str(path))
        assert code == 0
    assert a.read_bytes() == b.read_bytes()
    header = json.loads(a.read_text().splitlines()[0])
    assert header["config"]["seed"] == 3


def test_failed_check_gives_exit_1(capsys, monkeypatch):
    def broken(cfg):
        def check():
            return [{"check": "always_fails", "params": {}, "max_residual": "1", "exact": True, "status": "fail"}]
        return [check]

    monkeypatch.setitem(verify.SUITE_BUILDERS, "hyp", broken)
    code, out, err = run(capsys, "verify", "--suite", "hyp")
    assert code == 1
    assert "FAIL hyp/always_fails" in out
    assert "FAILED:" in err


def test_console_script():
    proc = subprocess.run([sys.executable, "-m", "tmzv.cli", "expand", "t_sh", "x", "y"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and proc.stdout.strip() == "xy + yx - t*xx"
