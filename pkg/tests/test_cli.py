import json

import pytest

from affverma.cli import main
from affverma.experiments import ConfigInvalid, ExperimentConfig, harish_chandra_count


def _report(tmp_path, name, cfg, *extra):
    c = tmp_path / f"{name}.json"
    c.write_text(json.dumps(cfg))
    out = tmp_path / f"{name}-report.json"
    code = main([name, "--config", str(c), "--out", str(out), *extra])
    return code, json.loads(out.read_text())


def test_empty_config(tmp_path):
    c = tmp_path / "empty.json"
    c.write_text("{}")
    assert main(["torus", "--config", str(c)]) == 2
    with pytest.raises(ConfigInvalid):
        ExperimentConfig.from_dict({}, "torus")


@pytest.mark.parametrize("bad", [{"p": 4}, {"p": 2}, {"type": "E8"}, {"N": 0}, {"bogus": 1}])
def test_invalid_configs(bad):
    with pytest.raises(ConfigInvalid):
        ExperimentConfig.from_dict(bad, "center")


def test_torus_report(tmp_path):
    code, rep = _report(tmp_path, "torus", {"type": "A2", "p": 5, "n": 1, "mu_box": 3})
    assert code == 0 and rep["schema"] == 1 and rep["pass"]
    checks = rep["experiments"][0]["checks"]
    eig = [c for c in checks if c["statement_id"] == "torus-eigenvalue"]
    assert len(eig) == 16 and all(c["pass"] for c in eig)
    assert all(isinstance(v, str) for c in eig for v in c["witnesses"]["eigenvalues"])


def test_center_report(tmp_path):
    code, rep = _report(tmp_path, "center", {"type": "A1", "D": 4})
    assert code == 0
    dim = [c for c in rep["experiments"][0]["checks"] if c["statement_id"] == "center-dimension"][0]
    assert dim["witnesses"]["dimension"] == 3 and len(dim["witnesses"]["basis"]) == 3
    assert dim["witnesses"]["basis"][1] == "(2)*h1 + (1)*h1^2 + (4)*f[1]*e[1]"


def test_harish_chandra_count():
    assert [harish_chandra_count(("A", 1), D) for D in (1, 2, 4, 6)] == [1, 2, 3, 4]
    assert [harish_chandra_count(("A", 2), D) for D in (2, 3, 4)] == [2, 3, 4]


def test_determinism(tmp_path):
    cfg = {"samples": 5, "seed": 3}
    _, a = _report(tmp_path, "grid", cfg)
    _, b = _report(tmp_path, "grid", cfg)
    for r in (a, b):
        r.pop("wall_clock_seconds")
        for e in r["experiments"]:
            e.pop("wall_clock_seconds")
    assert a == b


@pytest.mark.parametrize("name", ["rootdata", "lie-check", "grid", "injectivity", "faithfulness", "smash", "verma"])
def test_subcommands_pass(tmp_path, name, capsys):
    out = tmp_path / "r.json"
    assert main([name, "--out", str(out), "--seed", "1"]) == 0
    assert json.loads(out.read_text())["pass"]
    assert "FAIL" not in capsys.readouterr().err


def test_pbw_props_reports_literal_vanishing_clause(tmp_path):
    out = tmp_path / "r.json"
    code = main(["pbw-props", "--out", str(out)])
    rep = json.loads(out.read_text())
    failing = {c["statement_id"] for c in rep["experiments"][0]["checks"] if not c["pass"]}
    assert failing == {"divided-power-vanishing-deg-plus-one"} and code == 1


def test_all_with_config_list(tmp_path):
    c = tmp_path / "all.json"
    c.write_text(json.dumps([{"experiment": "rootdata", "type": "G2"}, {"experiment": "grid", "samples": 3}]))
    out = tmp_path / "r.json"
    assert main(["all", "--config", str(c), "--out", str(out), "--jobs", "2"]) == 0
    rep = json.loads(out.read_text())
    assert [e["experiment"] for e in rep["experiments"]] == ["rootdata", "grid"]
