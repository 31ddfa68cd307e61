import json

from nilcomm.cli import main


def run(capsys, *args):
    code = main(list(args))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_enumerate(capsys):
    code, out, _ = run(capsys, "enumerate", "AI", "3")
    assert code == 0
    assert out.splitlines() == ["3", "2,1", "1,1,1"]


def test_enumerate_signature(capsys):
    code, out, _ = run(capsys, "enumerate", "BDI", "5", "3", "2")
    assert code == 0
    assert "aba/a/b" in out.splitlines()


def test_invariants_text_and_json(capsys):
    code, out, _ = run(capsys, "invariants", "AI", "2,1")
    assert code == 0
    assert "defect: 1" in out
    code, out, _ = run(capsys, "--format", "json", "invariants", "AI", "2,1")
    record = json.loads(out)
    assert record == {
        "defect": 1,
        "dim_p_cent": 3,
        "dim_orbit": 2,
        "dim_p0": 1,
        "distinguished": False,
        "almost": True,
        "component_dim": 4,
    }


def test_reduce(capsys):
    code, out, _ = run(capsys, "reduce", "BDI", "aba/a/b")
    assert code == 0 and out.strip() == "ababa"
    code, out, _ = run(capsys, "reduce", "BDI", "ababa/aba/bab/a")
    assert code == 0 and out.strip() == "none"


def test_components(capsys):
    code, out, _ = run(capsys, "components", "AI", "5")
    assert code == 0
    assert "component count: 1" in out
    code, out, _ = run(capsys, "--format", "json", "components", "AI", "6")
    data = json.loads(out)
    assert data["count_max"] == 2
    assert data["unresolved"][0]["orbit"] == "4,2"


def test_exceptional(capsys):
    code, out, _ = run(capsys, "exceptional", "EIV")
    assert code == 0
    assert "components (1)" in out
    code, out, _ = run(capsys, "--format", "json", "exceptional", "EI")
    data = json.loads(out)
    assert data["count_min"] == 4 and data["count_max"] == 6


def test_closure_graph_dot_and_json(capsys):
    code, out, _ = run(capsys, "closure-graph", "AI", "4")
    assert code == 0 and out.startswith("digraph")
    code, out, _ = run(capsys, "--format", "json", "closure-graph", "AI", "4")
    data = json.loads(out)
    assert len(data["vertices"]) == 5


def test_selflarge_single_and_enumeration(capsys):
    code, out, _ = run(capsys, "selflarge", "AI", "3,1")
    assert code == 0 and "True" in out
    code, out, _ = run(capsys, "selflarge", "AI", "4")
    assert code == 0
    assert len(out.splitlines()) == 5  # all partitions of 4


def test_usage_errors(capsys):
    assert run(capsys, "enumerate", "XX", "3")[0] == 2
    assert run(capsys, "invariants", "AI", "abc")[0] == 2
    assert run(capsys, "enumerate", "AI")[0] == 2


def test_bound_respected(capsys):
    code, _, err = run(capsys, "--bound", "4", "enumerate", "AI", "5")
    assert code == 2 and "bound" in err


def test_verify_small(capsys):
    code, out, _ = run(capsys, "verify", "--cert-bound", "4")
    assert code == 0
    assert "PASS" in out
    # idempotent
    code2, out2, _ = run(capsys, "verify", "--cert-bound", "4")
    assert code2 == 0 and out2 == out


def test_config_file(capsys, tmp_path, monkeypatch):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"format": "json", "bound": 10}))
    monkeypatch.setenv("NILCOMM_CONFIG", str(cfg))
    code, out, _ = run(capsys, "invariants", "AI", "2,1")
    assert code == 0
    assert json.loads(out)["defect"] == 1
