import json

import pytest

from shafdec.cli import run


def write_model(tmp_path, name, data):
    path = tmp_path / name
    path.write_text(json.dumps(data))
    return str(path)


@pytest.fixture
def curve(tmp_path):
    return write_model(tmp_path, "m.json", {"genus": 1, "P": ["0", "-1", "0", "1"], "Q": []})


@pytest.fixture
def genus2(tmp_path):
    # (x+1)(x+2)(x+3)(x+4)(x+5)
    return write_model(tmp_path, "g2.json", {"genus": 2, "P": ["120", "274", "225", "85", "15", "1"]})


def json_out(capsys, argv):
    assert run(argv + ["--json"]) == 0
    return json.loads(capsys.readouterr().out)


def test_analyze(capsys, curve):
    data = json_out(capsys, ["analyze", "--model", curve, "--primes", "2"])
    assert data["reduction"]["discriminant"] == "64"
    assert data["reduction"]["good_outside_s"] is True
    assert data["weierstrass"]["total"] == 4
    assert data["o_s_principal"] is True
    assert run(["analyze", "--model", curve, "--primes", "2"]) == 0
    assert "good outside S" in capsys.readouterr().out


def test_decompose(capsys, genus2):
    data = json_out(capsys, ["decompose", "--model", genus2, "--primes", "2,3,5,7"])
    assert data["internal_nodes"] == 1 and data["leaves"] == 2
    assert data["tree"]["fiber"]["g3"] == 4
    assert run(["decompose", "--model", genus2, "--primes", "2,3,5,7", "--pretty"]) == 0
    assert "fiber product genus 4" in capsys.readouterr().out


def test_enumerate(capsys, tmp_path):
    data = json_out(capsys, ["enumerate", "--genus", "1", "--primes", "2", "--bound", "10"])
    assert data["count"] == 1
    out = tmp_path / "out.json"
    assert run(["enumerate", "--genus", "2", "--primes", "2", "--bound", "10", "--json", str(out)]) == 0
    assert json.loads(out.read_text())["count"] == 0


def test_fiber_genus(capsys):
    data = json_out(capsys, ["fiber-genus", '["-6","11","-6","1"]', '["0","-25","0","1"]'])
    assert data["g3"] == 4 and data["branch_points"]["X3"]["count"] == 7


def test_reduce(capsys, curve):
    assert json_out(capsys, ["reduce", "--model", curve, "--prime", "5"])["bijection"] is True


def test_domain_error_exit_code(capsys, curve, tmp_path):
    assert run(["analyze", "--model", curve, "--primes", "3"]) == 1
    err = json.loads(capsys.readouterr().err)
    assert err["error"] == "MissingPrimeTwo"
    bad = write_model(tmp_path, "bad.json", {"genus": 1, "P": ["0", "0", "1", "1"]})
    assert run(["analyze", "--model", bad, "--primes", "2"]) == 1
    assert json.loads(capsys.readouterr().err)["error"] == "NonSquarefree"
    assert run(["reduce", "--model", curve, "--prime", "2"]) == 1
    assert json.loads(capsys.readouterr().err)["error"] == "BadPrime"
    assert run(["fiber-genus", '["1","1"]', '["1","1"]']) == 1
    assert json.loads(capsys.readouterr().err)["error"] == "NotCoprime"


@pytest.mark.parametrize(
    "argv, flag",
    [
        (["analyze", "--model", "m.json", "--primes", "2,6"], "--primes"),
        (["enumerate", "--genus", "1", "--primes", "2", "--bound", "-1"], "--bound"),
        (["enumerate", "--genus", "1", "--primes", "2"], "--bound"),
        (["analyze", "--model", "/nonexistent.json", "--primes", "2"], "--model"),
        (["fiber-genus", "[1.5]", "[1]"], "R1"),
        (["nonsense"], "invalid choice"),
    ],
)
def test_usage_errors(capsys, argv, flag):
    assert run(argv) == 2
    assert flag in capsys.readouterr().err


@pytest.mark.parametrize("cmd", ["analyze", "decompose"])
def test_json_roundtrip(capsys, tmp_path, genus2, cmd):
    argv = [cmd, "--model", genus2, "--primes", "2,3,5,7", "--json"]
    assert run(argv) == 0
    first = capsys.readouterr().out
    data = json.loads(first)
    model = data["model"] if cmd == "analyze" else data["tree"]["model"]
    again = write_model(tmp_path, "again.json", model)
    assert run([cmd, "--model", again, "--primes", "2,3,5,7", "--json"]) == 0
    assert capsys.readouterr().out == first


def test_emitted_output_is_accepted_as_model(capsys, tmp_path, curve):
    assert run(["analyze", "--model", curve, "--primes", "2", "--json"]) == 0
    out = write_model(tmp_path, "report.json", json.loads(capsys.readouterr().out))
    assert run(["analyze", "--model", out, "--primes", "2"]) == 0
