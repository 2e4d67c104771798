from __future__ import annotations

import json

import pytest

from affinetl import diagrams as dg
from affinetl.center import GluingReport
from affinetl.cli import CliConfig, UsageError, main, parse_q
from affinetl.linalg import LaurentMatrix
from affinetl.render import to_svg, to_text


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_compose_identity_and_cup_cap(capsys, tmp_path):
    code, out, _ = run(capsys, "compose", "id:3", "id:3")
    assert code == 0 and "loops: 0" in out
    f = tmp_path / "e.json"
    f.write_text(json.dumps(dg.cup_cap(2, 1).to_json()))
    code, out, _ = run(capsys, "compose", str(f), str(f), "--output", "json")
    obj = json.loads(out)
    assert code == 0 and obj["loops"] == 1
    assert dg.AffineDiagram.from_json(obj["diagram"]) == dg.cup_cap(2, 1)


def test_compose_twist_with_standard(capsys):
    code, out, _ = run(capsys, "compose", "twist:3", "std:1:3:1", "--output", "json")
    obj = json.loads(out)
    assert code == 0 and obj["loops"] == 0
    expected = dg.compose(dg.twist(3), dg.enumerate_standard(1, 3)[0]).diagram
    assert dg.AffineDiagram.from_json(obj["diagram"]) == expected


def test_compose_errors(capsys):
    assert run(capsys, "compose", "id:3", "id:2")[0] == 2
    assert run(capsys, "compose", "id:3", "{not json")[0] == 2
    assert run(capsys, "compose", "std:1:3:9", "id:1")[0] == 2


def test_multiply(capsys):
    code, out, _ = run(capsys, "multiply", "cupcap:2:1", "cupcap:2:1", "--output", "json")
    obj = json.loads(out)
    assert code == 0 and len(obj["terms"]) == 1
    assert obj["terms"][0]["coeff"]["coeffs"]["0"] == {"var": "q", "coeffs": {"-1": "-1", "1": "-1"}}


def test_gram(capsys):
    code, out, _ = run(capsys, "gram", "--N", "3", "--k", "1")
    assert code == 0 and "x^-1" in out and out.count("[") == 3
    code, out, _ = run(capsys, "gram", "--N", "2", "--k", "0", "--output", "json")
    M = LaurentMatrix.from_json(json.loads(out))
    assert M.shape == (2, 2) and str(M[0, 1]) == "x + x^-1"
    assert run(capsys, "gram", "--N", "3", "--k", "2")[0] == 2


def test_verify_det(capsys):
    code, out, _ = run(capsys, "verify-det", "--N", "3")
    assert code == 0 and out.split("\n")[0].split() == ["k=", "1", "d_k=", "3", "det", "R_k", "=", "+G_k"]
    assert out.split("\n")[1].split()[:2] == ["k=", "3"]
    code, out, _ = run(capsys, "verify-det", "--N", "2", "--output", "json")
    assert code == 0 and json.loads(out) == {"N": 2, "signs": [{"k": 0, "d_k": 2, "sign": -1},
                                                                  {"k": 2, "d_k": 1, "sign": 1}]}


def test_action(capsys):
    code, out, _ = run(capsys, "action", "twist:3", "--k", "1")
    assert code == 0 and out.split() == "[ 0 0 1 ] [ x 0 0 ] [ 0 1 0 ]".split()
    code, out, _ = run(capsys, "action", "twist:3", "--k", "1", "--mode", "rational", "--q", "2")
    assert code == 0


def test_ideal_element(capsys):
    code, out, _ = run(capsys, "ideal-element", "--N", "3", "--r", "1", "--seed", "4")
    assert code == 0 and out.count("ok") == 2
    code, _, _ = run(capsys, "ideal-element", "--N", "3", "--r", "1", "--mode", "numeric", "--q", "2")
    assert code == 2


def test_poly(capsys):
    assert run(capsys, "poly", "g", "--N", "3", "--k", "1")[1].strip() == "x^2 + (-q^3 - q^-3) + x^-2"
    assert run(capsys, "poly", "h", "--N", "4", "--k", "2")[1].strip() == "x + (-q^4 - q^-4) + x^-1"
    code, out, _ = run(capsys, "poly", "p", "--N", "2", "--k", "0", "--mode", "rational", "--q", "2")
    assert code == 0 and out.strip() == "x^2 - 17/4 + x^-2"


def test_gluing_negative_q(capsys):
    code, out, _ = run(capsys, "gluing", "--N", "3", "--q", "-1,0", "--output", "json")
    assert code == 0
    rep = GluingReport.from_json(json.loads(out))
    assert rep.component_count == 2 and len(rep.confirmed) == 2
    zs = sorted((round(a.z.imag), round(b.z.imag)) for a, b in rep.confirmed)
    assert zs == [(-1, 1), (1, -1)]


def test_gluing_q_one_and_four(capsys):
    code, out, _ = run(capsys, "gluing", "--N", "3", "--q=1,0", "--output", "json")
    rep = GluingReport.from_json(json.loads(out))
    assert sorted(round(a.z.real) for a, _ in rep.confirmed) == [-1, 1]
    code, out, _ = run(capsys, "gluing", "--N", "3", "--q", "4,0", "--output", "json")
    assert len(json.loads(out)["confirmed"]) == 4
    code, out, _ = run(capsys, "gluing", "--N", "4", "--q", "4", "--output", "json")
    assert json.loads(out)["confirmed"] == "N != 3: candidates only"
    assert run(capsys, "gluing", "--N", "3", "--q", "0,0")[0] == 2
    assert run(capsys, "gluing", "--N", "3")[0] == 2


def test_render(capsys, tmp_path):
    code, out, _ = run(capsys, "render", "twist:3", "--format", "svg")
    assert code == 0 and out == to_svg(dg.twist(3), str(dg.twist(3)))
    assert 'stroke-dasharray="6 4"' in out
    code, out, _ = run(capsys, "render", "std:1:3:2", "--format", "text")
    assert out.strip() == to_text(dg.enumerate_standard(1, 3)[1])
    target = tmp_path / "b.svg"
    assert run(capsys, "render", "id:3", "--out", str(target))[0] == 0
    assert target.read_text().count("<path") == 9


def test_selftest(capsys):
    code, out, _ = run(capsys, "selftest")
    assert code == 0 and "FAIL" not in out


def test_config_file(capsys, tmp_path):
    cfg = tmp_path / "c.toml"
    cfg.write_text('mode = "rational"\nq = "3"\noutput = "json"\n')
    code, out, _ = run(capsys, "poly", "g", "--N", "3", "--k", "1", "--config", str(cfg))
    assert code == 0 and json.loads(out) == {"var": "x", "coeffs": {"-2": "1", "0": "-730/27", "2": "1"}}
    # flags override the file
    code, out, _ = run(capsys, "poly", "g", "--N", "3", "--k", "1", "--config", str(cfg), "--output", "text")
    assert out.strip() == "x^2 - 730/27 + x^-2"
    bad = tmp_path / "bad.toml"
    bad.write_text("mode = ")
    assert run(capsys, "poly", "g", "--N", "3", "--k", "1", "--config", str(bad))[0] == 2


def test_deterministic_outputs(capsys):
    a = run(capsys, "ideal-element", "--N", "2", "--r", "0", "--seed", "7", "--output", "json")
    b = run(capsys, "ideal-element", "--N", "2", "--r", "0", "--seed", "7", "--output", "json")
    assert a == b and a[0] == 0


def test_usage_errors(capsys):
    assert run(capsys)[0] == 2
    assert run(capsys, "nonsense")[0] == 2
    assert run(capsys, "gram", "--N", "3")[0] == 2


def test_config_validation():
    with pytest.raises(UsageError):
        CliConfig(mode="numeric")
    with pytest.raises(UsageError):
        CliConfig(tol=0)
    assert parse_q("-1,0", "numeric") == -1
    assert parse_q("1/2", "rational") == 0.5
    with pytest.raises(UsageError):
        parse_q("1,1", "rational")
