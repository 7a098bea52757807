import json

import pytest

import _golden
from mvkit import cli, represent
from mvkit.errors import VerificationError

CASES = [(spec, i) for spec in _golden.corpus() for i in range(len(_golden.runs(spec)))]


def _main(argv, spec, monkeypatch, capsys):
    monkeypatch.chdir(_golden.HERE)
    code = cli.main([*argv, "--file", spec.name])
    out, err = capsys.readouterr()
    return code, out, err


def test_corpus_size():
    assert len(_golden.corpus()) >= 15


@pytest.mark.parametrize("spec,i", CASES, ids=[f"{s.stem}-{i}" for s, i in CASES])
def test_golden_report(spec, i, monkeypatch, capsys):
    argv, code = _golden.runs(spec)[i]
    expected = json.loads((_golden.HERE / "expected" / (spec.stem + ".json")).read_text())[i]
    got_code, out, err = _main(argv, spec, monkeypatch, capsys)
    assert got_code == code == expected["exit"]
    assert out == expected["stdout"]
    if code == 2:
        assert out == "" and err


def test_classify_chang_flags(monkeypatch, capsys):
    spec = _golden.HERE / "02_chang.mv"
    code, out, _ = _main(["classify", "C"], spec, monkeypatch, capsys)
    r = json.loads(out)["results"]
    assert code == 0
    assert r["is_chain"] and r["is_local"] and r["is_perfect"]
    assert not r["is_simple"] and not r["is_semisimple"]


def test_ideals_of_product(monkeypatch, capsys):
    spec = _golden.HERE / "03_product.mv"
    _, out, _ = _main(["ideals", "B"], spec, monkeypatch, capsys)
    r = json.loads(out)["results"]
    assert (r["count"], r["maximal_count"]) == (4, 2)


def test_separate_without_file(capsys):
    assert cli.main(["separate", "1/3", "2/3"]) == 0
    r = json.loads(capsys.readouterr().out)["results"]
    assert r["evaluations"] == "phi(1/3)=0, phi(2/3)=1"
    assert r["term"] == "((x * x) + (x * x)) + ((x * x) + (x * x))"


def test_report_fields(monkeypatch, capsys):
    spec = _golden.HERE / "04_komori.mv"
    _, out, _ = _main(["local-rep", "K", "--samples", "50", "--seed", "3"], spec,
                      monkeypatch, capsys)
    rep = json.loads(out)
    assert set(rep) == {"command", "args", "inputs", "results", "verification", "surrogate"}
    assert rep["verification"]["seed"] == 3 and rep["verification"]["samples"] == 50
    assert rep["surrogate"]["depth"] == 2


def test_verification_failure_exits_one(monkeypatch, capsys):
    def broken(*a, **k):
        raise VerificationError("map is not injective", {"x": "(0, 1)"})

    monkeypatch.setattr(represent, "chang_embedding", broken)
    spec = _golden.HERE / "03_product.mv"
    code, out, err = _main(["embed-chang", "B"], spec, monkeypatch, capsys)
    assert code == 1
    rep = json.loads(out)
    assert rep["error"]["witness"] == {"x": "(0, 1)"}
    assert "verification failed" in err


def test_usage_errors(capsys):
    assert cli.main(["classify"]) == 2
    assert cli.main(["classify", "A"]) == 2
    with pytest.raises(SystemExit) as info:
        cli.main(["no-such-command"])
    assert info.value.code == 2
    assert cli.main(["classify", "A", "--file", "/nonexistent/x.mv"]) == 2
