import json

import pytest

from wfcomb.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_dual_subcommand(capsys):
    code, out, _ = run(capsys, "dual", "--kind", "symp", "--lambda", "2,2")
    assert code == 0
    payload = json.loads(out)
    assert payload["dual"] == "3,1,1"
    assert payload["sp"] == "2,2"
    assert all(payload["checks"].values())
    assert payload["config"]["lam"] == "2,2"


def test_dual_rejects_wrong_class(capsys):
    code, out, err = run(capsys, "dual", "--kind", "symp", "--lambda", "2,1")
    assert code == 1 and not out
    payload = json.loads(err)
    assert payload["error"] == "DomainError"


def test_partition_subcommand(capsys):
    code, out, _ = run(capsys, "partition", "--lambda", "3,1,1", "--kind", "orth-odd")
    assert code == 0
    payload = json.loads(out)
    assert payload["size"] == 5
    assert payload["classes"]["orth-odd-special"] is True
    assert payload["intervals"][0]["j_min"] is None


def test_symbol_subcommand(capsys):
    code, out, _ = run(capsys, "symbol", "--symbol", "X=5,2,0;Y=3,0")
    assert code == 0
    payload = json.loads(out)
    assert payload["rank"] == 6 and payload["defect"] == 1
    assert payload["bipartition"] == {"alpha": "3,1", "beta": "2"}


def test_springer_subcommand(capsys):
    code, out, _ = run(
        capsys, "springer", "--kind", "orth-odd", "--lambda", "3,1,1", "--eps", "3=1,1=-1"
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["k"] == 1
    assert payload["sp"] == "3,1,1"
    assert payload["symbol"]["rank"] == 2


def test_decompose_subcommand(capsys):
    code, out, _ = run(capsys, "decompose", "--lambda", "2,2", "--tau", "2=1")
    assert code == 0
    payload = json.loads(out)
    assert payload["lambda1"] == "1,1" and payload["lambda2"] == "1,1"
    assert payload["dual_union"] == "3,1,1"
    assert payload["checks"] == {"regular": True, "dual_union": True, "tau_match": True}


def test_wavefront_subcommand(capsys):
    code, out, _ = run(
        capsys, "wavefront", "--lp", "2", "--ep", "2=1", "--lm", "2", "--em", "2=-1"
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["form"] == "an" and payload["dual"] == "3,1,1"
    assert payload["mu1"] == "3" and payload["mu2"] == "1,1"


def test_enumerate_subcommand(capsys):
    code, out, _ = run(capsys, "enumerate", "--what", "class", "--n", "5", "--kind", "orth-odd")
    assert code == 0
    payload = json.loads(out)
    assert payload["count"] == 4
    code, out, _ = run(capsys, "enumerate", "--what", "partitions", "--n", "4")
    assert json.loads(out)["count"] == 5


def test_induce_subcommands(capsys):
    code, out, _ = run(
        capsys, "induce", "--shape", "1,1", "--parts", "1;1,1,1"
    )
    assert code == 0 and json.loads(out)["induced"] == "3,1,1"
    code, out, _ = run(capsys, "induce", "--l1", "2", "--l2", "1,1")
    payload = json.loads(out)
    assert payload["induced"] == "4" and payload["regular"] is True


def test_verify_subcommand(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "partitions", "--max-n", "4")
    assert code == 0
    payload = json.loads(out)
    assert payload["ok"] is True
    assert payload["suites"][0]["failures"] == []


def test_verify_env_default(monkeypatch, capsys):
    monkeypatch.setenv("WFCOMB_MAX_N", "3")
    code, out, _ = run(capsys, "verify", "--suite", "partitions")
    assert code == 0
    assert json.loads(out)["suites"][0]["bound"] == 3


def test_text_and_csv_formats(capsys):
    code, out, _ = run(capsys, "--format", "text", "dual", "--kind", "symp", "--lambda", "2,2")
    assert code == 0 and "dual: 3,1,1" in out
    code, out, _ = run(capsys, "--format", "csv", "dual", "--kind", "symp", "--lambda", "2,2")
    assert out.splitlines()[0] == "key,value"
    assert 'dual,"3,1,1"' in out.splitlines()  # comma-bearing values are quoted


def test_unknown_flag_rejected(capsys):
    with pytest.raises(SystemExit):
        main(["dual", "--kind", "symp", "--lambda", "2,2", "--bogus"])
