"""Command-line front end: subcommands, determinism, exit codes."""

import json
from pathlib import Path

import pytest

from fractalcut.cli import main

FIXTURES = Path(__file__).parent / "fixtures"


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_gen_json(capsys):
    code, out, _ = run(capsys, "gen", "--q", "3", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["n"] == 9
    assert len(doc["edges"]) == 15


def test_gen_dot_marks_terminals(capsys):
    code, out, _ = run(capsys, "gen", "--q", "1", "--format", "dot")
    assert code == 0
    assert out.count(" -- ") == 3
    assert 'role="sigma"' in out and 'role="tau"' in out


def test_gen_dimacs_header(capsys):
    for q in (0, 2, 4):
        code, out, _ = run(capsys, "gen", "--q", str(q), "--format", "dimacs")
        assert code == 0
        assert out.splitlines()[0] == f"p edge {2 ** q + 1} {2 ** (q + 1) - 1}"


def test_solve_fpt_dag_instance(capsys, tmp_path):
    path = tmp_path / "dag.json"
    path.write_text(json.dumps({
        "problem": "dsct", "directed": True, "n": 3,
        "edges": [[0, 1], [1, 2]], "k": 1, "ell": 2}))
    code, out, _ = run(capsys, "solve", "--method", "fpt", "--input", str(path))
    assert code == 0
    doc = json.loads(out)
    assert doc["answer"] is True and doc["witness"] == []


def test_solve_methods_agree_on_fixtures(capsys):
    for name in ("lbec_a.json", "lbec_b.json", "mded_c4.json", "dsct_c3.json"):
        answers = {}
        for method in ("fpt", "brute"):
            code, out, _ = run(capsys, "solve", "--method", method,
                               "--input", str(FIXTURES / name))
            assert code == 0
            answers[method] = json.loads(out)["answer"]
        assert answers["fpt"] == answers["brute"], name


def test_compose_pads_and_writes_sidecar(capsys, tmp_path):
    prefix = tmp_path / "composed"
    code, out, _ = run(capsys, "compose", "--problem", "lbec",
                       "--inputs",
                       str(FIXTURES / "lbec_a.json"),
                       str(FIXTURES / "lbec_b.json"),
                       str(FIXTURES / "lbec_c.json"),
                       "--out", str(prefix))
    assert code == 0
    doc = json.loads(out)
    assert doc["problem"] == "lbec"
    sidecar = json.loads((tmp_path / "composed.sidecar.json").read_text())
    assert sidecar["params"]["p"] == 4  # padded from three inputs
    assert sidecar["selector"] == {str(i): i for i in range(1, 5)}
    assert (tmp_path / "composed.instance.json").read_text() == out


def test_compose_mded_requires_uncuttable_inputs(capsys):
    code, _, err = run(capsys, "compose", "--problem", "mded", "--inputs",
                       str(FIXTURES / "lbec_a.json"),
                       str(FIXTURES / "lbec_b.json"))
    assert code == 2 and "min-cut" in err
    code, out, _ = run(capsys, "compose", "--problem", "mded", "--inputs",
                       str(FIXTURES / "lbec_a.json"),
                       str(FIXTURES / "lbec_d.json"))
    assert code == 0
    assert json.loads(out)["problem"] == "mded"


def test_compose_dsct_from_dags(capsys):
    code, out, err = run(capsys, "compose", "--problem", "dsct",
                         "--inputs",
                         str(FIXTURES / "dag_a.json"),
                         str(FIXTURES / "dag_b.json"))
    assert code == 0
    doc = json.loads(out)
    assert doc["problem"] == "dsct" and doc["directed"]
    assert "costs" in doc  # weighted mode keeps the cost annotations


def test_solve_brute_on_weighted_compose_output(capsys, tmp_path):
    prefix = tmp_path / "out"
    code, _, _ = run(capsys, "compose", "--problem", "lbec", "--inputs",
                     str(FIXTURES / "lbec_a.json"),
                     str(FIXTURES / "lbec_b.json"),
                     "--out", str(prefix))
    assert code == 0
    code, out, _ = run(capsys, "solve", "--method", "brute",
                       "--input", str(tmp_path / "out.instance.json"))
    assert code == 0
    doc = json.loads(out)
    assert isinstance(doc["answer"], bool) and doc["nodes"] > 0


def test_reduce_cycle4(capsys):
    code, out, _ = run(capsys, "reduce",
                       "--vc", str(FIXTURES / "vc_cycle4.json"),
                       "--embedding", str(FIXTURES / "embedding_cycle4.json"))
    assert code == 0
    doc = json.loads(out)
    assert doc["problem"] == "lbec"
    assert doc["k"] == 4 and doc["ell"] == 14


def test_verify_reductions_suite(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "reductions")
    assert code == 0
    assert "PASS" in out and "FAIL" not in out


def test_verify_lemmas_suite_small(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "lemmas", "--q-max", "2",
                       "--samples", "500")
    assert code == 0
    assert out.count("PASS") == 7 and "FAIL" not in out


def test_verify_compositions_suite_small(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "compositions",
                       "--trials", "2")
    assert code == 0
    assert "FAIL" not in out


def test_byte_identical_reruns(capsys, tmp_path):
    invocations = [
        ("gen", "--q", "4", "--format", "json"),
        ("gen", "--q", "3", "--format", "dot"),
        ("gen", "--q", "5", "--directed", "--cost", "3", "--format", "dimacs"),
        ("solve", "--method", "brute", "--input", str(FIXTURES / "lbec_a.json")),
        ("compose", "--problem", "lbec", "--inputs",
         str(FIXTURES / "lbec_a.json"), str(FIXTURES / "lbec_b.json")),
        ("reduce", "--vc", str(FIXTURES / "vc_cycle4.json"),
         "--embedding", str(FIXTURES / "embedding_cycle4.json")),
    ]
    for argv in invocations:
        first = run(capsys, *argv)
        second = run(capsys, *argv)
        assert first == second
        assert first[0] == 0


def test_usage_errors_exit_two(capsys, tmp_path):
    bad = tmp_path / "broken.json"
    bad.write_text("{not json")
    code, _, err = run(capsys, "solve", "--method", "fpt", "--input", str(bad))
    assert code == 2 and "error" in err
    code, _, err = run(capsys, "solve", "--method", "fpt",
                       "--input", str(tmp_path / "missing.json"))
    assert code == 2
    gone = tmp_path / "notinstance.json"
    gone.write_text('{"type": "graph", "directed": false, "n": 1, "edges": []}')
    code, _, err = run(capsys, "solve", "--method", "fpt", "--input", str(gone))
    assert code == 2


def test_argparse_usage_error_exit_code():
    with pytest.raises(SystemExit) as exc:
        main(["gen"])  # missing required --q
    assert exc.value.code == 2
