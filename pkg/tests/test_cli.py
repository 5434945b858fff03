"""Command-line interface: worked examples, exit codes, output formats."""

import json

import pytest

from wsys.cli import run


def out_of(capsys):
    captured = capsys.readouterr()
    return captured.out.strip().splitlines()


def test_wgl_worked_example(capsys):
    assert run(["wgl", "--perm", "(1 3 2)"]) == 0
    assert out_of(capsys) == ["C3 + C1^2 - N*C2"]


def test_wgl_one_line_form(capsys):
    assert run(["wgl", "--perm", "2,3,1"]) == 0
    assert out_of(capsys) == ["C3"]


def test_faces(capsys):
    assert run(["faces", "--perm", "(1 3)(2 4)"]) == 0
    assert out_of(capsys) == ["cycles=2 faces=1"]


def test_feps(capsys):
    assert run(["feps", "--perm", "(1 2)"]) == 0
    assert out_of(capsys) == ["N + 2*eps + N*eps^2"]
    assert run(["feps", "--perm", "(1 3)(2 4)", "--in-v"]) == 0
    assert out_of(capsys) == ["1 + 2*N*v + v^2"]
    assert run(["feps", "--perm", "(1 3)(2 4)", "--direct"]) == 0
    assert out_of(capsys)[0].startswith("1 + 4*N*eps")


def test_interlace_graph_example(capsys):
    assert run(["interlace", "--graph", "n=3; edges=1-2,1-3,2-3"]) == 0
    assert out_of(capsys) == ["4 + 4*x"]


def test_interlace_shifted(capsys):
    assert run(["interlace", "--graph", "n=3; edges=1-2,1-3,2-3", "--shifted"]) == 0
    assert out_of(capsys) == ["4*x"]
    # the shift makes no sense for the rational-function form
    assert run(["interlace", "--perm", "(1 3)(2 4)", "--shifted"]) == 2


def test_interlace_perm_and_dmat(capsys):
    assert run(["interlace", "--perm", "(1 4)(2 5)(3 6)"]) == 0
    assert out_of(capsys) == ["4*z^2"]
    assert run(["interlace", "--dmat", "E=2; phi={},{1,2}"]) == 0
    assert out_of(capsys) == ["2 + 2*x"]


def test_skewchar(capsys):
    from wsys.algebra import poly_to_string
    from wsys.graphs import graph_parse
    from wsys.invariants import refined_skew_char_graph

    assert run(["skewchar", "--graph", "n=2; edges=1-2"]) == 0
    assert out_of(capsys) == ["1 + u^2"]
    expected = poly_to_string(refined_skew_char_graph(graph_parse("n=2; edges=1-2")))
    assert run(["skewchar", "--graph", "n=2; edges=1-2", "--refined"]) == 0
    assert out_of(capsys) == [expected]
    # interlaced pair of chords: intersection graph is a single edge
    assert run(["skewchar", "--perm", "(1 3)(2 4)"]) == 0
    assert out_of(capsys) == ["1 + u^2"]


def test_dmat_verbs(capsys):
    assert run(["dmat", "--graph", "n=3; edges=1-2,1-3,2-3"]) == 0
    assert out_of(capsys) == ["E=3; phi={},{1,2},{1,3},{2,3}"]
    assert run(["dmat", "--graph", "n=2; edges=1-2", "--dual", "{1}"]) == 0
    assert out_of(capsys) == ["E=2; phi={1},{2}"]
    assert run(["dmat", "--perm", "(1 3)(2 4)", "--distance", "{1,2}"]) == 0
    assert out_of(capsys) == ["distance=0"]


def test_pivot_worked_example(capsys):
    assert run(
        ["pivot", "--perm", "3,5,6,7,2,8,4,9,1", "--a", "2,5", "--b", "4,7"]
    ) == 0
    assert out_of(capsys) == ["6,5,8,7,2,3,4,9,1"]


def test_pivot_graph(capsys):
    assert run(["pivot", "--graph", "n=2; edges=1-2", "--a", "1", "--b", "2"]) == 0
    assert out_of(capsys) == ["n=2; edges=1-2"]


def test_series_worked_examples(capsys):
    assert run(["series", "--perm", "(1,2,3)", "--order", "7"]) == 0
    lines = out_of(capsys)
    assert lines[-1] == "2z^2+5z^3+7z^4+7z^5+8z^6+9z^7"
    assert run(["series", "--perm", "(1,3,2)", "--order", "7"]) == 0
    assert out_of(capsys)[-1] == "4z^2+5z^3+6z^4+7z^5+8z^6+9z^7"
    assert run(["series", "--perm", "()", "--order", "5"]) == 0
    assert out_of(capsys)[-1] == "1"


def test_series_negative_coefficients(capsys):
    assert run(["series", "--perm", "1", "--order", "3"]) == 0
    assert out_of(capsys)[-1] == "-z"


def test_parse_error_exit_code(capsys):
    assert run(["wgl", "--perm", "1,1,2"]) == 1
    assert run(["wgl", "--perm", "(1 2"]) == 1
    assert run(["dmat", "--dmat", "E=x; phi={}"]) == 1


def test_usage_error_exit_code(capsys):
    # argparse-level problems map onto the parse-error exit code
    assert run([]) == 1
    assert run(["wgl"]) == 1
    assert run(["no-such-verb"]) == 1


def test_domain_error_exit_code(capsys):
    # feps over a cap that the reduction cannot respect
    assert run(["wgl", "--perm", "(1 2 3 4)", "--cap", "3"]) == 2
    # unknown verification suite
    assert run(["verify", "no-such-suite"]) == 2
    # chord-diagram-only form requested for a non-diagram
    assert run(["feps", "--perm", "(1 2 3)", "--in-v"]) == 2


def test_verify_single_suite(capsys):
    assert run(["verify", "tsr", "--max-m", "4"]) == 0
    lines = out_of(capsys)
    assert lines[0].startswith("tsr: PASS (")
    assert lines[-1] == "1/1 suites passed"


def test_verify_json(capsys):
    assert run(["verify", "tsr", "casimir-N", "--max-m", "4", "--json"]) == 0
    payload = json.loads("\n".join(out_of(capsys)))
    assert payload["passed"] is True
    assert [r["suite"] for r in payload["reports"]] == ["tsr", "casimir-N"]
    assert all(r["passed"] for r in payload["reports"])


def test_verify_failure_exit_code(monkeypatch, capsys):
    # a failing suite must drive the battery exit code to 3
    import wsys.verify as verify_mod

    def always_fails():
        return verify_mod.VerifySuiteReport("always-fails", 1, ["counterexample"])

    monkeypatch.setitem(verify_mod.SUITES, "always-fails", always_fails)
    assert run(["verify", "always-fails"]) == 3
    lines = out_of(capsys)
    assert lines[0].startswith("always-fails: FAIL")
    assert lines[-1] == "0/1 suites passed"


def test_verify_determinism(capsys):
    assert run(["verify", "tfe", "--max-m", "3", "--samples", "2", "--seed", "5"]) == 0
    first = out_of(capsys)
    assert run(["verify", "tfe", "--max-m", "3", "--samples", "2", "--seed", "5"]) == 0
    second = out_of(capsys)
    # wall-clock seconds differ between runs; compare everything else
    strip = lambda lines: [ln for ln in lines if not ln.startswith("tfe: PASS")]
    assert strip(first) == strip(second)
    assert first[0].startswith("tfe: PASS (12 instances")
