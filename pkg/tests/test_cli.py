import json

import pytest

from kostroot.cli import main, parse_args, UsageError


def run(argv, capsys):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_parse_args():
    args = parse_args(["roots", "--algebra", "D(2,1;a)"])
    assert (args.command, args.algebra) == ("roots", "D(2,1;a)")
    args = parse_args(["verify", "--claim", "thm3i", "--algebra", "F4"])
    assert args.claim == "thm3i" and args.algebra == ["F4"]
    with pytest.raises(UsageError):
        parse_args(["frobnicate"])


def test_sl22_is_a_usage_error(capsys):
    code, out, err = run(["roots", "--algebra", "sl(2|2)"], capsys)
    assert code == 2 and not out
    assert "gl(2|2)" in err


def test_unknown_option(capsys):
    code, _, err = run(["roots", "--algebra", "A2", "--bogus"], capsys)
    assert code == 2 and "bogus" in err


def test_roots_json_gl11(capsys):
    code, out, _ = run(["roots", "--algebra", "gl(1|1)", "--format", "json"], capsys)
    data = json.loads(out)
    assert code == 0 and len(data["roots"]) == 2
    assert data["family"] == "gl" and data["roots"][0]["coords"] == ["-1/1", "1/1"]


def test_bases_json_and_classes(capsys):
    code, out, _ = run(["bases", "--algebra", "G3", "--up-to-weyl", "--format", "json"], capsys)
    assert code == 0 and len(json.loads(out)) == 4
    code, out, _ = run(["bases", "--algebra", "D(2,1;a)", "--up-to-weyl", "--permutations"], capsys)
    assert out.startswith("D(2,1;a): 2 W-classes")


def test_kostant_json(capsys):
    code, out, _ = run(["kostant", "--algebra", "D(2,1;a)", "--base", "0", "--collapse", "0", "--format", "json"], capsys)
    data = json.loads(out)
    assert code == 0 and set(data) == {"R", "fibers", "centralizer"}
    assert len(data["R"]) == 8 and len(data["centralizer"]) == 2


def test_kostant_tuple_collapse(capsys):
    code, out, _ = run(["kostant", "--algebra", "sl(2|1)", "--collapse", "(1,-1,0)"], capsys)
    assert code == 0 and "2 Kostant roots" in out
    code, _, err = run(["kostant", "--algebra", "sl(2|1)", "--collapse", "(1,1,0)"], capsys)
    assert code == 2 and "not a root" in err
    code, _, err = run(["kostant", "--algebra", "sl(2|1)", "--collapse", "0"], capsys)
    assert code == 2 and "--base" in err


def test_graph_errors(capsys):
    code, _, err = run(["graph", "--algebra", "A2", "--toral", "(1,0,-1)", "--fiber", "3"], capsys)
    assert code == 2 and "Kostant root" in err
    code, _, err = run(["graph", "--algebra", "A2", "--fiber", "1"], capsys)
    assert code == 2


def test_toral_graph_json(capsys):
    code, out, _ = run(["graph", "--algebra", "A2", "--toral", "(1,0,-1)", "--fiber", "1", "--format", "json"], capsys)
    data = json.loads(out)
    assert code == 0 and len(data["vertices"]) == 2 and data["edges"] == [] and not data["connected"]


def test_verify_text_and_json(capsys):
    code, out, _ = run(["verify", "--claim", "rem54"], capsys)
    assert code == 0 and "reducible, as expected" in out and out.rstrip().endswith("PASS")
    code, out, _ = run(["verify", "--claim", "thm3ii", "--algebra", "osp(3|2)", "--format", "json"], capsys)
    data = json.loads(out)
    assert code == 0 and data["passed"] and data["reports"][0]["algebra"] == "osp(3|2)"


def test_verify_failure_exit_code(capsys, monkeypatch):
    from kostroot import theorems as T

    def broken(claim, algebras, bound):
        r = T.VerificationReport(claim, "x")
        r.fail(reason="forced")
        return [r]

    monkeypatch.setattr(T, "run_claim", broken)
    code, out, _ = run(["verify", "--claim", "thm2", "--algebra", "A2"], capsys)
    assert code == 1 and "FAIL" in out


def test_hermitian_counts(capsys):
    code, out, _ = run(["hermitian", "--counts", "--format", "json"], capsys)
    rows = json.loads(out)
    assert code == 0 and len(rows) == 14 and all(r["match"] for r in rows)
    code, out, _ = run(["hermitian", "--counts", "--case", "d21a-cartan"], capsys)
    assert "n_pos=32" in out and "n_pos_even=8" in out and "n_ext=4" in out


def test_output_file(tmp_path, capsys):
    target = tmp_path / "roots.txt"
    code, out, _ = run(["--output", str(target), "roots", "--algebra", "A2"], capsys)
    assert code == 0 and out == ""
    assert target.read_text().startswith("A2: 6 roots")


def test_list_algebras(capsys):
    code, out, _ = run(["list-algebras"], capsys)
    assert code == 0 and "D(2,1;a)" in out and "F_4" in out
