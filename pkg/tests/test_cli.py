import json
import subprocess
import sys
from fractions import Fraction

import pytest

from bartholdi import cli
from bartholdi.graph import read_edge_list
from bartholdi.linalg import IntPoly
from bartholdi.zeta import ReducedZetaResult, ihara_reciprocal
from conftest import DATA, EXAMPLE_DESCENDING

K3 = str(DATA / "k3.edges")
EDGE = str(DATA / "single_edge.edges")
RANDOM8 = str(DATA / "random8.edges")
EXAMPLE = "2,2,2,3,4,5,6"


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_reduced_example_all(capsys):
    code, out, _ = run(capsys, "reduced", "--degrees", EXAMPLE, "--method", "all", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["agreement"] is True
    assert data["input_kind"] == "degree_sequence"
    assert [int(c) for c in reversed(data["coeffs_ascending"])] == EXAMPLE_DESCENDING
    assert data["d"]["5"] == "-1708"


def test_reduced_text_examples(capsys):
    code, out, _ = run(capsys, "reduced", "--input", K3, "--method", "product")
    assert code == 0 and out.strip() == "-u^6 + 3u^4 - 3u^2 + 1"
    code, out, err = run(capsys, "reduced", "--input", EDGE)
    assert code == 0 and out.strip() == "-u^2"
    assert "warning" in err


def test_reduced_all_text_mentions_agreement(capsys):
    code, out, _ = run(capsys, "reduced", "--input", K3, "--method", "all")
    assert code == 0 and "agreement: true" in out


def test_reduced_all_disagreement_exit(capsys, monkeypatch):
    def broken(g):
        return ReducedZetaResult(g.n, g.m, "product", IntPoly([1, 0, -3, 0, 4, 0, -1]))

    monkeypatch.setattr(cli, "reduced_bartholdi_product", broken)
    code, out, err = run(capsys, "reduced", "--input", K3, "--method", "all")
    assert code == 2
    data = json.loads(out)
    assert data["agreement"] is False and data["mismatch"]["k"] == 2
    assert "d_2" in err


def test_reduced_berkowitz_and_stdin(capsys, monkeypatch):
    import io

    monkeypatch.setattr(sys, "stdin", io.StringIO("0 1\n1 2\n0 2\n"))
    code, out, _ = run(capsys, "reduced", "-i", "-", "--charpoly", "berkowitz", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["coeffs_ascending"] == ["1", "0", "-3", "0", "3", "0", "-1"]
    assert data["input_kind"] == "edge_list"


def test_coeffs_example(capsys):
    code, out, _ = run(capsys, "coeffs", "--degrees", EXAMPLE, "-k", "5", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["d_k"] == "-1708"
    rows = {tuple(r["partition"]): (r["legal_sets"], r["prototype_det"]) for r in data["rows"]}
    assert rows == {(5,): ("7", "4"), (3, 2): ("868", "-2")}
    code, out, _ = run(capsys, "coeffs", "--degrees", EXAMPLE, "-k", "5")
    assert "868" in out and "-1708" in out


def test_coeffs_degenerate_k(capsys):
    code, out, _ = run(capsys, "coeffs", "--input", K3, "-k", "1", "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["rows"] == [] and data["d_k"] == "0"
    code, out, _ = run(capsys, "coeffs", "--input", K3, "-k", "0", "--format", "json")
    data = json.loads(out)
    assert data["rows"][0]["partition"] == [] and data["d_k"] == "-1"


def test_coeffs_all_partitions(capsys):
    code, out, _ = run(capsys, "coeffs", "--input", K3, "-k", "6", "--all-partitions", "--format", "json")
    data = json.loads(out)
    assert code == 0 and len(data["rows"]) == 4 and data["d_k"] == "1"


def test_coeffs_out_of_range(capsys):
    code, _, err = run(capsys, "coeffs", "--input", K3, "-k", "7")
    assert code == 1 and "error" in err


def test_ihara(capsys):
    code, out, _ = run(capsys, "ihara", "--input", K3)
    assert code == 0 and out.strip() == "t^6 - 2t^3 + 1"
    code, out, _ = run(capsys, "ihara", "--input", K3, "--format", "json")
    assert json.loads(out)["coeffs_ascending"] == ["1", "0", "0", "-2", "0", "0", "1"]


def test_bartholdi_eval(capsys):
    code, out, _ = run(capsys, "bartholdi-eval", "--input", K3, "--u", "0", "--t", "1/2", "--format", "json")
    assert code == 0
    data = json.loads(out)
    expected = ihara_reciprocal(read_edge_list(K3))(Fraction(1, 2))
    assert Fraction(data["edge_form"]) == expected == Fraction(data["ihara_at_t"])
    assert data["agreement"] is True


def test_bartholdi_eval_pole_and_bad_input(capsys):
    code, out, _ = run(capsys, "bartholdi-eval", "--degrees", "1,2,1", "--u", "0", "--t", "1")
    assert code == 0 and "pole" in out
    code, _, err = run(capsys, "bartholdi-eval", "--input", K3, "--u", "x", "--t", "1")
    assert code == 1


def test_verify_random8_quick(capsys):
    code, out, _ = run(capsys, "verify", "--input", RANDOM8, "--level", "quick", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["ok"] is True and data["pipelines"]["ok"] is True


def test_verify_deep_small(capsys):
    code, out, _ = run(capsys, "verify", "--input", K3, "--level", "deep")
    assert code == 0
    assert "minor_expansion: pass" in out and "trace_identity: pass" in out


def test_verify_require_oracles_exit_3(capsys):
    code, _, err = run(capsys, "verify", "--input", RANDOM8, "--require-oracles")
    assert code == 3 and "error" in err


def test_verify_failure_exit_2(capsys, monkeypatch):
    def broken(g):
        return ReducedZetaResult(g.n, g.m, "product", IntPoly([7]))

    monkeypatch.setattr(cli, "reduced_bartholdi_product", broken)
    code, out, _ = run(capsys, "verify", "--input", K3)
    assert code == 2 and "pipelines: FAIL" in out


@pytest.mark.parametrize(
    "argv",
    [
        ["reduced", "--degrees", "3,3,3,1"],
        ["reduced", "--degrees", "2,x"],
        ["reduced", "--input", "/nonexistent/file.edges"],
        ["reduced"],
        ["random", "--n", "4", "--p", "3/2"],
    ],
)
def test_input_errors_exit_1(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 1 and err.startswith("error")


def test_parse_error_reports_line(capsys, tmp_path):
    f = tmp_path / "bad.edges"
    f.write_text("0 1\n1 1\n")
    code, _, err = run(capsys, "reduced", "--input", str(f))
    assert code == 1 and "line 2" in err


def test_matrix_dump(capsys):
    code, out, _ = run(capsys, "matrix", "--input", EDGE, "--which", "J")
    assert code == 0 and out == "01\n10\n"
    code, out, _ = run(capsys, "matrix", "--input", K3, "--which", "T", "--format", "json")
    T = json.loads(out)
    assert len(T) == 6 and all(sum(r) == 1 for r in T)


def test_realize_and_random(capsys):
    code, out, _ = run(capsys, "realize", "--degrees", "2,2,2")
    assert code == 0 and out.splitlines()[0] == "n 3"
    code, out, _ = run(capsys, "random", "--n", "8", "--p", "1/2", "--seed", "42")
    assert code == 0
    assert out == (DATA / "random8.edges").read_text()


def test_json_output_is_stable(capsys):
    outs = [run(capsys, "verify", "--input", K3, "--format", "json")[1] for _ in range(2)]
    assert outs[0] == outs[1]
    outs = [run(capsys, "reduced", "--degrees", EXAMPLE, "--format", "json")[1] for _ in range(2)]
    assert outs[0] == outs[1]


def test_module_entry_point():
    out = subprocess.run(
        [sys.executable, "-m", "bartholdi", "reduced", "--input", K3],
        capture_output=True, text=True, check=True,
    )
    assert out.stdout.strip() == "-u^6 + 3u^4 - 3u^2 + 1"
