import json

import pytest

from graver_forge.cli import main
from graver_forge.linalg import RatMatrix, format_rmx, read_rmx, row_space_equal


@pytest.fixture
def rmx(tmp_path):
    def write(rows, name="a.rmx"):
        p = tmp_path / name
        p.write_text(format_rmx(RatMatrix(rows)))
        return str(p)
    return write


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def test_analyze_dense_example(capsys, rmx, left):
    code, out = run(capsys, "analyze", rmx(left), "--json")
    data = json.loads(out)
    assert code == 0 and data["schema"] == "graver-forge/1"
    assert data["tree_depth"]["td_D"] == 5
    assert data["matroid"]["csd"]["value"] == 2


def test_analyze_identity(capsys, rmx):
    code, out = run(capsys, "analyze", rmx([[1, 0], [0, 1]]), "--json")
    data = json.loads(out)
    assert all(v["value"] == 1 for v in data["matroid"].values())
    assert data["circuits"]["count"] == 0


def test_analyze_star(capsys, rmx, star5):
    code, out = run(capsys, "analyze", rmx(star5.rows), "--json")
    data = json.loads(out)
    assert data["tree_depth"]["td_I"] == 4 and data["graver"]["g1"] == 8


def test_analyze_budget_exit_code(capsys, rmx, left):
    code, out = run(capsys, "analyze", rmx(left), "--budget-depth", "2", "--json")
    assert code == 3 and json.loads(out)["budget_exceeded"]


def test_analyze_over_prime_field(capsys, rmx):
    code, out = run(capsys, "analyze", rmx([[1, 1], [1, -1]]), "--field", "gf:2", "--json")
    assert code == 0 and json.loads(out)["matroid"]["dd"]["value"] == 2


def test_sparsify_dual(capsys, rmx, left, tmp_path):
    out_path = tmp_path / "out.rmx"
    cert = tmp_path / "cert.json"
    code, out = run(capsys, "sparsify", "dual", rmx(left), "-d", "2", "-o", str(out_path),
                    "--certificate", str(cert), "--json")
    assert code == 0 and json.loads(out)["bounds"]["td"] == 2
    assert row_space_equal(RatMatrix(left), read_rmx(out_path))
    assert json.loads(cert.read_text())["value"] == 2


def test_sparsify_primal_refused(capsys, rmx, band):
    code, out = run(capsys, "sparsify", "primal", rmx(band), "-d", "1", "--json")
    assert code == 2 and json.loads(out)["verdict"] == "not-equivalent"


def test_sparsify_primal_strips_dependent_rows(capsys, rmx):
    code, out = run(capsys, "sparsify", "primal", rmx([[1, 2, 0], [0, 1, 2], [1, 3, 2]]), "-d", "2",
                    "--kappa", "4", "--json")
    data = json.loads(out)
    assert code == 0 and data["notes"] == ["dropped 1 dependent row(s)"]


def test_sparsify_incidence(capsys, rmx, star5):
    code, out = run(capsys, "sparsify", "incidence", rmx(star5.rows), "-d", "4", "--json")
    assert code == 0 and json.loads(out)["bounds"]["td"] <= 4


def test_generate_gn(capsys, tmp_path):
    code, out = run(capsys, "generate", "gn", "-n", "2", "-o", str(tmp_path))
    assert code == 0
    assert (tmp_path / "gn2.gr").read_text().splitlines()[0] == "8 12"
    manifest = json.loads((tmp_path / "gn_manifest.json").read_text())
    assert manifest["edges"] == 12 and manifest["path_length_range"] == [2, 4]


def test_generate_gn_one_is_parallel_pair(capsys, tmp_path):
    run(capsys, "generate", "gn", "-n", "1", "-o", str(tmp_path))
    assert (tmp_path / "gn1.gr").read_text().splitlines() == ["2 2", "0 1", "0 1"]


def test_generate_hardness(capsys, tmp_path):
    code, _ = run(capsys, "generate", "hardness", "--edges", "0-0,1-1", "-k", "1", "-o", str(tmp_path))
    manifest = json.loads((tmp_path / "hardness_manifest.json").read_text())
    assert code == 0 and manifest["threshold"] == 3 and manifest["balanced_independent_set"]
    assert "field q" in (tmp_path / "hardness_cstar.rmx").read_text()


def test_validate_is_deterministic(capsys):
    code, first = run(capsys, "validate", "a-contract", "--seed", "5", "--json")
    _, second = run(capsys, "validate", "a-contract", "--seed", "5", "--json")
    assert code == 0 and first == second


@pytest.mark.parametrize("argv", [["frobnicate"], ["analyze"], ["sparsify", "dual", "x.rmx"],
                                  ["analyze", "missing.rmx"], ["analyze", "x", "--field", "gf:4"]])
def test_usage_errors(capsys, argv):
    assert main(argv) == 1


def test_parse_error_exit(capsys, tmp_path):
    p = tmp_path / "bad.rmx"
    p.write_text("2 2\n1 2\n")
    assert main(["analyze", str(p)]) == 1


def test_emitted_matrix_round_trips(capsys, rmx, left, tmp_path):
    out_path = tmp_path / "o.rmx"
    main(["sparsify", "dual", rmx(left), "-d", "2", "-o", str(out_path)])
    text = out_path.read_text()
    assert format_rmx(read_rmx(out_path)) == text


def test_validation_failure_exit_code(capsys, monkeypatch):
    import graver_forge.cli as cli
    from graver_forge.validation import SuiteResult

    def broken(name, seed=0, **kw):
        res = SuiteResult(name, checked=1)
        res.fail("synthetic violation")
        return res

    monkeypatch.setattr(cli, "run_suite", broken)
    assert main(["validate", "gn", "--json"]) == 4
