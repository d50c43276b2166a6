"""End-to-end command-line behavior: output, determinism, and exit codes."""

import importlib.resources
import json

from projlim.cli import main

DS_SEQ = "diag(t^4,t^-1,t^-1,t^-1,t^-1)"
GALILEI_SEQ = "diag(t,1,1,1,t)"


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestLimit:
    def test_table_output(self, capsys):
        code, out, _ = run(capsys, "limit", "--algebra", "po((4,1))", "--seq", DS_SEQ)
        assert code == 0
        assert "po((1),(3,1))" in out

    def test_json_output(self, capsys):
        code, out, _ = run(
            capsys, "limit", "--algebra", "po((4,1))", "--seq", DS_SEQ, "--format", "json"
        )
        assert code == 0
        doc = json.loads(out)
        assert doc["limit_signature"] == "((1),(3,1))"
        assert doc["permutation"] == [0, 1, 2, 3, 4]
        assert doc["schema_version"] == "1"
        assert len(doc["basis"]) == 10

    def test_json_deterministic(self, capsys):
        args = ("limit", "--algebra", "po((3,2))", "--seq", "diag(t^-1,t^-1,t^-1,t^-1,t^4)", "--format", "json")
        _, first, _ = run(capsys, *args)
        _, second, _ = run(capsys, *args)
        assert first == second


class TestContractAndInvariants:
    def test_contract_table(self, capsys):
        code, out, _ = run(
            capsys, "contract", "--algebra", "po((3))", "--indices", "2"
        )
        assert code == 0
        assert "[e0, e2]" in out

    def test_invariants_json(self, capsys):
        code, out, _ = run(
            capsys, "invariants", "--algebra", "po((4,1))", "--format", "json"
        )
        assert code == 0
        doc = json.loads(out)
        assert doc["invariants"]["dim"] == 10
        assert doc["invariants"]["killing_signature"] == [4, 6, 0]

    def test_contracted_invariants(self, capsys):
        code, out, _ = run(
            capsys,
            "invariants",
            "--algebra",
            "po((3))",
            "--indices",
            "2",
            "--format",
            "json",
        )
        assert code == 0
        assert json.loads(out)["invariants"]["is_nilpotent"] is False


class TestSigmaChain:
    def test_chain_verifies(self, capsys):
        code, out, _ = run(
            capsys, "sigma-chain", "--signature", "(3)", "--weights", "0,-1,-2"
        )
        assert code == 0
        assert "all steps verified: True" in out

    def test_json_shape(self, capsys):
        code, out, _ = run(
            capsys,
            "sigma-chain",
            "--signature",
            "(3)",
            "--weights",
            "0,-1,-2",
            "--format",
            "json",
        )
        doc = json.loads(out)
        assert doc["splits"] == [1, 2]
        assert all(step["verified"] for step in doc["steps"])


class TestEmbedAndClassify:
    def test_embed_check(self, capsys):
        code, out, _ = run(
            capsys,
            "embed-check",
            "--algebra",
            "po((4,1))",
            "--seq",
            "diag(t^4,t^-1,t^-1,t^-1,t^-1,1)",
            "--format",
            "json",
        )
        assert code == 0
        assert json.loads(out)["limit_unchanged"] is True

    def test_classify_points(self, capsys):
        code, out, _ = run(
            capsys,
            "classify",
            "--algebra",
            "po((1),(3,1))",
            "--seq",
            GALILEI_SEQ,
            "--points",
            "[1,2,3,4,5];[1,0,0,0,7]",
            "--format",
            "json",
        )
        assert code == 0
        doc = json.loads(out)
        kinds = [p["kind"] for p in doc["points"]]
        assert kinds == ["boundary", "interior_lower_dim"]


class TestSchur:
    def test_column_pair(self, capsys):
        code, out, _ = run(capsys, "schur", "--pair", "([1,1],[])", "--format", "json")
        assert code == 0
        doc = json.loads(out)
        assert doc["dimension"] == 10
        assert doc["spin"] == "1"
        assert doc["statistics"] == "bosonic"
        assert doc["poincare_irreducible"] is True

    def test_non_column_pair(self, capsys):
        code, out, _ = run(capsys, "schur", "--pair", "([2,1],[1])", "--format", "json")
        doc = json.loads(out)
        assert doc["spin"] is None
        assert doc["poincare_irreducible"] is False


class TestCorrelator:
    def test_uv_mode(self, capsys):
        code, out, _ = run(
            capsys, "correlator", "--mode", "uv", "--ell", "2", "--format", "json"
        )
        assert code == 0
        doc = json.loads(out)
        assert doc["surviving"] == [[1], [1]]

    def test_sequence_mode(self, capsys):
        code, out, _ = run(
            capsys,
            "correlator",
            "--geometry",
            "((1),(3,1))",
            "--reps",
            "fundamental,right_action",
            "--seq",
            GALILEI_SEQ,
            "--format",
            "json",
        )
        doc = json.loads(out)
        assert doc["surviving"] == [[1, 5], [2, 3, 4]]


class TestFigure1:
    def test_json_matches_golden(self, capsys):
        code, out, _ = run(capsys, "figure1", "--format", "json")
        assert code == 0
        golden = (
            importlib.resources.files("projlim.data")
            .joinpath("figure1_golden.json")
            .read_text()
        )
        assert out == golden

    def test_table_lists_rows(self, capsys):
        code, out, _ = run(capsys, "figure1")
        assert code == 0
        for name in ("ds_to_poincare", "ads_to_poincare", "poincare_to_galilei"):
            assert name in out


class TestPlumbing:
    def test_out_writes_file(self, tmp_path, capsys):
        target = tmp_path / "result.json"
        code, out, _ = run(
            capsys,
            "schur",
            "--pair",
            "([1],[])",
            "--format",
            "json",
            "--out",
            str(target),
        )
        assert code == 0
        assert out == ""
        assert json.loads(target.read_text())["dimension"] == 5

    def test_at_file_indirection(self, tmp_path, capsys):
        seq_file = tmp_path / "seq.txt"
        seq_file.write_text(DS_SEQ + "\n")
        code, out, _ = run(
            capsys, "limit", "--algebra", "po((4,1))", "--seq", f"@{seq_file}"
        )
        assert code == 0
        assert "po((1),(3,1))" in out

    def test_parse_error_exits_2(self, capsys):
        code, _, err = run(capsys, "limit", "--algebra", "po((4,1)", "--seq", DS_SEQ)
        assert code == 2
        assert "syntax error" in err

    def test_domain_error_exits_1(self, capsys):
        code, _, err = run(
            capsys, "limit", "--algebra", "po((4,1))", "--seq", "diag(t,1)"
        )
        assert code == 1
        assert "error" in err

    def test_outside_point_exits_1(self, capsys):
        code, _, err = run(
            capsys,
            "classify",
            "--algebra",
            "po((1),(3,1))",
            "--seq",
            GALILEI_SEQ,
            "--points",
            "[0,1,0,0,0]",
        )
        assert code == 1
