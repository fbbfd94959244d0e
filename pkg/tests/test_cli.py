"""Command-line contract: JSON shapes, exit codes, byte stability."""

import json

import pytest

from symfact import cli
from symfact.poly import MultiPoly


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr().out
    return code, out


class TestBasisCommand:
    def test_normalized_monomial(self, capsys):
        code, out = run(capsys, "basis", "--kind", "m", "--lambda", "2,0", "--n", "2", "--normalized")
        assert code == 0
        assert json.loads(out) == {
            "terms": [{"c": "1/2", "e": [2, 0]}, {"c": "1/2", "e": [0, 2]}],
            "vars": ["x1", "x2"],
        }

    def test_trivial_schur(self, capsys):
        code, out = run(capsys, "basis", "--kind", "s", "--lambda", "0,0", "--n", "2")
        assert code == 0
        assert json.loads(out)["terms"] == [{"c": "1", "e": [0, 0]}]

    def test_elementary_product(self, capsys):
        code, out = run(capsys, "basis", "--kind", "E", "--lambda", "1,1", "--n", "2")
        assert code == 0
        assert json.loads(out)["terms"] == [{"c": "1", "e": [1, 1]}]

    def test_unsorted_partition_rejected(self, capsys):
        code, _ = run(capsys, "basis", "--kind", "m", "--lambda", "0,2", "--n", "2")
        assert code == 2

    def test_length_mismatch_rejected(self, capsys):
        code, _ = run(capsys, "basis", "--kind", "m", "--lambda", "2,0", "--n", "3")
        assert code == 2

    def test_byte_stable(self, capsys):
        _, first = run(capsys, "basis", "--kind", "s", "--lambda", "2,1,0", "--n", "3")
        _, second = run(capsys, "basis", "--kind", "s", "--lambda", "2,1,0", "--n", "3")
        assert first == second


class TestSeparateCommand:
    def test_monomial_case(self, capsys):
        code, out = run(capsys, "separate", "--basis", "m", "--lambda", "2,0", "--n", "2")
        assert code == 0
        data = json.loads(out)
        assert data["q"] == ["1/2", "0", "1/2"]
        product = MultiPoly.from_json(data["product"])
        assert product.eval([1, 1]) == 1

    def test_trivial_eigenvalue(self, capsys):
        code, out = run(capsys, "separate", "--basis", "E", "--lambda", "0,0", "--n", "2")
        assert json.loads(out)["q"] == ["1"]

    def test_schur_case(self, capsys):
        code, out = run(capsys, "separate", "--basis", "s", "--lambda", "1,1,0", "--n", "3")
        assert json.loads(out)["q"] == ["1/3", "2/3"]


class TestApplyQCommand:
    def test_basis_element(self, capsys):
        code, out = run(capsys, "apply-q", "--basis", "m", "--lambda", "2,0", "--n", "2")
        assert code == 0
        data = json.loads(out)
        assert data["eigenvalue"] == ["1/2", "0", "1/2"]
        result = MultiPoly.from_json(data["result"])
        assert result.arity == 3

    def test_stdin_input(self, capsys, monkeypatch):
        import io

        poly = {"vars": ["x1", "x2"], "terms": [{"e": [1, 0], "c": "1"}, {"e": [0, 1], "c": "1"}]}
        monkeypatch.setattr("sys.stdin", io.StringIO(json.dumps(poly)))
        code, out = run(capsys, "apply-q", "--basis", "E", "--input", "-")
        assert code == 0
        result = MultiPoly.from_json(json.loads(out)["result"])
        assert result.eval([1, 1, 1]) == 2  # q(1) = 1 on each component

    def test_requires_lambda_or_input(self, capsys):
        with pytest.raises(SystemExit) as err:
            cli.main(["apply-q", "--basis", "m"])
        assert err.value.code == 2


class TestInvertAndLift:
    def test_invert_recovers_schur(self, capsys):
        from fractions import Fraction as F

        code, out = run(capsys, "invert", "--lambda", "1,0", "--n", "2")
        assert code == 0
        result = MultiPoly.from_json(json.loads(out)["result"])
        assert result == MultiPoly(2, {(1, 0): F(1, 2), (0, 1): F(1, 2)})

    def test_lift(self, capsys):
        code, out = run(capsys, "lift", "--basis", "m", "--lambda", "2")
        assert code == 0
        result = MultiPoly.from_json(json.loads(out))
        assert result.arity == 2 and result.eval([1, 1]) == 1


class TestVerifyCommand:
    def test_minimal_run_passes(self, capsys):
        code, out = run(capsys, "verify", "--suite", "all", "--max-weight", "0", "--n", "1")
        assert code == 0
        report = json.loads(out)
        assert report["passed"] is True and report["counts"]["failed"] == 0

    def test_eigen_suite_small(self, capsys):
        code, out = run(capsys, "verify", "--suite", "eigen", "--max-weight", "2", "--n", "2")
        assert code == 0
        report = json.loads(out)
        assert all(c["status"] == "pass" for c in report["checks"])

    def test_table_format(self, capsys):
        code, out = run(capsys, "verify", "--suite", "ode", "--max-weight", "1", "--n", "2", "--format", "table")
        assert code == 0
        assert "PASS" in out and "checks passed" in out

    def test_failure_exit_code(self):
        report = {"passed": False, "checks": [{"name": "x", "status": "fail"}], "counts": {"total": 1, "failed": 1}}
        assert cli._emit_report(report, "json") == 1

    def test_quadrature_command(self, capsys):
        code, out = run(capsys, "quadrature", "--n", "2", "--max-weight", "1")
        assert code == 0
        report = json.loads(out)
        conventions = {
            c.get("convention")
            for c in report["checks"]
            if c.get("identity") == "Q integral (adjudicated prefactor)"
        }
        assert conventions == {"denominator"}

    def test_report_is_byte_stable(self, capsys):
        _, first = run(capsys, "verify", "--suite", "lifting", "--max-weight", "2", "--n", "2")
        _, second = run(capsys, "verify", "--suite", "lifting", "--max-weight", "2", "--n", "2")
        assert first == second
