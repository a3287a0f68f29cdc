import json

import pytest
from click.testing import CliRunner

from fqforge import __version__
from fqforge.cli import cli
from fqforge.cli.errors import EXIT_INPUT_ERROR, EXIT_NEGATIVE, EXIT_OK, ErrorClassifier
from fqforge.errors import NonMemberError, ProblemFileError, UnknownVariableError


@pytest.fixture
def runner():
    return CliRunner()


def invoke_json(runner, *args):
    result = runner.invoke(cli, [*args, "--json"])
    document = json.loads(result.output) if result.exit_code in (EXIT_OK, EXIT_NEGATIVE) else None
    return result, document


class TestQueries:
    """单次查询子命令"""

    def test_variety(self, runner):
        result, document = invoke_json(runner, "variety", "--field", "GF(2)", "--nvars", "2", "--gens", "x, y+1")
        assert result.exit_code == EXIT_OK
        assert document["field"] == "GF(2)"
        assert document["nvars"] == 2
        assert document["pointset"] == "FULL"
        assert document["operation"] == "variety"
        assert document["result"] == {"points": [[[0], [1]]], "size": 1}
        assert "certificate" not in document

    def test_member_with_certificate(self, runner):
        result, document = invoke_json(
            runner, "member", "--field", "GF(2)", "--nvars", "1", "--phi", "x^2 + x", "--gens", "x"
        )
        assert result.exit_code == EXIT_OK
        assert document["result"]["member"] is True
        assert document["result"]["phi"] == "[0]"
        assert document["certificate"]["m"] == 1
        assert document["certificate"]["verified"] is True

    def test_non_member_exits_one(self, runner):
        result, document = invoke_json(
            runner, "member", "--field", "GF(2)", "--nvars", "1", "--phi", "x + 1", "--gens", "x"
        )
        assert result.exit_code == EXIT_NEGATIVE
        assert document["result"]["member"] is False
        assert "certificate" not in document

    def test_certify_non_member(self, runner):
        result = runner.invoke(
            cli, ["certify", "--field", "GF(2)", "--nvars", "1", "--phi", "x + 1", "--gens", "x"]
        )
        assert result.exit_code == EXIT_NEGATIVE
        assert "fqforge: negative" in result.output

    def test_certify_over_extension_field(self, runner):
        result, document = invoke_json(
            runner, "certify", "--field", "GF(4)", "--nvars", "1", "--phi", "t*x^2", "--gens", "x, x + t"
        )
        assert result.exit_code == EXIT_OK
        assert document["certificate"]["verified"] is True

    def test_unit_certificate(self, runner):
        result, document = invoke_json(runner, "unit-cert", "--field", "GF(2)", "--nvars", "1", "--gens", "x, x + 1")
        assert result.exit_code == EXIT_OK
        assert document["certificate"]["verified"] is True
        assert len(document["result"]["selectors"]) == 2

    def test_unit_certificate_of_proper_ideal(self, runner):
        result = runner.invoke(cli, ["unit-cert", "--field", "GF(3)", "--nvars", "1", "--gens", "x"])
        assert result.exit_code == EXIT_NEGATIVE
        assert "fqforge: negative" in result.output

    def test_quotient(self, runner):
        result, document = invoke_json(
            runner, "op", "quotient", "--field", "GF(3)", "--nvars", "1", "--gens", "x*(x - 1)", "--other", "x - 1"
        )
        assert result.exit_code == EXIT_OK
        assert document["operation"] == "op quotient"
        assert document["result"]["variety"] == [[[0]]]

    def test_sum(self, runner):
        result, document = invoke_json(
            runner, "op", "sum", "--field", "GF(2)", "--nvars", "2", "--gens", "x", "--other", "y"
        )
        assert result.exit_code == EXIT_OK
        assert document["result"]["generators"] == ["x", "y"]
        assert document["result"]["variety"] == [[[0], [0]]]

    @pytest.mark.parametrize("other,code", [("x^2", EXIT_OK), ("x + 1", EXIT_NEGATIVE)])
    def test_equal(self, runner, other, code):
        result, document = invoke_json(
            runner, "equal", "--field", "GF(2)", "--nvars", "1", "--gens", "x", "--other", other
        )
        assert result.exit_code == code
        assert document["result"]["equal"] is (code == EXIT_OK)

    def test_maximal(self, runner):
        result, document = invoke_json(runner, "maximal", "--field", "GF(2)", "--nvars", "2", "--gens", "x, y")
        assert result.exit_code == EXIT_OK
        assert document["result"] == {"maximal": True, "variety": [[[0], [0]]]}

    def test_radical_with_power(self, runner):
        result, document = invoke_json(
            runner, "radical", "--field", "GF(3)", "--nvars", "1", "--gens", "x", "--phi", "x + 1", "--m", "3"
        )
        assert result.exit_code == EXIT_OK
        power = document["result"]["power"]
        assert document["result"]["radical"] is True
        assert power["m"] == 3
        assert power["equal"] is True
        assert power["reconstructed"] is True

    @pytest.mark.parametrize("phi,code,size", [("x", EXIT_OK, 0), ("1", EXIT_NEGATIVE, 1)])
    def test_rabinowitsch(self, runner, phi, code, size):
        result, document = invoke_json(
            runner, "rabinowitsch", "--field", "GF(2)", "--nvars", "1", "--phi", phi, "--gens", "x"
        )
        assert result.exit_code == code
        assert document["result"]["lifted_points"] == 4
        assert len(document["result"]["lifted_variety"]) == size
        assert ("certificate" in document) is (code == EXIT_OK)

    def test_reduce(self, runner):
        result, document = invoke_json(runner, "reduce", "--field", "GF(3)", "--nvars", "1", "--phi", "x^4 + x^3 - x")
        assert result.exit_code == EXIT_OK
        assert document["result"]["input"] == "x^4 + x^3 + 2*x"
        assert document["result"]["reduced"] == "x^2"
        assert document["result"]["zero_function"] is False

    def test_ideal_of_pointset_and_subset(self, runner):
        _, document = invoke_json(runner, "ideal-of", "--field", "GF(2)", "--nvars", "1")
        assert document["result"] == {"generators": ["x^2 + x"]}
        _, document = invoke_json(runner, "ideal-of", "--field", "GF(2)", "--nvars", "1", "--subset", "0")
        assert document["result"]["principal_generator"] == "x"
        assert document["result"]["variety"] == [[[0]]]

    def test_points_file(self, runner, tmp_path):
        path = tmp_path / "points.txt"
        path.write_text("GF(3) n=1\n1\n2\n", encoding="utf-8")
        result, document = invoke_json(runner, "reduce", "--points", str(path), "--phi", "x^2")
        assert result.exit_code == EXIT_OK
        assert document["pointset"] == [[[1]], [[2]]]
        assert document["result"]["representative"] == "x^2"
        assert document["result"]["values"] == [[1], [1]]

    def test_table_output(self, runner):
        result = runner.invoke(cli, ["variety", "--field", "GF(2)", "--nvars", "1", "--gens", "x"])
        assert result.exit_code == EXIT_OK
        assert "variety" in result.output


class TestInputErrors:
    """输入错误以退出码 2 结束且不输出文档"""

    @pytest.mark.parametrize(
        "args,category",
        [
            (["variety", "--field", "GF(2)", "--nvars", "1", "--gens", "x +"], "syntax_error"),
            (["variety", "--field", "GF(6)", "--nvars", "1", "--gens", "x"], "field_error"),
            (["variety", "--nvars", "1", "--gens", "x"], "problem_file_error"),
            (["variety", "--field", "GF(2)", "--nvars", "1", "--gens", "w"], "syntax_error"),
            (["variety", "--field", "GF(2)", "--nvars", "17", "--gens", "x0"], "capacity_error"),
            (["run", "missing.fq"], "file_not_found"),
        ],
    )
    def test_diagnostics(self, runner, args, category):
        result = runner.invoke(cli, args)
        assert result.exit_code == EXIT_INPUT_ERROR
        assert f"fqforge: {category}:" in result.output
        assert "{" not in result.output

    def test_point_file_field_mismatch(self, runner, tmp_path):
        path = tmp_path / "points.txt"
        path.write_text("GF(3) n=1\n1\n", encoding="utf-8")
        result = runner.invoke(cli, ["variety", "--field", "GF(2)", "--points", str(path), "--gens", "x"])
        assert result.exit_code == EXIT_INPUT_ERROR

    def test_usage_error(self, runner):
        result = runner.invoke(cli, ["op", "union", "--field", "GF(2)", "--nvars", "1", "--gens", "x", "--other", "x"])
        assert result.exit_code == EXIT_INPUT_ERROR

    def test_classifier(self):
        classifier = ErrorClassifier()
        assert classifier.classify_error(NonMemberError("no")).exit_code == EXIT_NEGATIVE
        assert classifier.classify_error(UnknownVariableError("w", 0)).category == "syntax_error"
        assert classifier.classify_error(ProblemFileError("bad", 3)).message == "line 3: bad"
        assert not classifier.handles(KeyError("x"))


class TestRunAndVerify:
    """问题文件与验证网格"""

    def test_run_problem_file(self, runner, tmp_path):
        path = tmp_path / "member.fq"
        path.write_text(
            "FIELD GF(2)\nVARS 2\nPOINTS FULL\nPOLY f = x*y\nOPERATION member phi=f gens=x\n",
            encoding="utf-8",
        )
        result, document = invoke_json(runner, "run", str(path))
        assert result.exit_code == EXIT_OK
        assert document["operation"] == "member"
        assert document["certificate"]["verified"] is True

    def test_run_without_operation(self, runner, tmp_path):
        path = tmp_path / "empty.fq"
        path.write_text("FIELD GF(2)\nVARS 1\n", encoding="utf-8")
        result = runner.invoke(cli, ["run", str(path)])
        assert result.exit_code == EXIT_INPUT_ERROR

    def test_problem_option(self, runner, tmp_path):
        path = tmp_path / "problem.fq"
        path.write_text("FIELD GF(3)\nVARS 1\nPOLY g = x*(x - 1)\n", encoding="utf-8")
        result, document = invoke_json(runner, "variety", "--problem", str(path), "--gens", "g")
        assert result.exit_code == EXIT_OK
        assert document["result"]["size"] == 2

    def test_verify_is_deterministic(self, runner):
        args = ["verify", "correspondence", "--q", "2", "--n", "1", "--trials", "3", "--seed", "5", "--quiet"]
        first, document = invoke_json(runner, *args)
        second, _ = invoke_json(runner, *args)
        assert first.exit_code == EXIT_OK
        assert first.output == second.output
        assert document["operation"] == "verify correspondence"
        assert document["nvars"] == [1]
        assert document["result"]["passed"] is True
        assert document["result"]["seed"] == 5
        assert all(report["statement_id"] == "correspondence" for report in document["report"])

    def test_verify_all_output_is_byte_identical(self, runner):
        args = ["verify", "all", "--q", "2,3", "--n", "1", "--trials", "3", "--quiet", "--json"]
        first = runner.invoke(cli, args)
        second = runner.invoke(cli, args)
        assert first.exit_code == EXIT_OK
        assert first.output == second.output
        document = json.loads(first.output)
        assert document["result"]["passed"] is True
        assert {report["statement_id"] for report in document["report"]} >= {
            "correspondence",
            "weak-nullstellensatz",
            "product-sum-identities",
            "rabinowitsch",
        }

    def test_verify_without_variables(self, runner):
        result, document = invoke_json(runner, "verify", "zero-function", "--q", "2", "--n", "0", "--quiet")
        assert result.exit_code == EXIT_OK
        assert document["result"]["passed"] is True

    def test_verify_rejects_negative_variable_count(self, runner):
        result = runner.invoke(cli, ["verify", "zero-function", "--q", "2", "--n", "-1", "--quiet"])
        assert result.exit_code == EXIT_INPUT_ERROR

    def test_verify_timings(self, runner):
        result, document = invoke_json(
            runner, "verify", "zero-function", "--q", "2", "--n", "1", "--trials", "2", "--timings", "--quiet"
        )
        assert result.exit_code == EXIT_OK
        assert all("elapsed" in report for report in document["report"])

    def test_verify_rejects_bad_orders(self, runner):
        result = runner.invoke(cli, ["verify", "all", "--q", "2,x", "--quiet"])
        assert result.exit_code == EXIT_INPUT_ERROR

    def test_config_file(self, runner, tmp_path):
        path = tmp_path / "fqforge.toml"
        path.write_text("[output]\njson_indent = 4\n", encoding="utf-8")
        result = runner.invoke(
            cli, ["variety", "--field", "GF(2)", "--nvars", "1", "--gens", "x", "--json", "--config", str(path)]
        )
        assert result.exit_code == EXIT_OK
        assert result.output.startswith('{\n    "field"')

    def test_version(self, runner):
        result = runner.invoke(cli, ["--version"])
        assert result.exit_code == EXIT_OK
        assert __version__ in result.output
