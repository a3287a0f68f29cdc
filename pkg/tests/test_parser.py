import pytest

from fqforge.core.field import FieldSpec
from fqforge.core.polynomial import Polynomial
from fqforge.core.ring import PointSet, all_points
from fqforge.errors import (
    ExpressionSyntaxError,
    InvalidCoefficientError,
    InvalidFieldError,
    ProblemFileError,
    UnknownVariableError,
)
from fqforge.instruction import (
    OperationRequest,
    load_problem_file,
    parse_field_descriptor,
    parse_polynomial,
    parse_subset,
)
from fqforge.instruction.parser import ExpressionParser, parse_field_element
from fqforge.instruction.problem_file import load_pointset_file, parse_problem_text
from fqforge.validation.verifiers import derive_rng, random_polynomial


def var(spec, nvars, index):
    return Polynomial.variable(spec, nvars, index)


class TestExpressionParser:
    """多项式表达式解析测试套件"""

    @pytest.fixture(scope="class")
    def f3(self):
        return FieldSpec(3)

    def test_precedence(self, f3):
        x, y = var(f3, 2, 0), var(f3, 2, 1)
        parsed = parse_polynomial("x^2 + 2*x*y - y + 1", f3, 2)
        assert parsed.polynomial == x**2 + 2 * x * y - y + 1
        assert parsed.diagnostics == ()

    def test_indexed_names_and_aliases(self, f3):
        assert parse_polynomial("x0*x1", f3, 2).polynomial == parse_polynomial("x*y", f3, 2).polynomial
        four = parse_polynomial("x3 + x0", f3, 4).polynomial
        assert four == var(f3, 4, 3) + var(f3, 4, 0)

    def test_unary_minus_and_parentheses(self, f3):
        x = var(f3, 1, 0)
        assert parse_polynomial("-x", f3, 1).polynomial == -x
        assert parse_polynomial("-(x + 1)^2", f3, 1).polynomial == -((x + 1) ** 2)
        assert parse_polynomial("- - x", f3, 1).polynomial == x

    def test_constant_powers_stay_in_the_field(self, f3):
        assert parse_polynomial("2^3", f3, 1).polynomial == Polynomial.constant(f3, 1, 2)

    def test_large_coefficient_is_reduced_with_diagnostic(self, f3):
        parsed = parse_polynomial("5*x", f3, 1)
        assert parsed.polynomial == 2 * var(f3, 1, 0)
        assert parsed.diagnostics == ((0, "coefficient 5 reduced modulo 3"),)

    def test_extension_field_coefficients(self):
        f4 = FieldSpec.of_order(4)
        parsed = parse_polynomial("(t+1)*x0 + t", f4, 1)
        assert parsed.polynomial.to_text() == "(t+1)*x + t"

    @pytest.mark.parametrize(
        "q,n,text",
        [
            (3, 2, "2*x*y^2 + x + 1"),
            (4, 1, "(t+1)*x^3 + t*x + 1"),
            (2, 4, "x0*x3 + x1^2 + x2"),
            (9, 2, "(2*t+1)*x*y + t"),
        ],
    )
    def test_printer_output_parses_back(self, q, n, text):
        spec = FieldSpec.of_order(q)
        poly = parse_polynomial(text, spec, n).polynomial
        assert poly.to_text() == text
        assert parse_polynomial(poly.to_text(), spec, n).polynomial == poly

    @pytest.mark.parametrize("q", [2, 3, 4, 9])
    @pytest.mark.parametrize("n", [2, 4])
    def test_random_polynomials_parse_back(self, q, n):
        spec = FieldSpec.of_order(q)
        rng = derive_rng(0, "round-trip", None, spec.descriptor(), n)
        for _ in range(1000):
            poly = random_polynomial(spec, n, rng, 3 * q)
            assert parse_polynomial(poly.to_text(), spec, n).polynomial == poly, poly.to_text()

    def test_powers_of_sums_are_reduced(self):
        f2 = FieldSpec(2)
        x, y, z = (var(f2, 3, i) for i in range(3))
        literal = (x + y + z + 1) ** 40
        parsed = parse_polynomial("(x + y + z + 1)^40", f2, 3).polynomial
        assert parsed.is_reduced()
        assert len(parsed) <= 2**3
        for point in all_points(f2, 3):
            assert parsed.evaluate(point) == literal.evaluate(point)

    def test_large_powers_of_sums_stay_small(self):
        f3 = FieldSpec(3)
        parsed = parse_polynomial("(x + 2*y + z + 1)^1000", f3, 3).polynomial
        assert parsed.is_reduced()
        assert len(parsed) <= 3**3

    def test_monomial_powers_are_literal(self, f3):
        assert parse_polynomial("x^7", f3, 1).polynomial == var(f3, 1, 0) ** 7

    def test_literal_powers_when_reduction_is_off(self):
        f2 = FieldSpec(2)
        parser = ExpressionParser(f2, 1, names=["t"], reduce_powers=False)
        t = var(f2, 1, 0)
        assert parser.parse("(t+1)^2 + t").polynomial == t**2 + t + 1

    @pytest.mark.parametrize(
        "text,position",
        [("x0^", 3), ("x y", 2), ("(x", 2), ("x $", 2), ("x^y", 2), ("", 0), ("x + * 1", 4)],
    )
    def test_syntax_error_positions(self, f3, text, position):
        with pytest.raises(ExpressionSyntaxError) as excinfo:
            parse_polynomial(text, f3, 1)
        assert excinfo.value.position == position

    def test_unknown_variable(self, f3):
        with pytest.raises(UnknownVariableError) as excinfo:
            parse_polynomial("x + w", f3, 1)
        assert excinfo.value.position == 4

    def test_generator_outside_extension(self, f3):
        with pytest.raises(InvalidCoefficientError):
            parse_polynomial("t*x", f3, 1)

    def test_alias_out_of_range(self, f3):
        with pytest.raises(UnknownVariableError):
            parse_polynomial("z", f3, 2)


class TestFieldDescriptors:
    """域描述与元素字面量"""

    @pytest.mark.parametrize("text", ["GF(4)", "GF(2^2)", "GF(4; modulus=t^2+t+1)", " GF( 4 ) "])
    def test_equivalent_descriptors(self, text):
        assert parse_field_descriptor(text) == FieldSpec.of_order(4)

    def test_explicit_modulus(self):
        spec = parse_field_descriptor("GF(8; modulus=t^3+t+1)")
        assert spec.modulus == (1, 1, 0, 1)
        assert spec.descriptor() == "GF(8; modulus=t^3+t+1)"

    @pytest.mark.parametrize(
        "text",
        ["GF(6)", "GF4", "GF(4; modulus=t^2+1)", "GF(4; modulus=t^3+t+1)", "GF(4; modulus=0)", "GF(9; modulus=t^2+)"],
    )
    def test_invalid_descriptors(self, text):
        with pytest.raises(InvalidFieldError):
            parse_field_descriptor(text)

    def test_field_element_literals(self):
        f9 = FieldSpec.of_order(9)
        assert parse_field_element("t+2", f9) == f9.from_coeffs([2, 1])
        assert parse_field_element("4", FieldSpec(3)) == FieldSpec(3).one


PROBLEM = """\
# 两个生成元的成员判定
FIELD GF(2)
VARS 2
POINTS
0, 0
0, 1   # 行尾注释
1, 1
POLY f = x*y + y
POLY g = x
OPERATION member phi=f gens=g, y + 1
"""


class TestProblemFiles:
    """问题文件与点集文件"""

    def test_parse_problem(self):
        problem = parse_problem_text(PROBLEM)
        assert problem.spec == FieldSpec(2)
        assert problem.nvars == 2
        assert len(problem.points) == 3
        assert set(problem.polynomials) == {"f", "g"}
        assert problem.operation.command == "member"
        assert problem.operation.options == {"phi": "f", "gens": "g, y + 1"}
        assert problem.describe_points() == "(0, 0); (0, 1); (1, 1)"

    def test_resolve_names_and_inline_expressions(self):
        problem = parse_problem_text(PROBLEM)
        gens = problem.resolve_list(problem.operation.options["gens"])
        assert gens[0] == problem.polynomials["g"]
        assert gens[1] == var(problem.spec, 2, 1) + 1
        with pytest.raises(ProblemFileError):
            problem.resolve_list(" , ")

    def test_points_default_to_full(self):
        problem = parse_problem_text("FIELD GF(3)\nVARS 1\n")
        assert problem.points.is_full
        assert problem.describe_points() == "FULL"
        assert problem.operation is None

    def test_points_full_keyword(self):
        problem = parse_problem_text("FIELD GF(4)\nVARS 1\nPOINTS FULL\n")
        assert len(problem.points) == 4

    @pytest.mark.parametrize(
        "text,line",
        [
            ("VARS 1\n", None),
            ("FIELD GF(2)\n", None),
            ("FIELD GF(2)\nVARS one\n", 2),
            ("FIELD GF(2)\nVARS 1\nBOGUS 3\n", 3),
            ("FIELD GF(2)\nVARS 1\nPOINTS\n0\n1, 1\n", 5),
            ("FIELD GF(2)\nVARS 1\nPOLY f x\n", 3),
            ("FIELD GF(2)\nVARS 1\nPOLY f = x +\n", 3),
            ("FIELD GF(2)\nVARS 1\nOPERATION phi=x\n", 3),
        ],
    )
    def test_malformed_problems(self, text, line):
        with pytest.raises(ProblemFileError) as excinfo:
            parse_problem_text(text)
        assert excinfo.value.line == line

    def test_duplicate_points(self):
        with pytest.raises(ProblemFileError):
            parse_problem_text("FIELD GF(2)\nVARS 1\nPOINTS\n1\n1\n")

    def test_operation_request(self):
        request = OperationRequest.parse("op quotient gens=x, y other=x+1")
        assert request.command == "op"
        assert request.args == ("quotient",)
        assert request.options == {"gens": "x, y", "other": "x+1"}
        assert OperationRequest.parse("radical gens=x m=3").options["m"] == "3"

    def test_load_files(self, tmp_path):
        problem_path = tmp_path / "member.fq"
        problem_path.write_text(PROBLEM, encoding="utf-8")
        assert load_problem_file(problem_path).operation.command == "member"

        points_path = tmp_path / "points.txt"
        points_path.write_text("GF(4) n=2\n0, 1\nt, t+1\n", encoding="utf-8")
        ring = load_pointset_file(points_path)
        assert ring.spec == FieldSpec.of_order(4)
        assert [[c.code for c in p] for p in ring] == [[0, 1], [2, 3]]

    def test_pointset_header_required(self, tmp_path):
        path = tmp_path / "points.txt"
        path.write_text("0, 1\n", encoding="utf-8")
        with pytest.raises(ProblemFileError):
            load_pointset_file(path)

    def test_parse_subset(self):
        ring = PointSet.full(FieldSpec(2), 2)
        subset = parse_subset("0,1; 1,1", ring)
        assert subset.indices() == [1, 3]
        assert parse_subset("", ring).is_empty()
        with pytest.raises(ProblemFileError):
            parse_subset("0,1,1", ring)
