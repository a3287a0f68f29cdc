"""文本输入：表达式解析、域描述、点集文件与问题文件"""

from .parser import (
    ExpressionParser,
    ParsedExpression,
    parse_field_descriptor,
    parse_field_element,
    parse_polynomial,
)
from .problem_file import (
    OperationRequest,
    ProblemFile,
    load_pointset_file,
    load_problem_file,
    parse_point,
    parse_pointset_text,
    parse_problem_text,
    parse_subset,
)

__all__ = [
    "ExpressionParser",
    "ParsedExpression",
    "parse_field_descriptor",
    "parse_field_element",
    "parse_polynomial",
    "OperationRequest",
    "ProblemFile",
    "load_pointset_file",
    "load_problem_file",
    "parse_point",
    "parse_pointset_text",
    "parse_problem_text",
    "parse_subset",
]
