from dataclasses import dataclass
from typing import Tuple, Type

import click

from ..errors import (
    MATHEMATICAL_NEGATIVES,
    CapacityError,
    ExpressionSyntaxError,
    FqForgeError,
    InvalidFieldError,
    PointSetError,
    ProblemFileError,
)

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_INPUT_ERROR = 2


@dataclass(frozen=True)
class ErrorInfo:
    category: str
    exit_code: int
    message: str

    def diagnostic(self) -> str:
        """stderr 上的一行诊断"""
        return f"fqforge: {self.category}: {self.message}".replace("\n", " ")


class ErrorClassifier:
    """把异常映射为类别与退出码：数学否定结果为 1，其余输入错误为 2"""

    def __init__(self):
        # 按顺序匹配，子类在前
        self.type_mapping: Tuple[Tuple[Type[BaseException], str, int], ...] = (
            (MATHEMATICAL_NEGATIVES, "negative", EXIT_NEGATIVE),
            (ExpressionSyntaxError, "syntax_error", EXIT_INPUT_ERROR),
            (ProblemFileError, "problem_file_error", EXIT_INPUT_ERROR),
            (InvalidFieldError, "field_error", EXIT_INPUT_ERROR),
            (PointSetError, "pointset_error", EXIT_INPUT_ERROR),
            (CapacityError, "capacity_error", EXIT_INPUT_ERROR),
            (FqForgeError, "input_error", EXIT_INPUT_ERROR),
            (click.UsageError, "usage_error", EXIT_INPUT_ERROR),
            (FileNotFoundError, "file_not_found", EXIT_INPUT_ERROR),
            (UnicodeError, "encoding_error", EXIT_INPUT_ERROR),
            (OSError, "os_error", EXIT_INPUT_ERROR),
        )

    def handles(self, error: BaseException) -> bool:
        return any(isinstance(error, types) for types, _, _ in self.type_mapping)

    def classify_error(self, error: BaseException) -> ErrorInfo:
        for types, category, exit_code in self.type_mapping:
            if isinstance(error, types):
                return ErrorInfo(category, exit_code, str(error) or type(error).__name__)
        return ErrorInfo("unknown_error", EXIT_INPUT_ERROR, str(error) or type(error).__name__)
