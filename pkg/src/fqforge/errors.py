"""FqForge 异常体系

每个具体异常同时继承对应的内置异常，调用方可以只捕获 ValueError 等内置类型。
"""


class FqForgeError(Exception):
    """所有 FqForge 异常的基类"""


class InvalidFieldError(FqForgeError, ValueError):
    """有限域描述非法：p 非素数、k 越界、模多项式可约或格式错误"""


class FieldMismatchError(FqForgeError, ValueError):
    """两个运算对象属于不同的 FieldSpec"""


class ArityError(FqForgeError, ValueError):
    """变量个数或点的维数不匹配"""


class RingMismatchError(FqForgeError, ValueError):
    """两个坐标环元素或理想属于不同的点集"""


class FieldDivisionError(FqForgeError, ZeroDivisionError):
    """对零元求逆"""


class CapacityError(FqForgeError, ValueError):
    """枚举规模超过上限"""


class ExponentOverflowError(FqForgeError, ValueError):
    """约化前指数超过上限"""


class PointSetError(FqForgeError, LookupError):
    """点集为空、存在重复点或点不在点集中"""


class NonMemberError(FqForgeError, ValueError):
    """元素不属于理想（数学上的否定结果）"""


class ProperIdealError(FqForgeError, ValueError):
    """理想是真理想，无法给出单位证书（数学上的否定结果）"""


class ExpressionSyntaxError(FqForgeError, ValueError):
    """多项式表达式语法错误"""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.message = message
        self.position = position


class UnknownVariableError(ExpressionSyntaxError):
    """表达式中出现未声明的变量"""


class InvalidCoefficientError(ExpressionSyntaxError):
    """系数不属于当前域"""


class ProblemFileError(FqForgeError, ValueError):
    """问题文件或点集文件格式错误"""

    def __init__(self, message: str, line: int | None = None):
        super().__init__(f"line {line}: {message}" if line is not None else message)
        self.message = message
        self.line = line


class InvalidIdealError(FqForgeError, ValueError):
    """理想的生成元列表为空或不属于同一点集"""


class InconsistentRepresentativeError(FqForgeError, ValueError):
    """代表多项式在点集上的取值与求值向量不一致"""


# 数学上的否定结果，CLI 以退出码 1 报告
MATHEMATICAL_NEGATIVES = (NonMemberError, ProperIdealError)
