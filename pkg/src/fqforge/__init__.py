# 核心代数
from .core import (
    FieldElement,
    FieldSpec,
    Ideal,
    MembershipCertificate,
    PointSet,
    Polynomial,
    RingElement,
    SubsetOfS,
    embed,
    vanishing_ideal,
)
from .core.engine import EngineResult, FqForgeEngine, OutputDocument

# 配置与异常
from .config import FqForgeConfig, VerifySettings
from .errors import FqForgeError

# 输入解析
from .instruction import load_problem_file, parse_field_descriptor, parse_polynomial

# 验证
from .validation import VerificationReport, verify_all

__version__ = "0.1.0"

__all__ = [
    "FieldElement",
    "FieldSpec",
    "Ideal",
    "MembershipCertificate",
    "PointSet",
    "Polynomial",
    "RingElement",
    "SubsetOfS",
    "embed",
    "vanishing_ideal",
    "EngineResult",
    "FqForgeEngine",
    "OutputDocument",
    "FqForgeConfig",
    "VerifySettings",
    "FqForgeError",
    "load_problem_file",
    "parse_field_descriptor",
    "parse_polynomial",
    "VerificationReport",
    "verify_all",
]
