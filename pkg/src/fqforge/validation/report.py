import time
from typing import Any, Callable, Dict, List, Optional, Union

from pydantic import BaseModel, computed_field

from ..core.ring import PointSet

Description = Union[str, Callable[[], str]]


class VerificationReport(BaseModel):
    """单个命题在一个 (域, 点集) 上的验证结果"""

    statement_id: str
    field: str
    nvars: int
    pointset_size: int
    label: str
    instance_count: int = 0
    failure_count: int = 0
    failures: List[str] = []
    elapsed: Optional[float] = None

    @computed_field
    @property
    def passed(self) -> bool:
        return self.failure_count == 0

    def to_document(self, timings: bool = False) -> Dict[str, Any]:
        """JSON 文档中的报告；不带 --timings 时不含耗时，保证输出可逐字节复现"""
        document = self.model_dump(exclude={"elapsed"})
        if timings:
            document["elapsed"] = round(self.elapsed or 0.0, 6)
        return document


class ReportBuilder:
    """逐个实例记录检查结果，只保留前 max_failures 条反例"""

    def __init__(
        self,
        statement_id: str,
        field: str,
        nvars: int,
        pointset_size: int,
        label: str,
        max_failures: int = 10,
    ):
        self.statement_id = statement_id
        self.field = field
        self.nvars = nvars
        self.pointset_size = pointset_size
        self.label = label
        self.max_failures = max_failures
        self.instance_count = 0
        self.failure_count = 0
        self.failures: List[str] = []
        self._started = time.perf_counter()

    @classmethod
    def for_ring(cls, statement_id: str, ring: PointSet, max_failures: int = 10) -> "ReportBuilder":
        return cls(
            statement_id, ring.spec.descriptor(), ring.nvars, len(ring), ring.label(), max_failures
        )

    def count(self, n: int = 1) -> None:
        self.instance_count += n

    def fail(self, description: Description) -> None:
        self.failure_count += 1
        if len(self.failures) < self.max_failures:
            self.failures.append(description() if callable(description) else description)

    def check(self, ok: bool, description: Description) -> bool:
        """失败时才构造反例描述"""
        if not ok:
            self.fail(description)
        return ok

    def build(self) -> VerificationReport:
        return VerificationReport(
            statement_id=self.statement_id,
            field=self.field,
            nvars=self.nvars,
            pointset_size=self.pointset_size,
            label=self.label,
            instance_count=self.instance_count,
            failure_count=self.failure_count,
            failures=list(self.failures),
            elapsed=time.perf_counter() - self._started,
        )


def summarize(reports: List[VerificationReport]) -> Dict[str, Any]:
    """汇总：报告数、失败报告数与总实例数"""
    return {
        "reports": len(reports),
        "failed_reports": sum(1 for r in reports if not r.passed),
        "instances": sum(r.instance_count for r in reports),
        "passed": all(r.passed for r in reports),
    }
