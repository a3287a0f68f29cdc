from typing import Any, Dict, List

from rich.console import Console, Group
from rich.panel import Panel
from rich.rule import Rule
from rich.table import Table

from ..core.engine import OutputDocument
from ..core.field import format_t_polynomial


def format_element(coeffs: List[int]) -> str:
    return format_t_polynomial(coeffs)


def format_point_json(point: List[List[int]]) -> str:
    return "(" + ", ".join(format_element(c) for c in point) + ")"


def _is_point_list(value: Any) -> bool:
    return (
        isinstance(value, list)
        and all(isinstance(p, list) and all(isinstance(c, list) for c in p) for p in value)
        and bool(value)
    )


def format_value(value: Any) -> str:
    if isinstance(value, bool):
        return "[green]true[/green]" if value else "[red]false[/red]"
    if _is_point_list(value):
        return "{" + ", ".join(format_point_json(p) for p in value) + "}"
    if isinstance(value, list):
        if value and all(isinstance(c, list) for c in value):
            return format_point_json(value)
        return ", ".join(str(v) for v in value) if value else "{}"
    if isinstance(value, dict):
        return "; ".join(f"{k}={format_value(v)}" for k, v in value.items())
    return str(value)


class FqForgeResultFormatter:
    """FqForge结果格式化器：把 OutputDocument 渲染为终端文本"""

    def __init__(self, console: Console | None = None):
        self.console = console or Console()

    def format_document(self, document: OutputDocument) -> None:
        pointset = document.pointset
        if isinstance(pointset, list):
            pointset = f"{len(pointset)} points"
        self.console.print(
            f"[bold cyan]{document.operation}[/bold cyan] over {document.field}, "
            f"n={format_value(document.nvars)}, S={pointset}"
        )
        if document.report is not None:
            self.format_reports(document.report)
            self.format_summary(document.result)
        else:
            self.format_result(document.result)
        if document.certificate is not None:
            self.format_certificate(document.certificate)

    def format_result(self, result: Dict[str, Any]) -> None:
        table = Table(show_header=True, header_style="bold magenta")
        table.add_column("item", style="cyan", no_wrap=True)
        table.add_column("value", style="green")
        for key, value in result.items():
            table.add_row(key, format_value(value))
        self.console.print(table)

    def format_certificate(self, certificate: Dict[str, Any]) -> None:
        """证书面板：恒等式与余因子"""
        cofactors = "\n".join(f"h{i + 1} = {h}" for i, h in enumerate(certificate["cofactors"]))
        status = "[green]verified[/green]" if certificate.get("verified") else "[red]not verified[/red]"
        group = Group(certificate["identity"], Rule(), cofactors, Rule(), f"m = {certificate['m']}, {status}")
        self.console.print(Panel(group, title="certificate"))

    def format_reports(self, reports: List[Dict[str, Any]]) -> None:
        table = Table(title="verification", show_header=True, header_style="bold magenta")
        table.add_column("statement", style="cyan", no_wrap=True)
        table.add_column("field")
        table.add_column("n", justify="right")
        table.add_column("S")
        table.add_column("instances", justify="right")
        table.add_column("failures", justify="right")
        table.add_column("status")
        if reports and "elapsed" in reports[0]:
            table.add_column("seconds", justify="right")
        for report in reports:
            row = [
                report["statement_id"],
                report["field"],
                str(report["nvars"]),
                report["label"],
                str(report["instance_count"]),
                str(report["failure_count"]),
                "[green]pass[/green]" if report["passed"] else "[red]FAIL[/red]",
            ]
            if "elapsed" in report:
                row.append(f"{report['elapsed']:.3f}")
            table.add_row(*row)
        self.console.print(table)
        for report in reports:
            for failure in report["failures"]:
                self.console.print(f"[red]{report['statement_id']}[/red] {report['label']}: {failure}")

    def format_summary(self, summary: Dict[str, Any]) -> None:
        style = "green" if summary.get("passed") else "red"
        self.console.print(
            f"[{style}]{summary['reports'] - summary['failed_reports']}/{summary['reports']} reports passed, "
            f"{summary['instances']} instances checked[/{style}]"
        )
