"""点集文件与问题文件

点集文件：
    GF(4; modulus=t^2+t+1) n=2
    0, 1
    t, t+1
（或以 FULL 代替点列表）

问题文件按行组织，头部关键字为 FIELD、VARS、POINTS、POLY、OPERATION，# 开头为注释。
"""

import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, List, Sequence, Tuple

from ..core.field import FieldElement, FieldSpec
from ..core.polynomial import Polynomial
from ..core.ring import PointSet, SubsetOfS, format_point
from ..errors import ExpressionSyntaxError, FqForgeError, ProblemFileError
from .parser import parse_field_descriptor, parse_field_element, parse_polynomial

FULL = "FULL"
HEADERS = ("FIELD", "VARS", "POINTS", "POLY", "OPERATION")
# OPERATION 行可识别的参数名
OPERATION_KEYS = ("phi", "gens", "other", "subset", "m")

_POINTSET_HEADER = re.compile(r"^(?P<field>GF\(.*\))\s+n\s*=\s*(?P<n>\d+)\s*$")
_POLY_LINE = re.compile(r"^(?P<name>[A-Za-z_][A-Za-z_0-9]*)\s*=\s*(?P<expr>.+)$")
_OPERATION_KEY = re.compile(r"(?:^|\s)(%s)=" % "|".join(OPERATION_KEYS))


def _content_lines(text: str) -> List[Tuple[int, str]]:
    lines = []
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append((number, line))
    return lines


def parse_point(text: str, spec: FieldSpec, nvars: int) -> Tuple[FieldElement, ...]:
    """逗号分隔的域元素字面量"""
    parts = [part.strip() for part in text.split(",")]
    if len(parts) != nvars or any(not part for part in parts):
        raise ProblemFileError(f"point {text!r} does not have {nvars} coordinates")
    return tuple(parse_field_element(part, spec) for part in parts)


def parse_points(lines: Sequence[Tuple[int, str]], spec: FieldSpec, nvars: int) -> PointSet:
    if len(lines) == 1 and lines[0][1] == FULL:
        return PointSet.full(spec, nvars)
    points = []
    for number, line in lines:
        try:
            points.append(parse_point(line, spec, nvars))
        except ProblemFileError as e:
            raise ProblemFileError(e.message, number) from None
        except ExpressionSyntaxError as e:
            raise ProblemFileError(f"bad coordinate in {line!r}: {e}", number) from None
    if not points:
        raise ProblemFileError("the point section is empty")
    try:
        return PointSet(spec, nvars, tuple(points))
    except FqForgeError as e:
        raise ProblemFileError(str(e)) from None


def parse_pointset_text(text: str) -> PointSet:
    lines = _content_lines(text)
    if not lines:
        raise ProblemFileError("empty point-set file")
    number, header = lines[0]
    match = _POINTSET_HEADER.match(header)
    if not match:
        raise ProblemFileError("expected a header of the form 'GF(q) n=<n>'", number)
    spec = parse_field_descriptor(match.group("field"))
    return parse_points(lines[1:], spec, int(match.group("n")))


def parse_subset(text: str, ring: PointSet) -> SubsetOfS:
    """分号分隔的点列表，如 "0,1; 1,1"；空串表示空集"""
    parts = [part.strip() for part in text.split(";")]
    points = [parse_point(part, ring.spec, ring.nvars) for part in parts if part]
    return SubsetOfS.from_points(ring, points)


def load_pointset_file(path: str | Path) -> PointSet:
    """读取点集文件"""
    return parse_pointset_text(Path(path).read_text(encoding="utf-8"))


@dataclass(frozen=True)
class OperationRequest:
    """OPERATION 行：子命令、位置参数与 key=value 参数"""

    command: str
    args: Tuple[str, ...] = ()
    options: Dict[str, str] = field(default_factory=dict)

    @classmethod
    def parse(cls, text: str, line: int | None = None) -> "OperationRequest":
        marks = list(_OPERATION_KEY.finditer(text))
        head = text[: marks[0].start()] if marks else text
        words = head.split()
        if not words:
            raise ProblemFileError("OPERATION needs a command name", line)
        options = {}
        for i, mark in enumerate(marks):
            end = marks[i + 1].start() if i + 1 < len(marks) else len(text)
            value = text[mark.end() : end].strip()
            if not value:
                raise ProblemFileError(f"empty value for {mark.group(1)}=", line)
            options[mark.group(1)] = value
        return cls(words[0], tuple(words[1:]), options)


@dataclass(frozen=True)
class ProblemFile:
    """问题描述：域、变量数、点集、具名多项式与请求的操作"""

    spec: FieldSpec
    nvars: int
    points: PointSet
    polynomials: Dict[str, Polynomial] = field(default_factory=dict)
    operation: OperationRequest | None = None

    def resolve(self, token: str) -> Polynomial:
        """具名多项式或内联表达式"""
        token = token.strip()
        if token in self.polynomials:
            return self.polynomials[token]
        return parse_polynomial(token, self.spec, self.nvars).polynomial

    def resolve_list(self, text: str) -> List[Polynomial]:
        """逗号分隔的生成元列表"""
        tokens = [t for t in (part.strip() for part in text.split(",")) if t]
        if not tokens:
            raise ProblemFileError("empty generator list")
        return [self.resolve(t) for t in tokens]

    def describe_points(self) -> str:
        if self.points.is_full:
            return FULL
        return "; ".join(format_point(p) for p in self.points)


def parse_problem_text(text: str) -> ProblemFile:
    spec: FieldSpec | None = None
    nvars: int | None = None
    point_lines: List[Tuple[int, str]] | None = None
    poly_lines: List[Tuple[int, str, str]] = []
    operation: OperationRequest | None = None

    lines = _content_lines(text)
    i = 0
    while i < len(lines):
        number, line = lines[i]
        keyword, _, rest = line.partition(" ")
        rest = rest.strip()
        i += 1
        if keyword == "FIELD":
            spec = parse_field_descriptor(rest)
        elif keyword == "VARS":
            if not rest.isdigit():
                raise ProblemFileError(f"VARS expects a natural number, got {rest!r}", number)
            nvars = int(rest)
        elif keyword == "POINTS":
            point_lines = [(number, rest)] if rest else []
            while i < len(lines) and lines[i][1].partition(" ")[0] not in HEADERS:
                point_lines.append(lines[i])
                i += 1
        elif keyword == "POLY":
            match = _POLY_LINE.match(rest)
            if not match:
                raise ProblemFileError("expected 'POLY <name> = <expr>'", number)
            poly_lines.append((number, match.group("name"), match.group("expr")))
        elif keyword == "OPERATION":
            operation = OperationRequest.parse(rest, number)
        else:
            raise ProblemFileError(f"unknown header {keyword!r}", number)

    if spec is None:
        raise ProblemFileError("missing FIELD header")
    if nvars is None:
        raise ProblemFileError("missing VARS header")
    if point_lines is None:
        point_lines = [(0, FULL)]
    points = parse_points(point_lines, spec, nvars)

    polynomials: Dict[str, Polynomial] = {}
    for number, name, expr in poly_lines:
        try:
            polynomials[name] = parse_polynomial(expr, spec, nvars).polynomial
        except ExpressionSyntaxError as e:
            raise ProblemFileError(f"POLY {name}: {e}", number) from None
    return ProblemFile(spec, nvars, points, polynomials, operation)


def load_problem_file(path: str | Path) -> ProblemFile:
    """读取问题文件"""
    return parse_problem_text(Path(path).read_text(encoding="utf-8"))
