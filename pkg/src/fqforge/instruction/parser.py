"""多项式表达式、域描述与域元素字面量的解析

文法（空白无关，优先级 ^ > * > 加减）：
    expr   := term (('+' | '-') term)*
    term   := unary ('*' unary)*
    unary  := '-' unary | factor
    factor := base ('^' natural)?
    base   := integer | variable | 't' | '(' expr ')'
变量为 x0..x{n-1}，n ≤ 3 时另有别名 x, y, z；扩域中 t 表示模多项式的根。
多项式表达式表示 F_q^n 上的函数：多项的和式的 q 次及以上幂按 x_i^q = x_i 约化；
模多项式按字面解析。
"""

import re
from dataclasses import dataclass, field
from typing import List, Sequence, Tuple

from ..core.field import FieldElement, FieldSpec
from ..core.polynomial import ALIASES, MAX_EXPONENT, Polynomial
from ..errors import (
    ExponentOverflowError,
    ExpressionSyntaxError,
    InvalidCoefficientError,
    InvalidFieldError,
    UnknownVariableError,
)

GENERATOR_SYMBOL = "t"

_TOKEN = re.compile(r"\s*(?:(?P<number>\d+)|(?P<name>[A-Za-z_][A-Za-z_0-9]*)|(?P<op>[-+*^()]))")


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    position: int


@dataclass(frozen=True)
class ParsedExpression:
    """解析结果：源文本、多项式与 (位置, 信息) 诊断列表"""

    source: str
    polynomial: Polynomial
    diagnostics: Tuple[Tuple[int, str], ...] = field(default=())


def tokenize(text: str) -> List[Token]:
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        match = _TOKEN.match(text, pos)
        if not match:
            while text[pos].isspace():
                pos += 1
            raise ExpressionSyntaxError(f"unexpected character {text[pos]!r}", pos)
        kind = match.lastgroup
        tokens.append(Token(kind, match.group(kind), match.start(kind)))
        pos = match.end()
    tokens.append(Token("end", "", len(text)))
    return tokens


class ExpressionParser:
    """递归下降解析器，直接在 F_q[x] 中求出多项式"""

    def __init__(
        self,
        spec: FieldSpec,
        nvars: int,
        names: Sequence[str] | None = None,
        reduce_powers: bool = True,
    ):
        self.spec = spec
        self.nvars = nvars
        self.reduce_powers = reduce_powers
        if names is not None:
            self.names = {name: i for i, name in enumerate(names)}
        else:
            self.names = {f"x{i}": i for i in range(nvars)}
            if nvars <= len(ALIASES):
                self.names.update({alias: i for i, alias in enumerate(ALIASES[:nvars])})

    def parse(self, text: str) -> ParsedExpression:
        self._tokens = tokenize(text)
        self._index = 0
        self._diagnostics: List[Tuple[int, str]] = []
        poly = self._expr()
        token = self._peek()
        if token.kind != "end":
            raise ExpressionSyntaxError(f"unexpected {token.text!r}", token.position)
        return ParsedExpression(text, poly, tuple(self._diagnostics))

    def _peek(self) -> Token:
        return self._tokens[self._index]

    def _take(self) -> Token:
        token = self._tokens[self._index]
        self._index += 1
        return token

    def _expect(self, text: str) -> Token:
        token = self._take()
        if token.text != text:
            found = "end of input" if token.kind == "end" else repr(token.text)
            raise ExpressionSyntaxError(f"expected {text!r}, found {found}", token.position)
        return token

    def _expr(self) -> Polynomial:
        result = self._term()
        while self._peek().text in ("+", "-"):
            op = self._take().text
            rhs = self._term()
            result = result + rhs if op == "+" else result - rhs
        return result

    def _term(self) -> Polynomial:
        result = self._unary()
        while self._peek().text == "*":
            self._take()
            result = result * self._unary()
        return result

    def _unary(self) -> Polynomial:
        if self._peek().text == "-":
            self._take()
            return -self._unary()
        return self._factor()

    def _factor(self) -> Polynomial:
        base = self._base()
        if self._peek().text != "^":
            return base
        self._take()
        token = self._take()
        if token.kind != "number":
            found = "end of input" if token.kind == "end" else repr(token.text)
            raise ExpressionSyntaxError(f"expected a natural exponent, found {found}", token.position)
        exponent = int(token.text)
        if base.is_constant():
            # 常数的幂直接在域中计算，避免展开
            return Polynomial.constant(self.spec, self.nvars, base.coefficient((0,) * self.nvars) ** exponent)
        if exponent > MAX_EXPONENT:
            raise ExponentOverflowError(f"exponent {exponent} at position {token.position} exceeds {MAX_EXPONENT}")
        if self.reduce_powers and len(base) > 1 and exponent >= self.spec.q:
            return self._reduced_power(base, exponent)
        return base**exponent

    def _reduced_power(self, base: Polynomial, exponent: int) -> Polynomial:
        """平方乘，每步模 x_i^q - x_i 约化，项数不超过 q^n"""
        result = Polynomial.one(self.spec, self.nvars)
        square = base.reduce_exponents()
        while exponent:
            if exponent & 1:
                result = (result * square).reduce_exponents()
            exponent >>= 1
            if exponent:
                square = (square * square).reduce_exponents()
        return result

    def _base(self) -> Polynomial:
        token = self._take()
        if token.kind == "number":
            value = int(token.text)
            if value >= self.spec.p:
                self._diagnostics.append(
                    (token.position, f"coefficient {value} reduced modulo {self.spec.p}")
                )
            return Polynomial.constant(self.spec, self.nvars, value)
        if token.kind == "name":
            if token.text in self.names:
                return Polynomial.variable(self.spec, self.nvars, self.names[token.text])
            if token.text == GENERATOR_SYMBOL:
                if self.spec.is_prime_field:
                    raise InvalidCoefficientError(
                        f"'{GENERATOR_SYMBOL}' is not an element of {self.spec}", token.position
                    )
                return Polynomial.constant(self.spec, self.nvars, self.spec.generator)
            raise UnknownVariableError(f"unknown variable {token.text!r}", token.position)
        if token.text == "(":
            inner = self._expr()
            self._expect(")")
            return inner
        found = "end of input" if token.kind == "end" else repr(token.text)
        raise ExpressionSyntaxError(f"expected an operand, found {found}", token.position)


def parse_polynomial(text: str, spec: FieldSpec, nvars: int) -> ParsedExpression:
    """把文本解析为 F_q[x_1..x_n] 中的多项式"""
    return ExpressionParser(spec, nvars).parse(text)


def parse_field_element(text: str, spec: FieldSpec) -> FieldElement:
    """域元素字面量：素域中为整数，扩域中为 t 的多项式"""
    poly = ExpressionParser(spec, 0).parse(text).polynomial
    return poly.coefficient(())


_DESCRIPTOR = re.compile(
    r"^\s*GF\(\s*(?P<p>\d+)\s*(?:\^\s*(?P<k>\d+))?\s*(?:;\s*modulus\s*=\s*(?P<modulus>[^)]*))?\)\s*$"
)


def parse_field_descriptor(text: str) -> FieldSpec:
    """解析 GF(q)、GF(p^k) 或 GF(q; modulus=...)"""
    match = _DESCRIPTOR.match(text)
    if not match:
        raise InvalidFieldError(f"malformed field descriptor {text!r}")
    if match.group("k") is not None:
        p, k = int(match.group("p")), int(match.group("k"))
    else:
        default = FieldSpec.of_order(int(match.group("p")))
        p, k = default.p, default.k
    modulus_text = match.group("modulus")
    if modulus_text is None:
        return FieldSpec(p, k)
    try:
        parser = ExpressionParser(FieldSpec(p), 1, names=[GENERATOR_SYMBOL], reduce_powers=False)
        poly = parser.parse(modulus_text).polynomial
    except ExpressionSyntaxError as e:
        raise InvalidFieldError(f"malformed modulus {modulus_text!r}: {e}") from None
    if poly.is_zero():
        raise InvalidFieldError("the zero polynomial is not a modulus")
    return FieldSpec(p, k, tuple(poly.dense_codes()))
