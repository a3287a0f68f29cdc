"""F_q 上的稀疏多元多项式

系数在内部以域元素编码保存（单项式 → 非零编码），对外以 FieldElement 呈现。
显示与规范序列化采用分次字典序，高次在前。
"""

from __future__ import annotations

from typing import Dict, Iterator, List, Mapping, Sequence, Tuple

from ..errors import ArityError, ExponentOverflowError, FieldMismatchError, FqForgeError
from .field import FieldElement, FieldSpec

Monomial = Tuple[int, ...]

# 约化之前单个变量允许的最大指数
MAX_EXPONENT = 1 << 20

ALIASES = ("x", "y", "z")


def variable_names(nvars: int) -> List[str]:
    """规范变量名：n ≤ 3 时用 x, y, z，否则用 x0..x{n-1}"""
    if nvars <= len(ALIASES):
        return list(ALIASES[:nvars])
    return [f"x{i}" for i in range(nvars)]


def _display_key(mono: Monomial) -> Tuple[int, Monomial]:
    return (sum(mono), mono)


class Polynomial:
    """F_q[x_1..x_n] 中的多项式，零多项式的项表为空"""

    __slots__ = ("spec", "nvars", "_codes", "_hash")

    def __init__(
        self,
        spec: FieldSpec,
        nvars: int,
        terms: Mapping[Sequence[int], FieldElement | int] | None = None,
    ):
        if nvars < 0:
            raise ArityError(f"variable count must be non-negative, got {nvars}")
        codes: Dict[Monomial, int] = {}
        for mono, coefficient in (terms or {}).items():
            mono = tuple(int(e) for e in mono)
            if len(mono) != nvars:
                raise ArityError(f"monomial {mono} does not have {nvars} exponents")
            if any(e < 0 for e in mono):
                raise ArityError(f"negative exponent in {mono}")
            if any(e > MAX_EXPONENT for e in mono):
                raise ExponentOverflowError(f"exponent in {mono} exceeds {MAX_EXPONENT}")
            code = _coefficient_code(spec, coefficient)
            if mono in codes:
                code = spec.add_codes(codes[mono], code)
            codes[mono] = code
        self.spec = spec
        self.nvars = nvars
        self._codes = {m: c for m, c in codes.items() if c}
        self._hash = None

    @classmethod
    def _raw(cls, spec: FieldSpec, nvars: int, codes: Dict[Monomial, int]) -> "Polynomial":
        poly = cls.__new__(cls)
        poly.spec = spec
        poly.nvars = nvars
        poly._codes = {m: c for m, c in codes.items() if c}
        poly._hash = None
        return poly

    # ---- 构造 ----

    @classmethod
    def zero(cls, spec: FieldSpec, nvars: int) -> "Polynomial":
        return cls._raw(spec, nvars, {})

    @classmethod
    def constant(cls, spec: FieldSpec, nvars: int, value: FieldElement | int) -> "Polynomial":
        return cls._raw(spec, nvars, {(0,) * nvars: _coefficient_code(spec, value)})

    @classmethod
    def one(cls, spec: FieldSpec, nvars: int) -> "Polynomial":
        return cls.constant(spec, nvars, 1)

    @classmethod
    def variable(cls, spec: FieldSpec, nvars: int, index: int) -> "Polynomial":
        if not 0 <= index < nvars:
            raise ArityError(f"variable index {index} outside [0, {nvars})")
        mono = tuple(1 if i == index else 0 for i in range(nvars))
        return cls._raw(spec, nvars, {mono: 1})

    @classmethod
    def from_univariate(cls, spec: FieldSpec, coeffs: Sequence[FieldElement | int]) -> "Polynomial":
        """由低次在前的系数列表构造一元多项式"""
        return cls(spec, 1, {(d,): c for d, c in enumerate(coeffs)})

    # ---- 访问 ----

    @property
    def terms(self) -> Dict[Monomial, FieldElement]:
        return {m: FieldElement(self.spec, c) for m, c in self._codes.items()}

    def coefficient(self, mono: Sequence[int]) -> FieldElement:
        return FieldElement(self.spec, self._codes.get(tuple(mono), 0))

    def monomials(self) -> List[Monomial]:
        """按显示顺序（分次字典序，高次在前）"""
        return sorted(self._codes, key=_display_key, reverse=True)

    def items(self) -> Iterator[Tuple[Monomial, FieldElement]]:
        for mono in self.monomials():
            yield mono, FieldElement(self.spec, self._codes[mono])

    def code_items(self) -> Iterator[Tuple[Monomial, int]]:
        """(单项式, 系数编码) 对，顺序不保证"""
        return iter(self._codes.items())

    def is_zero(self) -> bool:
        return not self._codes

    def __bool__(self) -> bool:
        return bool(self._codes)

    def __len__(self) -> int:
        return len(self._codes)

    def degree(self) -> int:
        """总次数，零多项式为 -1"""
        return max((sum(m) for m in self._codes), default=-1)

    def max_exponent(self) -> int:
        return max((max(m, default=0) for m in self._codes), default=0)

    def is_constant(self) -> bool:
        return all(not any(m) for m in self._codes)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return (
            self.nvars == other.nvars
            and self.spec == other.spec
            and self._codes == other._codes
        )

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.spec, self.nvars, frozenset(self._codes.items())))
        return self._hash

    # ---- 环运算 ----

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.spec != self.spec:
                raise FieldMismatchError(
                    f"cannot combine polynomials over {self.spec} and {other.spec}"
                )
            if other.nvars != self.nvars:
                raise ArityError(
                    f"cannot combine polynomials in {self.nvars} and {other.nvars} variables"
                )
            return other
        if isinstance(other, (int, FieldElement)):
            return Polynomial.constant(self.spec, self.nvars, other)
        return NotImplemented

    def __add__(self, other) -> "Polynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        spec = self.spec
        codes = dict(self._codes)
        for mono, c in other._codes.items():
            codes[mono] = spec.add_codes(codes.get(mono, 0), c)
        return Polynomial._raw(spec, self.nvars, codes)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        neg = self.spec.neg_code
        return Polynomial._raw(self.spec, self.nvars, {m: neg(c) for m, c in self._codes.items()})

    def __sub__(self, other) -> "Polynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> "Polynomial":
        return (-self) + other

    def __mul__(self, other) -> "Polynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self.max_exponent() + other.max_exponent() > MAX_EXPONENT:
            raise ExponentOverflowError(f"product exponent exceeds {MAX_EXPONENT}")
        spec = self.spec
        codes: Dict[Monomial, int] = {}
        for m1, c1 in self._codes.items():
            for m2, c2 in other._codes.items():
                mono = tuple(a + b for a, b in zip(m1, m2))
                codes[mono] = spec.add_codes(codes.get(mono, 0), spec.mul_codes(c1, c2))
        return Polynomial._raw(spec, self.nvars, codes)

    __rmul__ = __mul__

    def scale(self, c: FieldElement | int) -> "Polynomial":
        code = _coefficient_code(self.spec, c)
        mul = self.spec.mul_codes
        return Polynomial._raw(self.spec, self.nvars, {m: mul(code, v) for m, v in self._codes.items()})

    def __pow__(self, exponent: int) -> "Polynomial":
        if exponent < 0:
            raise ValueError("polynomials only admit non-negative powers")
        if self.max_exponent() * exponent > MAX_EXPONENT:
            raise ExponentOverflowError(f"power exponent exceeds {MAX_EXPONENT}")
        result = Polynomial.one(self.spec, self.nvars)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    # ---- 求值与约化 ----

    def evaluate(self, point: Sequence[FieldElement]) -> FieldElement:
        if len(point) != self.nvars:
            raise ArityError(f"point has {len(point)} coordinates, expected {self.nvars}")
        spec = self.spec
        coords = []
        for value in point:
            if value.spec is not spec and value.spec != spec:
                raise FieldMismatchError(f"point coordinate {value} is not in {spec}")
            coords.append(value.code)
        powers: Dict[Tuple[int, int], int] = {}
        total = 0
        for mono, c in self._codes.items():
            value = c
            for i, e in enumerate(mono):
                if e:
                    key = (i, e)
                    if key not in powers:
                        powers[key] = spec.pow_code(coords[i], e)
                    value = spec.mul_codes(value, powers[key])
            total = spec.add_codes(total, value)
        return FieldElement(spec, total)

    def reduce_exponents(self) -> "Polynomial":
        """模域方程 x_i^q - x_i 约化：e ≥ q 时 e → ((e-1) mod (q-1)) + 1，从不变为 0"""
        q = self.spec.q
        spec = self.spec
        codes: Dict[Monomial, int] = {}
        for mono, c in self._codes.items():
            reduced = tuple(((e - 1) % (q - 1)) + 1 if e >= q else e for e in mono)
            codes[reduced] = spec.add_codes(codes.get(reduced, 0), c)
        return Polynomial._raw(spec, self.nvars, codes)

    def is_reduced(self) -> bool:
        return self.max_exponent() < self.spec.q

    def extend_vars(self, extra: int) -> "Polynomial":
        """视为 n + extra 个变量的多项式，新变量不出现"""
        pad = (0,) * extra
        return Polynomial._raw(
            self.spec, self.nvars + extra, {m + pad: c for m, c in self._codes.items()}
        )

    # ---- 一元多项式 ----

    def _require_univariate(self):
        if self.nvars != 1:
            raise ArityError(f"expected a univariate polynomial, got {self.nvars} variables")

    def dense_codes(self) -> List[int]:
        """一元多项式的稠密系数编码，低次在前"""
        self._require_univariate()
        out = [0] * (self.degree() + 1)
        for (d,), c in self._codes.items():
            out[d] = c
        return out

    def leading_coefficient(self) -> FieldElement:
        self._require_univariate()
        if not self._codes:
            return self.spec.zero
        return FieldElement(self.spec, self._codes[(self.degree(),)])

    # ---- 文本 ----

    def to_text(self, names: Sequence[str] | None = None) -> str:
        names = list(names) if names is not None else variable_names(self.nvars)
        parts = []
        for mono, coefficient in self.items():
            factors = []
            for name, e in zip(names, mono):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(f"{name}^{e}")
            text = coefficient.to_text()
            if "+" in text:
                text = f"({text})"
            if not factors:
                parts.append(text)
            elif coefficient.code == 1:
                parts.append("*".join(factors))
            else:
                parts.append("*".join([text] + factors))
        return " + ".join(parts) if parts else "0"

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"Polynomial({self.to_text()!r} over {self.spec}, nvars={self.nvars})"


def _coefficient_code(spec: FieldSpec, value: FieldElement | int) -> int:
    if isinstance(value, FieldElement):
        if value.spec is not spec and value.spec != spec:
            raise FieldMismatchError(f"coefficient {value} is not in {spec}")
        return value.code
    if isinstance(value, int):
        return value % spec.p
    raise FieldMismatchError(f"unsupported coefficient {value!r}")


def divmod_univariate(a: Polynomial, b: Polynomial) -> Tuple[Polynomial, Polynomial]:
    """一元多项式带余除法 a = quo * b + rem，deg rem < deg b"""
    a._coerce(b)
    a._require_univariate()
    if b.is_zero():
        raise FqForgeError("division by the zero polynomial")
    spec = a.spec
    rem = a.dense_codes()
    divisor = b.dense_codes()
    inv_lead = spec.pow_code(divisor[-1], spec.q - 2)
    quo = [0] * max(len(rem) - len(divisor) + 1, 0)
    while len(rem) >= len(divisor):
        shift = len(rem) - len(divisor)
        c = spec.mul_codes(rem[-1], inv_lead)
        quo[shift] = c
        for i, d in enumerate(divisor):
            rem[shift + i] = spec.add_codes(rem[shift + i], spec.neg_code(spec.mul_codes(c, d)))
        while rem and rem[-1] == 0:
            rem.pop()

    def to_poly(codes: List[int]) -> Polynomial:
        return Polynomial._raw(spec, 1, {(d,): c for d, c in enumerate(codes)})

    return to_poly(quo), to_poly(rem)


def univariate_ext_gcd(a: Polynomial, b: Polynomial) -> Tuple[Polynomial, Polynomial, Polynomial]:
    """扩展欧几里得算法：返回 (g, u, v)，g 首一且 u*a + v*b = g"""
    a._coerce(b)
    a._require_univariate()
    if a.is_zero() and b.is_zero():
        raise FqForgeError("gcd of two zero polynomials is undefined")
    zero = Polynomial.zero(a.spec, 1)
    one = Polynomial.one(a.spec, 1)
    r0, r1 = a, b
    s0, s1 = one, zero
    t0, t1 = zero, one
    while not r1.is_zero():
        quo, rem = divmod_univariate(r0, r1)
        r0, r1 = r1, rem
        s0, s1 = s1, s0 - quo * s1
        t0, t1 = t1, t0 - quo * t1
    lead_inv = r0.leading_coefficient().inverse()
    return r0.scale(lead_inv), s0.scale(lead_inv), t0.scale(lead_inv)
