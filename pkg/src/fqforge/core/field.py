"""有限域 F_q (q = p^k) 的精确算术

元素以整数编码保存：code = c_0 + c_1 p + ... + c_{k-1} p^{k-1}，
其中 c_i 是生成元 t 的多项式系数。编码顺序即 enumerate 的文档顺序
（系数向量按字典序排列，常数项变化最快）。
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import List, Sequence, Tuple

from ..errors import CapacityError, FieldDivisionError, FieldMismatchError, InvalidFieldError

MAX_FIELD_ORDER = 1 << 16
MAX_EXTENSION_DEGREE = 8
# q 不超过该值时预先生成加法/乘法表
TABLE_ORDER_LIMIT = 256


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def prime_power(q: int) -> Tuple[int, int]:
    """把 q 分解为 p^k，失败时抛出 InvalidFieldError"""
    if q < 2:
        raise InvalidFieldError(f"field order must be a prime power, got {q}")
    p = next(d for d in range(2, q + 1) if q % d == 0)
    k, rest = 0, q
    while rest % p == 0:
        rest //= p
        k += 1
    if rest != 1:
        raise InvalidFieldError(f"field order must be a prime power, got {q}")
    return p, k


def _trim(coeffs: List[int]) -> List[int]:
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


def _poly_rem(a: Sequence[int], b: Sequence[int], p: int) -> List[int]:
    """F_p[t] 中 a 除以 b 的余式（系数低次在前，b 非零）"""
    rem = _trim(list(a))
    b = _trim(list(b))
    inv_lead = pow(b[-1], p - 2, p)
    while len(rem) >= len(b):
        c = rem[-1] * inv_lead % p
        shift = len(rem) - len(b)
        for i, bi in enumerate(b):
            rem[shift + i] = (rem[shift + i] - c * bi) % p
        _trim(rem)
    return rem


def is_irreducible(p: int, modulus: Sequence[int]) -> bool:
    """穷举判定首一多项式在 F_p 上不可约：没有次数 ≤ k/2 的首一因子"""
    k = len(modulus) - 1
    if k < 1:
        return False
    if k == 1:
        return True
    for degree in range(1, k // 2 + 1):
        for lower in itertools.product(range(p), repeat=degree):
            if not _poly_rem(modulus, list(lower) + [1], p):
                return False
    return True


@lru_cache(maxsize=None)
def default_modulus(p: int, k: int) -> Tuple[int, ...]:
    """按系数低次优先的字典序，返回最小的 k 次首一不可约多项式"""
    if k == 1:
        return (0, 1)
    for lower in itertools.product(range(p), repeat=k):
        candidate = tuple(lower) + (1,)
        if is_irreducible(p, candidate):
            return candidate
    raise InvalidFieldError(f"no irreducible polynomial of degree {k} over F_{p}")


def format_t_polynomial(coeffs: Sequence[int]) -> str:
    """把 t 的多项式（低次在前）格式化为紧凑文本，例如 t^2+2*t+1"""
    parts = []
    for degree in range(len(coeffs) - 1, -1, -1):
        c = coeffs[degree]
        if c == 0:
            continue
        if degree == 0:
            parts.append(str(c))
            continue
        power = "t" if degree == 1 else f"t^{degree}"
        parts.append(power if c == 1 else f"{c}*{power}")
    return "+".join(parts) if parts else "0"


@dataclass(frozen=True)
class FieldSpec:
    """有限域 F_{p^k} 的描述：素数 p、扩张次数 k 与模多项式（低次在前）"""

    p: int
    k: int = 1
    modulus: Tuple[int, ...] = field(default=())

    def __post_init__(self):
        if not is_prime(self.p):
            raise InvalidFieldError(f"characteristic must be prime, got {self.p}")
        if not 1 <= self.k <= MAX_EXTENSION_DEGREE:
            raise InvalidFieldError(
                f"extension degree must be in [1, {MAX_EXTENSION_DEGREE}], got {self.k}"
            )
        if self.p**self.k > MAX_FIELD_ORDER:
            raise CapacityError(f"field order {self.p}^{self.k} exceeds {MAX_FIELD_ORDER}")

        if not self.modulus:
            object.__setattr__(self, "modulus", default_modulus(self.p, self.k))
        modulus = tuple(int(c) for c in self.modulus)
        object.__setattr__(self, "modulus", modulus)

        if len(modulus) != self.k + 1 or modulus[-1] != 1:
            raise InvalidFieldError(f"modulus must be monic of degree {self.k}")
        if any(not 0 <= c < self.p for c in modulus):
            raise InvalidFieldError(f"modulus coefficients must lie in [0, {self.p})")
        if self.k == 1 and modulus != (0, 1):
            raise InvalidFieldError("prime fields use the modulus t")
        if not is_irreducible(self.p, modulus):
            raise InvalidFieldError(
                f"modulus {format_t_polynomial(modulus)} is reducible over F_{self.p}"
            )

    @classmethod
    def of_order(cls, q: int, modulus: Sequence[int] | None = None) -> "FieldSpec":
        """按域的阶构造，例如 FieldSpec.of_order(4)"""
        if q > MAX_FIELD_ORDER:
            raise CapacityError(f"field order {q} exceeds {MAX_FIELD_ORDER}")
        p, k = prime_power(q)
        return cls(p, k, tuple(modulus or ()))

    @cached_property
    def q(self) -> int:
        return self.p**self.k

    @property
    def is_prime_field(self) -> bool:
        return self.k == 1

    @property
    def has_default_modulus(self) -> bool:
        return self.modulus == default_modulus(self.p, self.k)

    def descriptor(self) -> str:
        """文本描述 GF(q) 或 GF(q; modulus=...)"""
        if self.has_default_modulus:
            return f"GF({self.q})"
        return f"GF({self.q}; modulus={format_t_polynomial(self.modulus)})"

    def __str__(self) -> str:
        return self.descriptor()

    # ---- 编码与系数 ----

    @cached_property
    def _powers(self) -> Tuple[int, ...]:
        return tuple(self.p**i for i in range(self.k))

    def coeffs_of(self, code: int) -> Tuple[int, ...]:
        p = self.p
        return tuple((code // power) % p for power in self._powers)

    def code_of(self, coeffs: Sequence[int]) -> int:
        if len(coeffs) > self.k:
            coeffs = _poly_rem(coeffs, self.modulus, self.p)
        return sum((int(c) % self.p) * power for c, power in zip(coeffs, self._powers))

    def _mul_coeffs(self, a: Sequence[int], b: Sequence[int]) -> Tuple[int, ...]:
        p, k, modulus = self.p, self.k, self.modulus
        prod = [0] * (2 * k - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    prod[i + j] = (prod[i + j] + ai * bj) % p
        # t^k ≡ -(c_0 + ... + c_{k-1} t^{k-1})
        for degree in range(2 * k - 2, k - 1, -1):
            c = prod[degree]
            if c:
                for i in range(k):
                    prod[degree - k + i] = (prod[degree - k + i] - c * modulus[i]) % p
                prod[degree] = 0
        return tuple(prod[:k])

    def _add_codes_slow(self, a: int, b: int) -> int:
        return self.code_of([x + y for x, y in zip(self.coeffs_of(a), self.coeffs_of(b))])

    def _mul_codes_slow(self, a: int, b: int) -> int:
        return self.code_of(self._mul_coeffs(self.coeffs_of(a), self.coeffs_of(b)))

    @cached_property
    def _tables(self) -> Tuple[List[int], List[int], List[int]] | None:
        if self.k == 1 or self.q > TABLE_ORDER_LIMIT:
            return None
        q = self.q
        add = [self._add_codes_slow(a, b) for a in range(q) for b in range(q)]
        mul = [self._mul_codes_slow(a, b) for a in range(q) for b in range(q)]
        neg = [next(b for b in range(q) if add[a * q + b] == 0) for a in range(q)]
        return add, mul, neg

    def add_codes(self, a: int, b: int) -> int:
        if self.k == 1:
            return (a + b) % self.p
        tables = self._tables
        if tables is not None:
            return tables[0][a * self.q + b]
        return self._add_codes_slow(a, b)

    def mul_codes(self, a: int, b: int) -> int:
        if self.k == 1:
            return a * b % self.p
        tables = self._tables
        if tables is not None:
            return tables[1][a * self.q + b]
        return self._mul_codes_slow(a, b)

    def neg_code(self, a: int) -> int:
        if self.k == 1:
            return -a % self.p
        tables = self._tables
        if tables is not None:
            return tables[2][a]
        return self.code_of([-c for c in self.coeffs_of(a)])

    def pow_code(self, a: int, exponent: int) -> int:
        """平方-乘法求幂，约定 0^0 = 1"""
        result = 1
        while exponent:
            if exponent & 1:
                result = self.mul_codes(result, a)
            a = self.mul_codes(a, a)
            exponent >>= 1
        return result

    # ---- 元素构造 ----

    def from_code(self, code: int) -> "FieldElement":
        if not 0 <= code < self.q:
            raise InvalidFieldError(f"element code {code} outside [0, {self.q})")
        return FieldElement(self, code)

    def from_coeffs(self, coeffs: Sequence[int]) -> "FieldElement":
        return FieldElement(self, self.code_of(coeffs))

    def from_int(self, value: int) -> "FieldElement":
        """整数在素子域 F_p 中的像"""
        return FieldElement(self, value % self.p)

    @property
    def zero(self) -> "FieldElement":
        return FieldElement(self, 0)

    @property
    def one(self) -> "FieldElement":
        return FieldElement(self, 1)

    @property
    def generator(self) -> "FieldElement":
        """模多项式的根 t"""
        return self.from_coeffs([0, 1])

    def enumerate(self) -> List["FieldElement"]:
        """全部 q 个元素，按编码顺序"""
        return [FieldElement(self, code) for code in range(self.q)]

    def nonzero_elements(self) -> List["FieldElement"]:
        return [FieldElement(self, code) for code in range(1, self.q)]

    def random_element(self, rng: random.Random) -> "FieldElement":
        return FieldElement(self, rng.randrange(self.q))


@dataclass(frozen=True, eq=False, slots=True)
class FieldElement:
    """F_q 中的元素"""

    spec: FieldSpec
    code: int

    @property
    def coeffs(self) -> Tuple[int, ...]:
        return self.spec.coeffs_of(self.code)

    def _coerce(self, other) -> "FieldElement":
        if isinstance(other, FieldElement):
            if other.spec is not self.spec and other.spec != self.spec:
                raise FieldMismatchError(
                    f"cannot combine elements of {self.spec} and {other.spec}"
                )
            return other
        if isinstance(other, int):
            return self.spec.from_int(other)
        return NotImplemented

    def __eq__(self, other) -> bool:
        if not isinstance(other, FieldElement):
            return NotImplemented
        return self.code == other.code and (self.spec is other.spec or self.spec == other.spec)

    def __hash__(self) -> int:
        return hash((self.spec.p, self.spec.k, self.code))

    def __lt__(self, other: "FieldElement") -> bool:
        return self.code < self._coerce(other).code

    def __bool__(self) -> bool:
        return self.code != 0

    def is_zero(self) -> bool:
        return self.code == 0

    def __add__(self, other) -> "FieldElement":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return FieldElement(self.spec, self.spec.add_codes(self.code, other.code))

    __radd__ = __add__

    def __neg__(self) -> "FieldElement":
        return FieldElement(self.spec, self.spec.neg_code(self.code))

    def __sub__(self, other) -> "FieldElement":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> "FieldElement":
        return (-self) + other

    def __mul__(self, other) -> "FieldElement":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return FieldElement(self.spec, self.spec.mul_codes(self.code, other.code))

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "FieldElement":
        if exponent < 0:
            return self.inverse() ** (-exponent)
        return FieldElement(self.spec, self.spec.pow_code(self.code, exponent))

    def inverse(self) -> "FieldElement":
        """a^{q-2}"""
        if self.code == 0:
            raise FieldDivisionError(f"zero has no inverse in {self.spec}")
        return self ** (self.spec.q - 2)

    def __truediv__(self, other) -> "FieldElement":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def to_text(self) -> str:
        if self.spec.is_prime_field:
            return str(self.code)
        return format_t_polynomial(self.coeffs)

    def to_json(self) -> List[int]:
        return list(self.coeffs)

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"FieldElement({self.to_text()} in {self.spec})"


# 运算的函数形式
def add(a: FieldElement, b: FieldElement) -> FieldElement:
    return a + b


def mul(a: FieldElement, b: FieldElement) -> FieldElement:
    return a * b


def inv(a: FieldElement) -> FieldElement:
    return a.inverse()


def power(a: FieldElement, e: int) -> FieldElement:
    return a**e


def enumerate_field(spec: FieldSpec) -> List[FieldElement]:
    return spec.enumerate()

