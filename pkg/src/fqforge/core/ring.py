"""坐标环 K[S] = K[x]/I(S)

K[S] 经求值同构于 |S| 个 F_q 的直积：RingElement 的身份由求值向量决定，
代表多项式只用于显示与导出。
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from functools import cached_property
from typing import Callable, Dict, Iterable, Iterator, List, Sequence, Tuple

from ..errors import (
    ArityError,
    CapacityError,
    FieldMismatchError,
    InconsistentRepresentativeError,
    PointSetError,
    RingMismatchError,
)
from .field import FieldElement, FieldSpec
from .polynomial import Polynomial

Point = Tuple[FieldElement, ...]

# 可枚举点集的规模上限
MAX_POINTS = 1 << 16


def point_key(point: Point) -> Tuple[int, ...]:
    return tuple(c.code for c in point)


def format_point(point: Point) -> str:
    return "(" + ", ".join(c.to_text() for c in point) + ")"


def check_enumerable(spec: FieldSpec, nvars: int) -> None:
    if spec.q**nvars > MAX_POINTS:
        raise CapacityError(f"F_{spec.q}^{nvars} has more than {MAX_POINTS} points")


def all_points(spec: FieldSpec, nvars: int) -> List[Point]:
    """F_q^n 的全部点，按规范顺序"""
    check_enumerable(spec, nvars)
    return [tuple(p) for p in itertools.product(spec.enumerate(), repeat=nvars)]


def delta_polynomial(spec: FieldSpec, nvars: int, point: Sequence[FieldElement]) -> Polynomial:
    """点 a 的指示多项式 δ_a = Π_i (1 - (x_i - a_i)^{q-1})"""
    result = Polynomial.one(spec, nvars)
    for i, a_i in enumerate(point):
        x_i = Polynomial.variable(spec, nvars, i)
        result = result * (1 - (x_i - a_i) ** (spec.q - 1))
    return result.reduce_exponents()


@dataclass(frozen=True)
class PointSet:
    """F_q^n 的非空有限子集，点按规范顺序排列且无重复"""

    spec: FieldSpec
    nvars: int
    points: Tuple[Point, ...]

    def __post_init__(self):
        if not self.points:
            raise PointSetError("a point set must be nonempty")
        if len(self.points) > MAX_POINTS:
            raise CapacityError(f"point set exceeds {MAX_POINTS} points")
        for point in self.points:
            if len(point) != self.nvars:
                raise ArityError(f"point {format_point(point)} does not have {self.nvars} coordinates")
            for c in point:
                if c.spec is not self.spec and c.spec != self.spec:
                    raise FieldMismatchError(f"coordinate {c} is not in {self.spec}")
        ordered = tuple(sorted((tuple(p) for p in self.points), key=point_key))
        for a, b in zip(ordered, ordered[1:]):
            if point_key(a) == point_key(b):
                raise PointSetError(f"duplicate point {format_point(a)}")
        object.__setattr__(self, "points", ordered)

    @classmethod
    def full(cls, spec: FieldSpec, nvars: int) -> "PointSet":
        """S = F_q^n"""
        return cls(spec, nvars, tuple(all_points(spec, nvars)))

    @classmethod
    def from_codes(cls, spec: FieldSpec, nvars: int, rows: Iterable[Sequence[int]]) -> "PointSet":
        return cls(spec, nvars, tuple(tuple(spec.from_code(c) for c in row) for row in rows))

    @classmethod
    def random_proper_subset(cls, spec: FieldSpec, nvars: int, rng: random.Random) -> "PointSet":
        """F_q^n 的随机真子集，大小在 [1, q^n - 1] 中均匀选取"""
        universe = all_points(spec, nvars)
        if len(universe) < 2:
            raise PointSetError("F_q^n has no nonempty proper subset")
        size = rng.randint(1, len(universe) - 1)
        return cls(spec, nvars, tuple(rng.sample(universe, size)))

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self) -> Iterator[Point]:
        return iter(self.points)

    @property
    def is_full(self) -> bool:
        return len(self.points) == self.spec.q**self.nvars

    @cached_property
    def _index(self) -> Dict[Tuple[int, ...], int]:
        return {point_key(p): i for i, p in enumerate(self.points)}

    def __contains__(self, point: Sequence[FieldElement]) -> bool:
        return point_key(tuple(point)) in self._index

    def index_of(self, point: Sequence[FieldElement]) -> int:
        try:
            return self._index[point_key(tuple(point))]
        except KeyError:
            raise PointSetError(f"point {format_point(tuple(point))} is not in S") from None

    def label(self) -> str:
        return "FULL" if self.is_full else f"{len(self)} points"

    def to_json(self):
        if self.is_full:
            return "FULL"
        return [[c.to_json() for c in p] for p in self.points]

    # ---- 批量求值 ----

    @cached_property
    def _power_columns(self) -> Dict[Tuple[int, int], Tuple[int, ...]]:
        return {}

    def _power_column(self, var: int, exponent: int) -> Tuple[int, ...]:
        key = (var, exponent)
        column = self._power_columns.get(key)
        if column is None:
            pow_code = self.spec.pow_code
            column = tuple(pow_code(p[var].code, exponent) for p in self.points)
            self._power_columns[key] = column
        return column

    def evaluate_all(self, poly: Polynomial) -> Tuple[FieldElement, ...]:
        """多项式在每个点上的值，按点的规范顺序"""
        if poly.spec != self.spec:
            raise FieldMismatchError(f"polynomial over {poly.spec} evaluated on a set in {self.spec}")
        if poly.nvars != self.nvars:
            raise ArityError(f"polynomial in {poly.nvars} variables evaluated on F_q^{self.nvars}")
        spec = self.spec
        add, mul = spec.add_codes, spec.mul_codes
        totals = [0] * len(self.points)
        for mono, c in poly.code_items():
            column = [c] * len(self.points)
            for var, e in enumerate(mono):
                if e:
                    column = [mul(v, w) for v, w in zip(column, self._power_column(var, e))]
            totals = [add(t, v) for t, v in zip(totals, column)]
        return tuple(FieldElement(spec, t) for t in totals)

    # ---- 指示函数与派生点集 ----

    def indicator_polynomial(self, index: int) -> Polynomial:
        cache = self._indicator_cache
        if index not in cache:
            cache[index] = delta_polynomial(self.spec, self.nvars, self.points[index])
        return cache[index]

    @cached_property
    def _indicator_cache(self) -> Dict[int, Polynomial]:
        return {}

    def complement_points(self) -> List[Point]:
        """F_q^n ∖ S"""
        return [p for p in all_points(self.spec, self.nvars) if p not in self]

    def product_with_field(self) -> "PointSet":
        """S~ = S × F_q"""
        if len(self.points) * self.spec.q > MAX_POINTS:
            raise CapacityError(f"S × F_{self.spec.q} exceeds {MAX_POINTS} points")
        lifted = tuple(p + (c,) for p in self.points for c in self.spec.enumerate())
        return PointSet(self.spec, self.nvars + 1, lifted)

    def whole(self) -> "SubsetOfS":
        return SubsetOfS(self, (True,) * len(self))

    def empty(self) -> "SubsetOfS":
        return SubsetOfS(self, (False,) * len(self))


@dataclass(frozen=True)
class SubsetOfS:
    """S 的子集 T，以逐点标志表示"""

    ring: PointSet
    member_flags: Tuple[bool, ...]

    def __post_init__(self):
        flags = tuple(bool(f) for f in self.member_flags)
        if len(flags) != len(self.ring):
            raise ArityError(f"subset flags have length {len(flags)}, expected {len(self.ring)}")
        object.__setattr__(self, "member_flags", flags)

    @classmethod
    def from_points(cls, ring: PointSet, points: Iterable[Sequence[FieldElement]]) -> "SubsetOfS":
        flags = [False] * len(ring)
        for point in points:
            flags[ring.index_of(point)] = True
        return cls(ring, tuple(flags))

    @classmethod
    def from_indices(cls, ring: PointSet, indices: Iterable[int]) -> "SubsetOfS":
        chosen = set(indices)
        return cls(ring, tuple(i in chosen for i in range(len(ring))))

    @classmethod
    def all_subsets(cls, ring: PointSet) -> Iterator["SubsetOfS"]:
        """按位掩码顺序枚举 2^|S| 个子集"""
        size = len(ring)
        for mask in range(1 << size):
            yield cls(ring, tuple(bool(mask >> i & 1) for i in range(size)))

    def indices(self) -> List[int]:
        return [i for i, flag in enumerate(self.member_flags) if flag]

    def points(self) -> List[Point]:
        return [self.ring.points[i] for i in self.indices()]

    def __len__(self) -> int:
        return sum(self.member_flags)

    def __contains__(self, point: Sequence[FieldElement]) -> bool:
        return point in self.ring and self.member_flags[self.ring.index_of(point)]

    def is_empty(self) -> bool:
        return not any(self.member_flags)

    def _check(self, other: "SubsetOfS") -> None:
        if other.ring is not self.ring and other.ring != self.ring:
            raise RingMismatchError("subsets of different point sets")

    def __or__(self, other: "SubsetOfS") -> "SubsetOfS":
        self._check(other)
        return SubsetOfS(self.ring, tuple(a or b for a, b in zip(self.member_flags, other.member_flags)))

    def __and__(self, other: "SubsetOfS") -> "SubsetOfS":
        self._check(other)
        return SubsetOfS(self.ring, tuple(a and b for a, b in zip(self.member_flags, other.member_flags)))

    def __sub__(self, other: "SubsetOfS") -> "SubsetOfS":
        self._check(other)
        return SubsetOfS(
            self.ring, tuple(a and not b for a, b in zip(self.member_flags, other.member_flags))
        )

    def complement(self) -> "SubsetOfS":
        return SubsetOfS(self.ring, tuple(not f for f in self.member_flags))

    def __le__(self, other: "SubsetOfS") -> bool:
        self._check(other)
        return all(b or not a for a, b in zip(self.member_flags, other.member_flags))

    def to_json(self):
        return [[c.to_json() for c in p] for p in self.points()]

    def to_text(self) -> str:
        return "{" + ", ".join(format_point(p) for p in self.points()) + "}"


class RingElement:
    """剩余类 [f] ∈ K[S]：求值向量加约化代表多项式

    运算只作用于求值向量；代表多项式在首次读取时才由操作数的代表多项式算出。
    """

    __slots__ = ("ring", "values", "_representative", "_pending")

    def __init__(self, ring: PointSet, values: Sequence[FieldElement], representative: Polynomial):
        values = tuple(values)
        if len(values) != len(ring):
            raise ArityError(f"{len(values)} values for a set of {len(ring)} points")
        if ring.evaluate_all(representative) != values:
            raise InconsistentRepresentativeError(
                f"representative {representative} does not match the evaluation vector"
            )
        self.ring = ring
        self.values = values
        self._representative = representative
        self._pending = None

    @classmethod
    def _derived(
        cls,
        ring: PointSet,
        values: Sequence[FieldElement],
        build: Callable[..., Polynomial],
        *operands: "RingElement",
    ) -> "RingElement":
        """求值向量已知；代表多项式延迟为 build(*操作数的代表多项式)"""
        element = object.__new__(cls)
        element.ring = ring
        element.values = tuple(values)
        element._representative = None
        element._pending = (build, operands)
        return element

    @property
    def representative(self) -> Polynomial:
        if self._representative is None:
            self._resolve()
        return self._representative

    def _resolve(self) -> None:
        # 显式栈，长运算链不受递归深度限制
        stack = [self]
        while stack:
            element = stack[-1]
            if element._representative is not None:
                stack.pop()
                continue
            build, operands = element._pending
            missing = [o for o in operands if o._representative is None]
            if missing:
                stack.extend(missing)
                continue
            element._representative = build(*(o._representative for o in operands))
            element._pending = None
            stack.pop()

    def __eq__(self, other) -> bool:
        if not isinstance(other, RingElement):
            return NotImplemented
        return (self.ring is other.ring or self.ring == other.ring) and self.values == other.values

    def __hash__(self) -> int:
        return hash(tuple(v.code for v in self.values))

    @property
    def spec(self) -> FieldSpec:
        return self.ring.spec

    def _coerce(self, other) -> "RingElement":
        if isinstance(other, RingElement):
            if other.ring is not self.ring and other.ring != self.ring:
                raise RingMismatchError("elements of coordinate rings over different point sets")
            return other
        if isinstance(other, (int, FieldElement)):
            return constant(self.ring, other)
        return NotImplemented

    def __add__(self, other) -> "RingElement":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return RingElement._derived(
            self.ring,
            tuple(a + b for a, b in zip(self.values, other.values)),
            lambda f, g: (f + g).reduce_exponents(),
            self,
            other,
        )

    __radd__ = __add__

    def __neg__(self) -> "RingElement":
        return RingElement._derived(self.ring, tuple(-a for a in self.values), lambda f: -f, self)

    def __sub__(self, other) -> "RingElement":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> "RingElement":
        return (-self) + other

    def __mul__(self, other) -> "RingElement":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return RingElement._derived(
            self.ring,
            tuple(a * b for a, b in zip(self.values, other.values)),
            lambda f, g: (f * g).reduce_exponents(),
            self,
            other,
        )

    __rmul__ = __mul__

    def scale(self, c: FieldElement | int) -> "RingElement":
        return RingElement._derived(self.ring, tuple(c * a for a in self.values), lambda f: f.scale(c), self)

    def lift(self, lifted: PointSet) -> "RingElement":
        """[f] 在 S × F_q 上的像，y 不出现"""
        q = self.spec.q
        if len(lifted) != len(self.ring) * q or lifted.nvars != self.ring.nvars + 1:
            raise ArityError(f"{lifted.label()} is not the product of this point set with F_{q}")
        return RingElement._derived(
            lifted, tuple(v for v in self.values for _ in range(q)), lambda f: f.extend_vars(1), self
        )

    def __pow__(self, exponent: int) -> "RingElement":
        if exponent < 0:
            raise ValueError("ring elements only admit non-negative powers")
        result = one(self.ring)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    def compose(self, u: Polynomial) -> "RingElement":
        """u(φ)，u 为一元多项式，按 Horner 法则在 K[S] 中计算"""
        if u.nvars != 1:
            raise ArityError("only univariate polynomials can be composed with a ring element")
        result = zero(self.ring)
        for code in reversed(u.dense_codes()):
            result = result * self + FieldElement(self.spec, code)
        return result

    def value_at(self, point: Sequence[FieldElement]) -> FieldElement:
        return self.values[self.ring.index_of(point)]

    def is_zero(self) -> bool:
        """[f] ≡ [0]"""
        return all(v.is_zero() for v in self.values)

    def is_unit(self) -> bool:
        """在 S 上处处非零"""
        return all(not v.is_zero() for v in self.values)

    def zero_set(self) -> SubsetOfS:
        return SubsetOfS(self.ring, tuple(v.is_zero() for v in self.values))

    def support(self) -> SubsetOfS:
        return SubsetOfS(self.ring, tuple(not v.is_zero() for v in self.values))

    def to_text(self) -> str:
        return f"[{self.representative.to_text()}]"

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        values = ", ".join(v.to_text() for v in self.values)
        return f"RingElement({self.to_text()}, values=({values}))"


# ---- 构造与运算 ----


def embed(f: Polynomial, ring: PointSet) -> RingElement:
    """剩余类 [f]"""
    return RingElement._derived(ring, ring.evaluate_all(f), f.reduce_exponents)


def constant(ring: PointSet, value: FieldElement | int) -> RingElement:
    poly = Polynomial.constant(ring.spec, ring.nvars, value)
    c = poly.coefficient((0,) * ring.nvars)
    return RingElement._derived(ring, (c,) * len(ring), lambda: poly)


def zero(ring: PointSet) -> RingElement:
    return constant(ring, 0)


def one(ring: PointSet) -> RingElement:
    return constant(ring, 1)


def variable(ring: PointSet, index: int) -> RingElement:
    return embed(Polynomial.variable(ring.spec, ring.nvars, index), ring)


def indicator(ring: PointSet, point: Sequence[FieldElement]) -> RingElement:
    """δ_a：在 a 处取 1、在 S 的其他点取 0"""
    index = ring.index_of(point)
    values = tuple(ring.spec.one if i == index else ring.spec.zero for i in range(len(ring)))
    return RingElement._derived(ring, values, lambda: ring.indicator_polynomial(index))


def _interpolation_polynomial(ring: PointSet, values: Sequence[FieldElement]) -> Polynomial:
    rep = Polynomial.zero(ring.spec, ring.nvars)
    for index, value in enumerate(values):
        if not value.is_zero():
            rep = rep + ring.indicator_polynomial(index).scale(value)
    return rep.reduce_exponents()


def interpolate(ring: PointSet, values: Sequence[FieldElement]) -> RingElement:
    """给定求值向量的元素，代表多项式为 Σ values[a]·δ_a"""
    if len(values) != len(ring):
        raise ArityError(f"{len(values)} values for a set of {len(ring)} points")
    for value in values:
        if value.spec is not ring.spec and value.spec != ring.spec:
            raise FieldMismatchError(f"value {value} is not in {ring.spec}")
    values = tuple(values)
    return RingElement._derived(ring, values, lambda: _interpolation_polynomial(ring, values))


def subset_indicator(subset: SubsetOfS) -> RingElement:
    """子集 T 的特征函数 Σ_{a∈T} δ_a"""
    spec = subset.ring.spec
    return interpolate(subset.ring, [spec.one if f else spec.zero for f in subset.member_flags])


def random_element(ring: PointSet, rng: random.Random) -> RingElement:
    return interpolate(ring, [ring.spec.random_element(rng) for _ in range(len(ring))])


def function_count(ring: PointSet) -> int:
    return ring.spec.q ** len(ring)


def all_functions(ring: PointSet, cap: int = MAX_POINTS) -> Iterator[RingElement]:
    """枚举 K[S] 的全部 q^|S| 个元素"""
    if function_count(ring) > cap:
        raise CapacityError(f"K[S] has more than {cap} elements")
    elements = ring.spec.enumerate()
    for values in itertools.product(elements, repeat=len(ring)):
        yield interpolate(ring, values)


def ideal_of_pointset(ring: PointSet) -> List[Polynomial]:
    """I(S) 在 K[x] 中的生成元：域方程 x_i^q - x_i，S ≠ F_q^n 时加上补集指示多项式"""
    spec, nvars = ring.spec, ring.nvars
    check_enumerable(spec, nvars)
    generators = [
        Polynomial.variable(spec, nvars, i) ** spec.q - Polynomial.variable(spec, nvars, i)
        for i in range(nvars)
    ]
    if ring.is_full:
        return generators
    # Σ_{b∉S} δ_b = 1 - Σ_{a∈S} δ_a（约化多项式唯一），取较短的一侧求和
    if len(ring) <= spec.q**nvars // 2:
        complement = Polynomial.one(spec, nvars)
        for index in range(len(ring)):
            complement = complement - ring.indicator_polynomial(index)
    else:
        complement = Polynomial.zero(spec, nvars)
        for point in ring.complement_points():
            complement = complement + delta_polynomial(spec, nvars, point)
    generators.append(complement.reduce_exponents())
    return generators
