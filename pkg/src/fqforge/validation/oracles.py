"""按定义穷举的暴力 oracle

这里不使用零点定理或对应关系，只在求值向量（编码元组）上直接枚举，
用来与 core.ideal 中的构造性算法对照。
"""

import itertools
from typing import FrozenSet, Iterator, List, Tuple

from ..core.field import FieldSpec
from ..core.ideal import Ideal
from ..core.ring import PointSet, RingElement
from ..errors import CapacityError, RingMismatchError

Vector = Tuple[int, ...]


def codes_of(element: RingElement) -> Vector:
    return tuple(v.code for v in element.values)


def all_vectors(spec: FieldSpec, size: int, cap: int) -> Iterator[Vector]:
    """F_q^size 的全部编码向量，即 K[S] 的全部 q^|S| 个函数"""
    if spec.q**size > cap:
        raise CapacityError(f"{spec.q}^{size} functions exceed the enumeration cap {cap}")
    return itertools.product(range(spec.q), repeat=size)


def _times(spec: FieldSpec, a: Vector, b: Vector) -> Vector:
    mul = spec.mul_codes
    return tuple(mul(x, y) for x, y in zip(a, b))


def _plus(spec: FieldSpec, a: Vector, b: Vector) -> Vector:
    add = spec.add_codes
    return tuple(add(x, y) for x, y in zip(a, b))


def combination_count(ideal: Ideal) -> int:
    """余因子元组 (h_1..h_s) 的个数 q^(|S|·s)"""
    return ideal.ring.spec.q ** (len(ideal.ring) * len(ideal.generators))


def ideal_elements(ideal: Ideal, cap: int) -> FrozenSet[Vector]:
    """集合 {Σ h_i·φ_i : h_i ∈ K[S]}，逐个生成元枚举全部 h 后做和集"""
    if combination_count(ideal) > cap:
        raise CapacityError(f"{combination_count(ideal)} cofactor tuples exceed the oracle cap {cap}")
    ring = ideal.ring
    spec = ring.spec
    functions: List[Vector] = list(all_vectors(spec, len(ring), cap))
    span = {(0,) * len(ring)}
    for generator in ideal.generators:
        phi = codes_of(generator)
        multiples = {_times(spec, h, phi) for h in functions}
        span = {_plus(spec, a, b) for a in span for b in multiples}
    return frozenset(span)


def brute_force_quotient(I: Ideal, J: Ideal, cap: int) -> FrozenSet[Vector]:
    """I : J = {φ : φ·ψ ∈ I 对所有 ψ ∈ J}，φ 取遍 K[S] 全部函数"""
    if I.ring is not J.ring and I.ring != J.ring:
        raise RingMismatchError("quotient operands live over different point sets")
    ring: PointSet = I.ring
    spec = ring.spec
    size = len(ring)
    if spec.q ** (2 * size) > cap:
        raise CapacityError(f"brute-force quotient needs {spec.q}^{2 * size} products, cap {cap}")
    in_i = ideal_elements(I, cap)
    in_j = ideal_elements(J, cap)
    quotient = set()
    for phi in all_vectors(spec, size, cap):
        if all(_times(spec, phi, psi) in in_i for psi in in_j):
            quotient.add(phi)
    return frozenset(quotient)


def members_by_variety(ideal: Ideal, cap: int) -> FrozenSet[Vector]:
    """在 V_S(J) 上处处为零的全部函数（零点定理给出的成员集合）"""
    ring = ideal.ring
    zeros = ideal.variety().indices()
    return frozenset(
        v for v in all_vectors(ring.spec, len(ring), cap) if all(v[i] == 0 for i in zeros)
    )
