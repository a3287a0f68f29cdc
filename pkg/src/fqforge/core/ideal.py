"""K[S] 的理想：V_S 与 I_S 的对应、带证书的成员判定、理想运算

K[S] 中每个理想都是根理想且是主理想，因此理想相等按簇判定（语义相等），
从不比较生成元列表。
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Dict, List, Sequence, Tuple

from ..errors import FqForgeError, InvalidIdealError, NonMemberError, ProperIdealError, RingMismatchError
from .field import FieldSpec
from .polynomial import Polynomial, univariate_ext_gcd
from .ring import (
    PointSet,
    RingElement,
    SubsetOfS,
    embed,
    interpolate,
    one,
    subset_indicator,
    variable,
)
from .ring import zero as zero_element


@dataclass(frozen=True)
class MembershipCertificate:
    """成员证书 (m, h_1..h_s)，满足 Σ h_i·φ_i = φ^m"""

    m: int
    cofactors: Tuple[RingElement, ...]

    def combination(self, ideal: "Ideal") -> RingElement:
        if len(self.cofactors) != len(ideal.generators):
            raise InvalidIdealError(
                f"certificate has {len(self.cofactors)} cofactors for {len(ideal.generators)} generators"
            )
        total = self.cofactors[0] * ideal.generators[0]
        for h, g in zip(self.cofactors[1:], ideal.generators[1:]):
            total = total + h * g
        return total

    def verify(self, phi: RingElement, ideal: "Ideal") -> bool:
        """在 S 上逐点检验恒等式"""
        try:
            return self.combination(ideal) == phi**self.m
        except InvalidIdealError:
            return False

    def identity_text(self, phi: RingElement, ideal: "Ideal") -> str:
        terms = " + ".join(
            f"{h.to_text()}*{g.to_text()}" for h, g in zip(self.cofactors, ideal.generators)
        )
        return f"{terms} = {phi.to_text()}^{self.m}"

    def to_dict(self, phi: RingElement, ideal: "Ideal") -> Dict:
        return {
            "m": self.m,
            "cofactors": [h.representative.to_text() for h in self.cofactors],
            "identity": self.identity_text(phi, ideal),
            "verified": self.verify(phi, ideal),
        }


@dataclass(frozen=True, eq=False)
class Ideal:
    """有限生成理想 J = <φ_1, ..., φ_s> ⊲ K[S]"""

    ring: PointSet
    generators: Tuple[RingElement, ...]

    def __post_init__(self):
        generators = tuple(self.generators)
        if not generators:
            raise InvalidIdealError("an ideal needs at least one generator")
        for g in generators:
            if g.ring is not self.ring and g.ring != self.ring:
                raise RingMismatchError("all generators must share the same point set")
        object.__setattr__(self, "generators", generators)

    # ---- 构造 ----

    @classmethod
    def principal(cls, element: RingElement) -> "Ideal":
        return cls(element.ring, (element,))

    @classmethod
    def of(cls, *generators: RingElement) -> "Ideal":
        return cls(generators[0].ring, tuple(generators))

    @classmethod
    def from_polynomials(cls, ring: PointSet, polynomials: Sequence[Polynomial]) -> "Ideal":
        return cls(ring, tuple(embed(f, ring) for f in polynomials))

    @classmethod
    def unit(cls, ring: PointSet) -> "Ideal":
        """<[1]> = K[S]"""
        return cls.principal(one(ring))

    @classmethod
    def zero(cls, ring: PointSet) -> "Ideal":
        return cls.principal(zero_element(ring))

    def _check(self, other) -> None:
        ring = other.ring
        if ring is not self.ring and ring != self.ring:
            raise RingMismatchError("operands live over different point sets")

    # ---- 对应关系 ----

    @cached_property
    def _variety(self) -> SubsetOfS:
        flags = tuple(
            all(g.values[i].is_zero() for g in self.generators) for i in range(len(self.ring))
        )
        return SubsetOfS(self.ring, flags)

    def variety(self) -> SubsetOfS:
        """V_S(J)：所有生成元的公共零点（有限生成，等于 J 全体的公共零点）"""
        return self._variety

    def is_proper(self) -> bool:
        """弱零点定理：J 为真理想当且仅当 V_S(J) 非空"""
        return not self._variety.is_empty()

    def is_maximal(self) -> bool:
        """S 的点对应 K[S] 的极大理想"""
        return len(self._variety) == 1

    def principal_generator(self) -> RingElement:
        """J = <e>，e 为 V_S(J) 在 S 中补集的特征函数"""
        return subset_indicator(self._variety.complement())

    def contains(self, phi: RingElement) -> bool:
        """零点定理判定：φ ∈ J 当且仅当 φ 在 V_S(J) 上处处为零"""
        self._check(phi)
        return all(phi.values[i].is_zero() for i in self._variety.indices())

    def __contains__(self, phi: RingElement) -> bool:
        return self.contains(phi)

    def issubset(self, other: "Ideal") -> bool:
        self._check(other)
        return all(other.contains(g) for g in self.generators)

    __le__ = issubset

    def equals(self, other: "Ideal") -> bool:
        self._check(other)
        return self._variety == other._variety

    def __eq__(self, other) -> bool:
        if not isinstance(other, Ideal):
            return NotImplemented
        return self.equals(other)

    def __hash__(self) -> int:
        return hash(self._variety.member_flags)

    # ---- 证书 ----

    def certify(self, phi: RingElement) -> MembershipCertificate:
        """逐点构造 m = 1 的证书：取 φ_j(a) ≠ 0 的最小下标 j，令 h_j(a) = φ(a)/φ_j(a)"""
        if not self.contains(phi):
            raise NonMemberError(f"{phi} does not vanish on the variety of the ideal")
        spec = self.ring.spec
        columns = [[spec.zero] * len(self.ring) for _ in self.generators]
        for a in range(len(self.ring)):
            for j, g in enumerate(self.generators):
                if not g.values[a].is_zero():
                    columns[j][a] = phi.values[a] / g.values[a]
                    break
        cofactors = tuple(interpolate(self.ring, column) for column in columns)
        return MembershipCertificate(1, cofactors)

    def single_nonvanishing_witness(self) -> Tuple[RingElement, Tuple[RingElement, ...]]:
        """V_S(J) = ∅ 时给出 φ* = Σ ψ_i·φ_i ∈ J，φ* 在 S 上处处非零"""
        if self.is_proper():
            raise ProperIdealError("the ideal has common zeros, no nowhere-zero element exists")
        spec = self.ring.spec
        selectors = [[spec.zero] * len(self.ring) for _ in self.generators]
        for a in range(len(self.ring)):
            j = next(j for j, g in enumerate(self.generators) if not g.values[a].is_zero())
            selectors[j][a] = spec.one
        psis = tuple(interpolate(self.ring, column) for column in selectors)
        phi_star = psis[0] * self.generators[0]
        for psi, g in zip(psis[1:], self.generators[1:]):
            phi_star = phi_star + psi * g
        return phi_star, psis

    def unit_certificate(self) -> MembershipCertificate:
        """[1] = (φ*)^{q-2}·φ* 展开到生成元上：h_i = ψ_i·(φ*)^{q-2}"""
        phi_star, psis = self.single_nonvanishing_witness()
        power = phi_star ** (self.ring.spec.q - 2)
        return MembershipCertificate(1, tuple(psi * power for psi in psis))

    # ---- 理想运算 ----

    def __add__(self, other: "Ideal") -> "Ideal":
        """I + J：生成元拼接"""
        self._check(other)
        return Ideal(self.ring, self.generators + other.generators)

    def __mul__(self, other: "Ideal") -> "Ideal":
        """I·J：生成元两两相乘"""
        self._check(other)
        return Ideal(self.ring, tuple(a * b for a in self.generators for b in other.generators))

    def intersect(self, other: "Ideal") -> "Ideal":
        """I ∩ J = I_S(V_S(I) ∪ V_S(J))"""
        self._check(other)
        return vanishing_ideal(self._variety | other._variety)

    __and__ = intersect

    def quotient(self, other: "Ideal") -> "Ideal":
        """I : J = I_S(V_S(I) ∖ V_S(J))"""
        self._check(other)
        return vanishing_ideal(self._variety - other._variety)

    def radical(self) -> "Ideal":
        """K[S] 中每个理想都是根理想"""
        return self

    def to_text(self) -> str:
        return "<" + ", ".join(g.to_text() for g in self.generators) + ">"

    def __str__(self) -> str:
        return self.to_text()


def vanishing_ideal(subset: SubsetOfS) -> Ideal:
    """I_S(T) = <e>，e 为 S ∖ T 的特征函数；约定 I_S(∅) = <[1]>"""
    return Ideal.principal(subset_indicator(subset.complement()))


@dataclass(frozen=True)
class RabinowitschLift:
    """S~ = S × F_q 与 J~ = <φ_1, ..., φ_s, [1] - [y]φ>"""

    lifted_ring: PointSet
    lifted_ideal: Ideal

    def __iter__(self):
        return iter((self.lifted_ring, self.lifted_ideal))


def rabinowitsch_lift(ideal: Ideal, phi: RingElement) -> RabinowitschLift:
    """引入新变量 y 并加入生成元 [1] - [y]φ"""
    ideal._check(phi)
    lifted = ideal.ring.product_with_field()
    generators = [g.lift(lifted) for g in ideal.generators]
    y = variable(lifted, ideal.ring.nvars)
    phi_lifted = phi.lift(lifted)
    generators.append(1 - y * phi_lifted)
    return RabinowitschLift(lifted, Ideal(lifted, tuple(generators)))


def rabinowitsch_certificate(ideal: Ideal, phi: RingElement) -> MembershipCertificate:
    """沿 Rabinowitsch 路线得到的证书

    在 S~ 上取单位证书 [1] = Σ p_i·φ_i + Q·([1] - [y]φ)，代入 y := φ^{q-2} 后乘以 φ，
    得 h_i = φ·p_i(x, φ^{q-2})。由于 φ(1 - φ^{q-1}) = φ - φ^q = [0]，指数 m = 1。
    """
    if not ideal.contains(phi):
        raise NonMemberError(f"{phi} does not vanish on the variety of the ideal")
    lifted_ring, lifted_ideal = rabinowitsch_lift(ideal, phi)
    lifted_certificate = lifted_ideal.unit_certificate()
    q = ideal.ring.spec.q
    cofactors = []
    for p_i in lifted_certificate.cofactors[: len(ideal.generators)]:
        values = []
        for a, point in enumerate(ideal.ring.points):
            y_value = phi.values[a] ** (q - 2)
            values.append(phi.values[a] * p_i.value_at(point + (y_value,)))
        cofactors.append(interpolate(ideal.ring, values))
    return MembershipCertificate(1, tuple(cofactors))


@dataclass(frozen=True)
class BezoutWitness:
    """u(x)·x^m + v(x)·(x^q - x) = x"""

    m: int
    q: int
    u: Polynomial
    v: Polynomial

    def identity_holds(self) -> bool:
        x = Polynomial.variable(self.u.spec, 1, 0)
        return self.u * x**self.m + self.v * (x**self.q - x) == x

    def reconstruct(self, phi: RingElement) -> RingElement:
        """φ = u(φ)·φ^m，因为 φ^q - φ = [0]"""
        return phi.compose(self.u) * phi**self.m


def bezout_witness(m: int, spec: FieldSpec) -> BezoutWitness:
    """由扩展欧几里得算法求 x^m 与 x^q - x 的 Bézout 系数"""
    if m < 1:
        raise ValueError(f"exponent must be at least 1, got {m}")
    x = Polynomial.variable(spec, 1, 0)
    g, u, v = univariate_ext_gcd(x**m, x**spec.q - x)
    if g != x:
        raise FqForgeError(f"gcd(x^{m}, x^{spec.q} - x) = {g}, expected x")
    return BezoutWitness(m, spec.q, u, v)


@dataclass(frozen=True)
class ProductSumCheck:
    """[f]^{q-1}、[g]^{q-1} 的两组理想恒等式与簇恒等式"""

    f: RingElement
    g: RingElement
    lhs_unit: Ideal
    rhs_unit: Ideal
    lhs_zero: Ideal
    rhs_zero: Ideal
    variety_unit_holds: bool
    variety_zero_holds: bool

    @property
    def ideal_unit_holds(self) -> bool:
        return self.lhs_unit == self.rhs_unit

    @property
    def ideal_zero_holds(self) -> bool:
        return self.lhs_zero == self.rhs_zero

    @property
    def holds(self) -> bool:
        return (
            self.variety_unit_holds
            and self.variety_zero_holds
            and self.ideal_unit_holds
            and self.ideal_zero_holds
        )

    def failed_parts(self) -> List[str]:
        checks = {
            "variety (1)": self.variety_unit_holds,
            "ideal (1)": self.ideal_unit_holds,
            "variety (2)": self.variety_zero_holds,
            "ideal (2)": self.ideal_zero_holds,
        }
        return [name for name, ok in checks.items() if not ok]


def product_sum_identities(f: RingElement, g: RingElement) -> ProductSumCheck:
    """(1) <F·G - 1> = <F - 1> + <G - 1>；(2) <F·G - F - G> = <f> + <g>，其中 F = f^{q-1}, G = g^{q-1}"""
    if f.ring is not g.ring and f.ring != g.ring:
        raise RingMismatchError("f and g live over different point sets")
    q = f.spec.q
    big_f, big_g = f ** (q - 1), g ** (q - 1)
    lhs_unit = Ideal.principal(big_f * big_g - 1)
    f_unit, g_unit = Ideal.principal(big_f - 1), Ideal.principal(big_g - 1)
    lhs_zero = Ideal.principal(big_f * big_g - big_f - big_g)
    f_zero, g_zero = Ideal.principal(f), Ideal.principal(g)
    return ProductSumCheck(
        f=f,
        g=g,
        lhs_unit=lhs_unit,
        rhs_unit=f_unit + g_unit,
        lhs_zero=lhs_zero,
        rhs_zero=f_zero + g_zero,
        variety_unit_holds=lhs_unit.variety() == (f_unit.variety() & g_unit.variety()),
        variety_zero_holds=lhs_zero.variety() == (f_zero.variety() & g_zero.variety()),
    )

