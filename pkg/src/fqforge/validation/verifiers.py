"""可穷举规模下的定理验证器

每个验证器给定 (输入, seed) 时完全确定：随机数发生器由 seed、命题名与点集指纹派生，
与调用顺序无关，因此同一网格的报告可以逐字节复现。
"""

import itertools
import random
from typing import Callable, Collection, Dict, List, Sequence, Tuple

from ..config import VerifySettings
from ..core.field import FieldElement, FieldSpec
from ..core.ideal import (
    BezoutWitness,
    Ideal,
    bezout_witness,
    product_sum_identities,
    rabinowitsch_certificate,
    rabinowitsch_lift,
    vanishing_ideal,
)
from ..core.polynomial import Polynomial
from ..core.ring import (
    MAX_POINTS,
    PointSet,
    RingElement,
    SubsetOfS,
    all_functions,
    embed,
    indicator,
    one,
    random_element,
    zero,
)
from ..errors import CapacityError, FqForgeError, NonMemberError, ProperIdealError
from ..utils.progress_indicator import VerificationProgress
from .oracles import (
    brute_force_quotient,
    codes_of,
    combination_count,
    ideal_elements,
    members_by_variety,
)
from .report import ReportBuilder, VerificationReport

CORRESPONDENCE = "correspondence"
NULLSTELLENSATZ = "nullstellensatz"
WEAK_NULLSTELLENSATZ = "weak-nullstellensatz"
RADICAL = "radical"
QUOTIENT = "quotient"
PRODUCT_SUM = "product-sum-identities"
ZERO_FUNCTION = "zero-function"
RABINOWITSCH = "rabinowitsch"

# 对应关系验证器枚举 2^|S| 个子集
MAX_CORRESPONDENCE_POINTS = 16

Membership = Callable[[Ideal, RingElement], bool]


def default_membership(ideal: Ideal, phi: RingElement) -> bool:
    return ideal.contains(phi)


def ring_fingerprint(ring: PointSet) -> str:
    return ";".join(",".join(str(c.code) for c in p) for p in ring.points)


def derive_rng(seed: int, statement: str, ring: PointSet | None = None, *salt) -> random.Random:
    """字符串种子经 SHA-512 派生，不受 PYTHONHASHSEED 影响"""
    parts = [str(seed), statement]
    if ring is not None:
        parts += [ring.spec.descriptor(), str(ring.nvars), ring_fingerprint(ring)]
    parts += [str(s) for s in salt]
    return random.Random("|".join(parts))


def random_ideal(ring: PointSet, rng: random.Random, max_generators: int = 3) -> Ideal:
    """s 在 [1, max_generators] 中均匀选取，生成元为均匀随机函数 S → F_q"""
    s = rng.randint(1, max_generators)
    return Ideal(ring, tuple(random_element(ring, rng) for _ in range(s)))


def random_polynomial(
    spec: FieldSpec, nvars: int, rng: random.Random, max_degree: int, max_terms: int = 6
) -> Polynomial:
    """随机稀疏多项式；n = 0 时只有常数项"""
    terms: Dict[Tuple[int, ...], FieldElement] = {}
    for _ in range(rng.randint(0, max_terms)):
        degree = rng.randint(0, max_degree) if nvars else 0
        exponents = [0] * nvars
        for _ in range(degree):
            exponents[rng.randrange(nvars)] += 1
        terms[tuple(exponents)] = FieldElement(spec, rng.randrange(1, spec.q))
    return Polynomial(spec, nvars, terms)


def _vanishes_on(phi: RingElement, indices: Sequence[int]) -> bool:
    return all(phi.values[i].is_zero() for i in indices)


def verify_correspondence(ring: PointSet, settings: VerifySettings | None = None) -> VerificationReport:
    """子集与理想的对应：V_S∘I_S 为恒等、包含关系反转、单点对应极大理想"""
    settings = settings or VerifySettings()
    if len(ring) > MAX_CORRESPONDENCE_POINTS:
        raise CapacityError(
            f"correspondence check enumerates 2^{len(ring)} subsets, limit is 2^{MAX_CORRESPONDENCE_POINTS}"
        )
    report = ReportBuilder.for_ring(CORRESPONDENCE, ring, settings.max_failures_reported)
    subsets = list(SubsetOfS.all_subsets(ring))
    ideals = [vanishing_ideal(t) for t in subsets]

    for t, ideal in zip(subsets, ideals):
        report.count()
        report.check(
            ideal.variety() == t,
            lambda: f"V_S(I_S({t.to_text()})) = {ideal.variety().to_text()}",
        )
        report.check(
            ideal.is_maximal() == (len(t) == 1),
            lambda: f"I_S({t.to_text()}) maximal={ideal.is_maximal()} for |T|={len(t)}",
        )
        report.check(
            ideal.is_proper() == (not t.is_empty()),
            lambda: f"I_S({t.to_text()}) proper={ideal.is_proper()}",
        )

    if 4 ** len(ring) <= settings.subset_pair_cap:
        for (t1, i1), (t2, i2) in itertools.product(zip(subsets, ideals), repeat=2):
            report.count()
            report.check(
                (t1 <= t2) == i2.issubset(i1),
                lambda: f"T1={t1.to_text()}, T2={t2.to_text()}: T1⊆T2 is {t1 <= t2} "
                f"but I_S(T2)⊆I_S(T1) is {i2.issubset(i1)}",
            )
    else:
        # 覆盖对 (T, T ∪ {a})：子集按位掩码顺序排列
        for mask, (t, small) in enumerate(zip(subsets, ideals)):
            for i in range(len(ring)):
                if mask >> i & 1:
                    continue
                large = ideals[mask | (1 << i)]
                report.count()
                report.check(
                    large.issubset(small) and not small.issubset(large),
                    lambda: f"T={t.to_text()}, a={ring.points[i]}: inclusion is not strictly reversed",
                )

    for index in range(len(ring)):
        report.count()
        point_ideal = vanishing_ideal(SubsetOfS.from_indices(ring, [index]))
        report.check(
            point_ideal.is_maximal() and point_ideal.variety().indices() == [index],
            lambda: f"ideal of point #{index} is not the maximal ideal at that point",
        )
    return report.build()


def verify_nullstellensatz(
    ring: PointSet,
    trials: int,
    seed: int,
    settings: VerifySettings | None = None,
    membership: Membership | None = None,
) -> VerificationReport:
    """I_S(V_S(J)) = J、成员判定与定义及暴力组合一致、证书可验证、Rabinowitsch 判据"""
    settings = settings or VerifySettings()
    membership = membership or default_membership
    rng = derive_rng(seed, NULLSTELLENSATZ, ring)
    report = ReportBuilder.for_ring(NULLSTELLENSATZ, ring, settings.max_failures_reported)
    check_lift = len(ring) * ring.spec.q <= settings.rabinowitsch_max_points
    points = [indicator(ring, p) for p in ring.points]

    ideals = [Ideal.zero(ring)] + [random_ideal(ring, rng) for _ in range(trials)]
    for ideal in ideals:
        report.count()
        zeros = ideal.variety().indices()
        if ideal.is_proper():
            closure = vanishing_ideal(ideal.variety())
            report.check(
                closure.equals(ideal) and closure.issubset(ideal) and ideal.issubset(closure),
                lambda: f"J={ideal}: I_S(V_S(J)) = {closure} differs from J",
            )

        oracle = None
        if len(ideal.generators) <= 2 and combination_count(ideal) <= settings.oracle_combination_cap:
            oracle = ideal_elements(ideal, settings.oracle_combination_cap)

        random_probe = random_element(ring, rng)
        probes = list(ideal.generators) + [
            random_probe,
            random_element(ring, rng) * ideal.generators[0],
            ideal.principal_generator(),
            zero(ring),
            one(ring),
        ]
        probes += points
        for phi in probes:
            member = membership(ideal, phi)
            vanishes = _vanishes_on(phi, zeros)
            report.check(
                member == vanishes,
                lambda: f"J={ideal}, phi={phi}: membership says {member}, vanishing on V_S(J) says {vanishes}",
            )
            if oracle is not None:
                in_span = codes_of(phi) in oracle
                report.check(
                    member == in_span,
                    lambda: f"J={ideal}, phi={phi}: membership says {member}, combination oracle says {in_span}",
                )
            if member:
                try:
                    certificate = ideal.certify(phi)
                    certified = certificate.m == 1 and certificate.verify(phi, ideal)
                except NonMemberError:
                    certified = False
                report.check(certified, lambda: f"J={ideal}, phi={phi}: certificate does not verify")

        if check_lift:
            radical_closure = vanishing_ideal(ideal.variety())
            for phi in (random_probe, ideal.principal_generator()):
                lifted_ring, lifted = rabinowitsch_lift(ideal, phi)
                empty = lifted.variety().is_empty()
                expected = membership(radical_closure, phi)
                report.check(
                    empty == expected,
                    lambda: f"J={ideal}, phi={phi}: lifted variety empty={empty}, membership={expected}",
                )
    return report.build()


def verify_weak(
    ring: PointSet, settings: VerifySettings | None = None, seed: int | None = None
) -> VerificationReport:
    """空簇 ⇒ 单位证书存在且可验证；同时检查单个处处非零元素 φ*"""
    settings = settings or VerifySettings()
    seed = settings.seed if seed is None else seed
    report = ReportBuilder.for_ring(WEAK_NULLSTELLENSATZ, ring, settings.max_failures_reported)
    spec = ring.spec
    unit = one(ring)

    functions = spec.q ** len(ring)
    if functions**2 <= settings.exhaustive_pair_cap:
        elements = list(all_functions(ring, settings.exhaustive_pair_cap))
        cases = [Ideal(ring, (a, b)) for a in elements for b in elements]
    else:
        rng = derive_rng(seed, WEAK_NULLSTELLENSATZ, ring)
        cases = [random_ideal(ring, rng) for _ in range(settings.trials)]

    report.count()
    trivial = Ideal.unit(ring).unit_certificate()
    report.check(trivial.cofactors == (unit,), lambda: f"<[1]> certificate is {trivial.cofactors}")

    for ideal in cases:
        report.count()
        if ideal.variety().is_empty():
            try:
                phi_star, selectors = ideal.single_nonvanishing_witness()
                combination = selectors[0] * ideal.generators[0]
                for psi, g in zip(selectors[1:], ideal.generators[1:]):
                    combination = combination + psi * g
                report.check(
                    phi_star.is_unit()
                    and combination == phi_star
                    and Ideal.principal(phi_star).variety().is_empty()
                    and phi_star ** (spec.q - 1) == unit,
                    lambda: f"J={ideal}: witness {phi_star} vanishes somewhere or is not in J",
                )
                certificate = ideal.unit_certificate()
                report.check(
                    certificate.verify(unit, ideal),
                    lambda: f"J={ideal}: unit certificate does not verify",
                )
            except ProperIdealError:
                report.fail(f"J={ideal}: empty variety but the ideal was reported proper")
        else:
            try:
                ideal.unit_certificate()
                report.fail(f"J={ideal}: proper ideal received a unit certificate")
            except ProperIdealError:
                pass
            report.check(not ideal.contains(unit), lambda: f"J={ideal}: proper ideal contains [1]")
    return report.build()


def verify_radical(
    ring: PointSet, trials: int, seed: int, settings: VerifySettings | None = None
) -> VerificationReport:
    """<φ> = <φ^m>，以及由 Bézout 系数重建 φ = u(φ)·φ^m"""
    settings = settings or VerifySettings()
    rng = derive_rng(seed, RADICAL, ring)
    report = ReportBuilder.for_ring(RADICAL, ring, settings.max_failures_reported)
    spec = ring.spec
    witnesses: Dict[int, BezoutWitness] = {}

    cases = [(zero(ring), 1), (one(ring), 2)]
    cases += [(random_element(ring, rng), rng.randint(1, 2 * spec.q)) for _ in range(trials)]
    for phi, m in cases:
        report.count()
        power = phi**m
        principal, powered = Ideal.principal(phi), Ideal.principal(power)
        report.check(
            principal.equals(powered) and powered.contains(phi) and principal.contains(power),
            lambda: f"phi={phi}, m={m}: <phi> and <phi^m> differ",
        )
        report.check(
            powered.radical().equals(principal),
            lambda: f"phi={phi}, m={m}: radical of <phi^m> is not <phi>",
        )
        try:
            report.check(
                powered.certify(phi).verify(phi, powered),
                lambda: f"phi={phi}, m={m}: certificate of phi in <phi^m> does not verify",
            )
        except NonMemberError:
            report.fail(f"phi={phi}, m={m}: phi not certified in <phi^m>")

        if m not in witnesses:
            witnesses[m] = bezout_witness(m, spec)
        witness = witnesses[m]
        report.check(
            witness.identity_holds(),
            lambda: f"m={m}: u*x^m + v*(x^q - x) != x with u={witness.u}, v={witness.v}",
        )
        report.check(
            witness.reconstruct(phi) == phi,
            lambda: f"phi={phi}, m={m}: u(phi)*phi^m != phi",
        )
    return report.build()


def verify_quotient(
    ring: PointSet, settings: VerifySettings | None = None, seed: int | None = None
) -> VerificationReport:
    """I_S(T1) : I_S(T2) = I_S(T1 ∖ T2)，并与按定义枚举的商理想比较"""
    settings = settings or VerifySettings()
    seed = settings.seed if seed is None else seed
    spec = ring.spec
    size = len(ring)
    if spec.q**size > settings.function_enumeration_cap:
        raise CapacityError(
            f"quotient check needs q^|S| <= {settings.function_enumeration_cap}, got {spec.q}^{size}"
        )
    report = ReportBuilder.for_ring(QUOTIENT, ring, settings.max_failures_reported)
    brute = spec.q ** (2 * size) <= settings.function_enumeration_cap

    if 4**size <= settings.subset_pair_cap:
        subsets = list(SubsetOfS.all_subsets(ring))
        pairs = list(itertools.product(subsets, repeat=2))
    else:
        rng = derive_rng(seed, QUOTIENT, ring)
        pairs = [
            (
                SubsetOfS(ring, tuple(rng.random() < 0.5 for _ in range(size))),
                SubsetOfS(ring, tuple(rng.random() < 0.5 for _ in range(size))),
            )
            for _ in range(settings.trials)
        ]

    for t1, t2 in pairs:
        report.count()
        i, j = vanishing_ideal(t1), vanishing_ideal(t2)
        quotient = i.quotient(j)
        difference = t1 - t2
        report.check(
            quotient.equals(vanishing_ideal(difference))
            and quotient.variety() == difference
            and quotient.variety() == (i.variety() - j.variety()),
            lambda: f"T1={t1.to_text()}, T2={t2.to_text()}: V_S(I:J) = {quotient.variety().to_text()}",
        )
        if brute:
            expected = brute_force_quotient(i, j, settings.function_enumeration_cap)
            observed = members_by_variety(quotient, settings.function_enumeration_cap)
            report.check(
                expected == observed,
                lambda: f"T1={t1.to_text()}, T2={t2.to_text()}: brute-force quotient has "
                f"{len(expected)} elements, I:J has {len(observed)}",
            )
    return report.build()


def verify_product_sum_identities(
    ring: PointSet, settings: VerifySettings | None = None, seed: int | None = None
) -> VerificationReport:
    """F = f^{q-1}, G = g^{q-1}：<FG - 1> = <F - 1> + <G - 1> 与 <FG - F - G> = <f> + <g>"""
    settings = settings or VerifySettings()
    seed = settings.seed if seed is None else seed
    report = ReportBuilder.for_ring(PRODUCT_SUM, ring, settings.max_failures_reported)
    functions = ring.spec.q ** len(ring)

    pairs = [(one(ring), one(ring)), (zero(ring), one(ring))]
    if functions**2 <= settings.exhaustive_pair_cap:
        elements = list(all_functions(ring, settings.exhaustive_pair_cap))
        pairs += [(f, g) for f in elements for g in elements]
    else:
        rng = derive_rng(seed, PRODUCT_SUM, ring)
        pairs += [
            (random_element(ring, rng), random_element(ring, rng))
            for _ in range(settings.product_sum_samples)
        ]

    for f, g in pairs:
        report.count()
        outcome = product_sum_identities(f, g)
        report.check(
            outcome.holds,
            lambda: f"f={f}, g={g}: failed {', '.join(outcome.failed_parts())}",
        )
    return report.build()


def verify_zero_function(
    spec: FieldSpec, nvars: int, settings: VerifySettings | None = None, seed: int | None = None
) -> VerificationReport:
    """S = F_q^n 上：V_S(<[f]>) = S ⇔ [f] ≡ [0] ⇔ f 约化为零多项式"""
    settings = settings or VerifySettings()
    seed = settings.seed if seed is None else seed
    if spec.q**nvars > settings.zero_function_max_points:
        raise CapacityError(
            f"zero-function check needs q^n <= {settings.zero_function_max_points}, got {spec.q}^{nvars}"
        )
    ring = PointSet.full(spec, nvars)
    rng = derive_rng(seed, ZERO_FUNCTION, ring)
    report = ReportBuilder.for_ring(ZERO_FUNCTION, ring, settings.max_failures_reported)
    whole = ring.whole()
    q = spec.q

    field_equations = []
    for i in range(nvars):
        x_i = Polynomial.variable(spec, nvars, i)
        field_equations.append(x_i**q - x_i)

    samples = list(field_equations) + [Polynomial.one(spec, nvars), Polynomial.zero(spec, nvars)]
    for _ in range(settings.zero_function_samples):
        if rng.random() < 0.5:
            f = random_polynomial(spec, nvars, rng, 2 * q)
        else:
            # 域方程的组合，是零函数
            f = Polynomial.zero(spec, nvars)
            for equation in field_equations:
                f = f + random_polynomial(spec, nvars, rng, q) * equation
        samples.append(f)

    for f in samples:
        report.count()
        element = embed(f, ring)
        covers = Ideal.principal(element).variety() == whole
        vanishes = element.is_zero()
        report.check(
            covers == vanishes,
            lambda: f"f={f}: V_S(<[f]>) is everything={covers}, [f]=[0] is {vanishes}",
        )
        report.check(
            f.reduce_exponents().is_zero() == vanishes,
            lambda: f"f={f}: reduced form {f.reduce_exponents()} disagrees with [f]=[0] being {vanishes}",
        )
    return report.build()


def verify_rabinowitsch(
    ring: PointSet, settings: VerifySettings | None = None, seed: int | None = None
) -> VerificationReport:
    """V_S~(J~) = ∅ ⇔ φ ∈ I_S(V_S(J))，成员时 Rabinowitsch 证书可验证"""
    settings = settings or VerifySettings()
    seed = settings.seed if seed is None else seed
    spec = ring.spec
    if len(ring) * spec.q > settings.rabinowitsch_max_points:
        raise CapacityError(
            f"S x F_q has {len(ring) * spec.q} points, limit {settings.rabinowitsch_max_points}"
        )
    report = ReportBuilder.for_ring(RABINOWITSCH, ring, settings.max_failures_reported)

    functions = spec.q ** len(ring)
    if functions**3 <= settings.exhaustive_pair_cap:
        elements = list(all_functions(ring, settings.exhaustive_pair_cap))
        cases = [(Ideal(ring, (a,)), phi) for a in elements for phi in elements]
        cases += [
            (Ideal(ring, (a, b)), phi) for a in elements for b in elements for phi in elements
        ]
    else:
        rng = derive_rng(seed, RABINOWITSCH, ring)
        cases = [
            (random_ideal(ring, rng), random_element(ring, rng))
            for _ in range(settings.rabinowitsch_samples)
        ]

    for ideal, phi in cases:
        report.count()
        _, lifted = rabinowitsch_lift(ideal, phi)
        empty = lifted.variety().is_empty()
        member = vanishing_ideal(ideal.variety()).contains(phi)
        report.check(
            empty == member,
            lambda: f"J={ideal}, phi={phi}: lifted variety empty={empty}, phi in I_S(V_S(J))={member}",
        )
        if member:
            try:
                certified = rabinowitsch_certificate(ideal, phi).verify(phi, ideal)
            except (NonMemberError, ProperIdealError):
                certified = False
            report.check(certified, lambda: f"J={ideal}, phi={phi}: lifted certificate does not verify")
    return report.build()


def grid_rings(spec: FieldSpec, nvars: int, settings: VerifySettings, seed: int) -> List[PointSet]:
    """F_q^n 本身加上 random_subsets 个随机真子集"""
    rings = [PointSet.full(spec, nvars)]
    if spec.q**nvars >= 2:
        rng = derive_rng(seed, "grid", None, spec.descriptor(), nvars)
        rings += [
            PointSet.random_proper_subset(spec, nvars, rng) for _ in range(settings.random_subsets)
        ]
    return rings


STATEMENTS = (
    CORRESPONDENCE,
    NULLSTELLENSATZ,
    WEAK_NULLSTELLENSATZ,
    RADICAL,
    QUOTIENT,
    PRODUCT_SUM,
    ZERO_FUNCTION,
    RABINOWITSCH,
)


def verify_all(
    specs: Sequence[FieldSpec],
    nvars_list: Sequence[int],
    trials: int,
    seed: int,
    settings: VerifySettings | None = None,
    progress: VerificationProgress | None = None,
    statements: Collection[str] | None = None,
) -> List[VerificationReport]:
    """按网格顺序运行验证器；超出某个验证器前提的格子跳过该验证器

    statements 为 None 时运行全部命题，否则只运行列出的命题。
    """
    settings = settings or VerifySettings()
    wanted = set(STATEMENTS if statements is None else statements)
    unknown = sorted(wanted - set(STATEMENTS))
    if unknown:
        raise FqForgeError(f"unknown statements: {', '.join(unknown)}")
    if any(n < 0 for n in nvars_list):
        raise FqForgeError(f"variable counts must be natural numbers, got {list(nvars_list)}")
    tasks: List[Tuple[str, str, Callable[[], VerificationReport]]] = []

    for spec in specs:
        for nvars in nvars_list:
            if spec.q**nvars > MAX_POINTS:
                continue
            for ring in grid_rings(spec, nvars, settings, seed):
                label = f"{spec.descriptor()} n={nvars} {ring.label()}"
                size = len(ring)
                if size <= min(settings.correspondence_max_points, MAX_CORRESPONDENCE_POINTS):
                    tasks.append((CORRESPONDENCE, label, lambda r=ring: verify_correspondence(r, settings)))
                tasks.append(
                    (NULLSTELLENSATZ, label, lambda r=ring: verify_nullstellensatz(r, trials, seed, settings))
                )
                tasks.append((WEAK_NULLSTELLENSATZ, label, lambda r=ring: verify_weak(r, settings, seed)))
                tasks.append(
                    (RADICAL, label, lambda r=ring: verify_radical(r, settings.radical_samples, seed, settings))
                )
                if spec.q**size <= settings.function_enumeration_cap:
                    tasks.append((QUOTIENT, label, lambda r=ring: verify_quotient(r, settings, seed)))
                tasks.append(
                    (PRODUCT_SUM, label, lambda r=ring: verify_product_sum_identities(r, settings, seed))
                )
                if size * spec.q <= settings.rabinowitsch_max_points:
                    tasks.append((RABINOWITSCH, label, lambda r=ring: verify_rabinowitsch(r, settings, seed)))
            if spec.q**nvars <= settings.zero_function_max_points:
                tasks.append(
                    (
                        ZERO_FUNCTION,
                        f"{spec.descriptor()} n={nvars}",
                        lambda s=spec, n=nvars: verify_zero_function(s, n, settings, seed),
                    )
                )

    tasks = [task for task in tasks if task[0] in wanted]
    progress = progress or VerificationProgress.get_instance()
    reports = []
    with progress.track(len(tasks)):
        for statement, label, task in tasks:
            reports.append(task())
            progress.advance(f"{statement} {label}")
    return reports
