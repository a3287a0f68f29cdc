import random

import pytest

from fqforge.core.field import FieldSpec
from fqforge.core.polynomial import Polynomial
from fqforge.core.ring import (
    PointSet,
    RingElement,
    SubsetOfS,
    all_functions,
    constant,
    embed,
    function_count,
    ideal_of_pointset,
    indicator,
    interpolate,
    one,
    subset_indicator,
    variable,
    zero,
)
from fqforge.errors import (
    ArityError,
    CapacityError,
    InconsistentRepresentativeError,
    PointSetError,
    RingMismatchError,
)
from fqforge.validation.verifiers import derive_rng, random_polynomial


def elements(spec, *codes):
    return tuple(spec.from_code(c) for c in codes)


class TestPointSet:
    """点集构造与规范顺序"""

    def test_full_enumeration_order(self):
        f2 = FieldSpec(2)
        ring = PointSet.full(f2, 2)
        assert [[c.code for c in p] for p in ring] == [[0, 0], [0, 1], [1, 0], [1, 1]]
        assert ring.is_full
        assert ring.to_json() == "FULL"

    def test_points_are_sorted(self):
        f3 = FieldSpec(3)
        ring = PointSet.from_codes(f3, 1, [[2], [0]])
        assert [p[0].code for p in ring] == [0, 2]
        assert ring.to_json() == [[[0]], [[2]]]
        assert ring.label() == "2 points"

    def test_rejects_empty_and_duplicates(self):
        f2 = FieldSpec(2)
        with pytest.raises(PointSetError):
            PointSet(f2, 1, ())
        with pytest.raises(PointSetError):
            PointSet.from_codes(f2, 1, [[1], [1]])

    def test_rejects_wrong_arity(self):
        f2 = FieldSpec(2)
        with pytest.raises(ArityError):
            PointSet.from_codes(f2, 2, [[1]])

    def test_index_of_missing_point(self):
        f3 = FieldSpec(3)
        ring = PointSet.from_codes(f3, 1, [[1]])
        with pytest.raises(PointSetError):
            ring.index_of(elements(f3, 2))

    def test_random_proper_subset(self):
        f3 = FieldSpec(3)
        rng = random.Random(11)
        for _ in range(20):
            ring = PointSet.random_proper_subset(f3, 2, rng)
            assert 1 <= len(ring) < 9

    def test_random_proper_subset_of_single_point(self):
        with pytest.raises(PointSetError):
            PointSet.random_proper_subset(FieldSpec(2), 0, random.Random(1))

    def test_product_with_field(self):
        f3 = FieldSpec(3)
        ring = PointSet.from_codes(f3, 1, [[0], [2]])
        lifted = ring.product_with_field()
        assert lifted.nvars == 2
        assert len(lifted) == 6

    def test_too_many_points(self):
        with pytest.raises(CapacityError):
            PointSet.full(FieldSpec(2), 17)


class TestSubsets:
    """S 的子集运算"""

    @pytest.fixture(scope="class")
    def ring(self):
        return PointSet.full(FieldSpec(3), 1)

    def test_set_operations(self, ring):
        a = SubsetOfS.from_indices(ring, [0, 1])
        b = SubsetOfS.from_indices(ring, [1, 2])
        assert (a | b).indices() == [0, 1, 2]
        assert (a & b).indices() == [1]
        assert (a - b).indices() == [0]
        assert a.complement().indices() == [2]
        assert (a & b) <= a
        assert not a <= b

    def test_all_subsets_in_bitmask_order(self, ring):
        subsets = list(SubsetOfS.all_subsets(ring))
        assert len(subsets) == 8
        assert subsets[0].is_empty()
        assert subsets[1].indices() == [0]
        assert subsets[-1] == ring.whole()

    def test_text_and_json(self, ring):
        subset = SubsetOfS.from_points(ring, [elements(ring.spec, 2), elements(ring.spec, 0)])
        assert subset.to_text() == "{(0), (2)}"
        assert subset.to_json() == [[[0]], [[2]]]
        assert elements(ring.spec, 2) in subset
        assert elements(ring.spec, 1) not in subset

    def test_subsets_of_different_sets(self, ring):
        other = PointSet.from_codes(ring.spec, 1, [[0]])
        with pytest.raises(RingMismatchError):
            ring.whole() | other.whole()


class TestRingElements:
    """K[S] 中的元素与嵌入"""

    def test_square_on_units_of_f3(self):
        f3 = FieldSpec(3)
        ring = PointSet.from_codes(f3, 1, [[1], [2]])
        x = Polynomial.variable(f3, 1, 0)
        element = embed(x**2, ring)
        assert element.values == (f3.one, f3.one)
        assert element == one(ring)
        assert element.is_unit()

    def test_field_equation_is_zero(self):
        f2 = FieldSpec(2)
        ring = PointSet.full(f2, 1)
        x = Polynomial.variable(f2, 1, 0)
        assert embed(x**2 + x, ring).is_zero()
        assert embed(x**2 + x, ring).representative.is_zero()

    def test_representative_is_reduced(self):
        f3 = FieldSpec(3)
        ring = PointSet.full(f3, 2)
        x = Polynomial.variable(f3, 2, 0)
        element = embed(x**7, ring)
        assert element.representative.is_reduced()
        assert element == variable(ring, 0)

    @pytest.mark.parametrize(
        "q,code,expected",
        [(2, 1, "x"), (2, 0, "x + 1"), (3, 0, "2*x^2 + 1")],
    )
    def test_indicator_representatives(self, q, code, expected):
        spec = FieldSpec.of_order(q)
        ring = PointSet.full(spec, 1)
        delta = indicator(ring, elements(spec, code))
        assert delta.representative.to_text() == expected
        assert [v.code for v in delta.values] == [int(i == code) for i in range(q)]

    def test_indicator_matches_evaluation(self):
        f4 = FieldSpec.of_order(4)
        ring = PointSet.from_codes(f4, 2, [[0, 1], [2, 3], [3, 3]])
        for index, point in enumerate(ring):
            delta = indicator(ring, point)
            assert ring.evaluate_all(delta.representative) == delta.values
            assert delta.values[index] == f4.one

    def test_interpolate(self):
        f5 = FieldSpec(5)
        ring = PointSet.from_codes(f5, 2, [[0, 0], [1, 3], [4, 2]])
        values = elements(f5, 3, 0, 4)
        element = interpolate(ring, values)
        assert element.values == values
        assert element.representative.is_reduced()
        assert ring.evaluate_all(element.representative) == values

    def test_interpolate_wrong_length(self):
        f2 = FieldSpec(2)
        with pytest.raises(ArityError):
            interpolate(PointSet.full(f2, 1), (f2.one,))

    def test_inconsistent_representative(self):
        f2 = FieldSpec(2)
        ring = PointSet.full(f2, 1)
        with pytest.raises(InconsistentRepresentativeError):
            RingElement(ring, (f2.one, f2.one), Polynomial.zero(f2, 1))

    def test_arithmetic_is_pointwise(self):
        f3 = FieldSpec(3)
        ring = PointSet.full(f3, 1)
        x = variable(ring, 0)
        assert (x * x * x) == x
        assert (x + 1).values == elements(f3, 1, 2, 0)
        assert (1 - x).values == elements(f3, 1, 0, 2)
        assert x.scale(2) == -x
        assert x**0 == one(ring)
        assert constant(ring, 3) == zero(ring)

    def test_compose(self):
        f3 = FieldSpec(3)
        ring = PointSet.full(f3, 2)
        phi = variable(ring, 0) + variable(ring, 1)
        u = Polynomial.from_univariate(f3, [1, 0, 1])
        assert phi.compose(u) == phi * phi + 1

    def test_zero_set_and_support(self):
        f2 = FieldSpec(2)
        ring = PointSet.full(f2, 2)
        xy = variable(ring, 0) * variable(ring, 1)
        assert xy.support().indices() == [3]
        assert xy.zero_set().indices() == [0, 1, 2]

    def test_elements_of_different_rings(self):
        f2 = FieldSpec(2)
        with pytest.raises(RingMismatchError):
            one(PointSet.full(f2, 1)) + one(PointSet.from_codes(f2, 1, [[0]]))

    def test_subset_indicator(self):
        f3 = FieldSpec(3)
        ring = PointSet.full(f3, 1)
        e = subset_indicator(SubsetOfS.from_indices(ring, [0, 2]))
        assert e.values == elements(f3, 1, 0, 1)
        assert e * e == e


class TestEnumeration:
    """K[S] 全体元素与 I(S)"""

    @pytest.mark.parametrize("q,n", [(2, 1), (2, 2), (3, 1)])
    def test_all_functions_are_distinct(self, q, n):
        ring = PointSet.full(FieldSpec.of_order(q), n)
        functions = list(all_functions(ring))
        assert len(functions) == function_count(ring) == q ** (q**n)
        assert len(set(functions)) == len(functions)

    def test_enumeration_cap(self):
        ring = PointSet.full(FieldSpec(3), 2)
        with pytest.raises(CapacityError):
            list(all_functions(ring, cap=1000))

    @pytest.mark.parametrize(
        "q,codes,expected",
        [
            (2, None, ["x^2 + x"]),
            (2, [[1]], ["x^2 + x", "x + 1"]),
            (3, None, ["x^3 + 2*x"]),
        ],
    )
    def test_ideal_of_pointset(self, q, codes, expected):
        spec = FieldSpec.of_order(q)
        ring = PointSet.full(spec, 1) if codes is None else PointSet.from_codes(spec, 1, codes)
        assert [g.to_text() for g in ideal_of_pointset(ring)] == expected

    @pytest.mark.parametrize("codes", [[[0, 0]], [[0, 1], [1, 1], [2, 0]], [[c, 0] for c in range(3)]])
    def test_ideal_of_pointset_vanishes_exactly_on_s(self, codes):
        f3 = FieldSpec(3)
        ring = PointSet.from_codes(f3, 2, codes)
        universe = PointSet.full(f3, 2)
        generators = ideal_of_pointset(ring)
        for point in universe:
            vanishes = all(g.evaluate(point).is_zero() for g in generators)
            assert vanishes == (point in ring)


class TestRingProperties:
    """指示函数族、嵌入同态与代表元的惰性计算"""

    @pytest.fixture(scope="class")
    def proper_subset(self):
        rng = derive_rng(1, "ring-properties")
        return PointSet.random_proper_subset(FieldSpec(3), 2, rng)

    def test_indicator_family_on_proper_subset(self, proper_subset):
        ring = proper_subset
        deltas = [indicator(ring, point) for point in ring]
        total = zero(ring)
        for i, a in enumerate(deltas):
            assert a * a == a
            assert ring.evaluate_all(a.representative) == a.values
            for j, b in enumerate(deltas):
                if i != j:
                    assert (a * b).is_zero()
            total = total + a
        assert total == one(ring)

    def test_embed_is_a_ring_homomorphism(self, proper_subset):
        ring = proper_subset
        spec = ring.spec
        rng = derive_rng(2, "embed", ring)
        for _ in range(200):
            f = random_polynomial(spec, 2, rng, 2 * spec.q)
            g = random_polynomial(spec, 2, rng, 2 * spec.q)
            assert embed(f + g, ring) == embed(f, ring) + embed(g, ring)
            assert embed(f * g, ring) == embed(f, ring) * embed(g, ring)
            assert embed(-f, ring) == -embed(f, ring)
            product = embed(f, ring) * embed(g, ring)
            assert product.representative.is_reduced()
            assert ring.evaluate_all(product.representative) == product.values

    def test_long_chains_resolve_representatives(self):
        f2 = FieldSpec(2)
        ring = PointSet.full(f2, 1)
        x = variable(ring, 0)
        total = zero(ring)
        for _ in range(3000):
            total = total + x
        assert total.is_zero()
        assert total.representative.is_zero()
        chain = one(ring)
        for _ in range(3000):
            chain = chain * (x + 1)
        assert chain.representative.to_text() == "x + 1"

    def test_lift_to_product_with_field(self):
        f3 = FieldSpec(3)
        ring = PointSet.from_codes(f3, 1, [[0], [2]])
        lifted = ring.product_with_field()
        phi = variable(ring, 0) * variable(ring, 0) + 1
        image = phi.lift(lifted)
        assert image.values == tuple(v for v in phi.values for _ in range(3))
        assert image.representative == phi.representative.extend_vars(1)
        assert image == embed(phi.representative.extend_vars(1), lifted)

    def test_lift_rejects_other_sets(self):
        f2 = FieldSpec(2)
        ring = PointSet.full(f2, 1)
        with pytest.raises(ArityError):
            one(ring).lift(PointSet.full(f2, 1))
